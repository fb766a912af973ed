#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cauchygeom/linalg.hpp"

namespace cauchygeom {

// Open interval; infinite bounds allowed.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double x) const { return x > lo && x < hi; }
  bool finite() const;
};

// Open box in R^D, optionally cut down further by an open-set predicate
// (e.g. sum(theta) < 1 for the simplex interior).
class Domain {
 public:
  explicit Domain(std::vector<Interval> box, std::function<bool(const Vec&)> extra = nullptr);
  static Domain interval(double lo, double hi);
  static Domain box(std::size_t dim, double lo, double hi);

  std::size_t dim() const { return box_.size(); }
  const Interval& bound(std::size_t i) const { return box_[i]; }
  bool contains(const Vec& p) const;
  bool contains(double x) const;

 private:
  std::vector<Interval> box_;
  std::function<bool(const Vec&)> extra_;
};

// Legendre-type convex function: value, gradient and Hessian on an open
// convex domain, plus the closed-form inverse gradient when one exists.
// Immutable after construction; safe to share across threads.
class Generator {
 public:
  using ValueFn = std::function<double(const Vec&)>;
  using GradFn = std::function<Vec(const Vec&)>;
  using HessFn = std::function<Matrix(const Vec&)>;
  using InvGradFn = std::function<Vec(const Vec&)>;

  Generator(std::string name, Domain domain, ValueFn value, GradFn gradient, HessFn hessian,
            InvGradFn inverse_gradient = nullptr);

  // Builds a 1-D generator from scalar callables.
  static Generator scalar(std::string name, Interval domain,
                          std::function<double(double)> value,
                          std::function<double(double)> gradient,
                          std::function<double(double)> hessian,
                          std::function<double(double)> inverse_gradient = nullptr);

  const std::string& name() const { return name_; }
  const Domain& domain() const { return domain_; }
  std::size_t dim() const { return domain_.dim(); }

  // Evaluation throws DomainError outside the open domain.
  double value(const Vec& theta) const;
  Vec gradient(const Vec& theta) const;
  Matrix hessian(const Vec& theta) const;

  bool has_inverse_gradient() const { return static_cast<bool>(inverse_gradient_); }
  // Closed-form inverse of the gradient map; the installed callable throws
  // OutOfRangeError when eta lies outside the open gradient image.
  Vec inverse_gradient(const Vec& eta) const;

  // Scalar forms for 1-D generators.
  double value(double theta) const;
  double gradient(double theta) const;
  double hessian(double theta) const;
  double inverse_gradient(double eta) const;

 private:
  void check(const Vec& theta) const;

  std::string name_;
  Domain domain_;
  ValueFn value_;
  GradFn gradient_;
  HessFn hessian_;
  InvGradFn inverse_gradient_;
};

// A primal point together with its dual coordinate eta = grad F(theta).
struct DualPair {
  Vec theta;
  Vec eta;
};

DualPair dual_pair_from_theta(const Generator& gen, Vec theta);
DualPair dual_pair_from_eta(const Generator& gen, Vec eta);

}  // namespace cauchygeom
