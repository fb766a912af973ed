#include "cauchygeom/generator.hpp"

#include <cmath>
#include <sstream>

#include "cauchygeom/bregman.hpp"
#include "cauchygeom/errors.hpp"

namespace cauchygeom {

bool Interval::finite() const { return std::isfinite(lo) && std::isfinite(hi); }

Domain::Domain(std::vector<Interval> box, std::function<bool(const Vec&)> extra)
    : box_(std::move(box)), extra_(std::move(extra)) {
  if (box_.empty()) throw ParamError("Domain: empty box");
  for (const Interval& iv : box_)
    if (!(iv.lo < iv.hi)) throw ParamError("Domain: interval bounds must satisfy lo < hi");
}

Domain Domain::interval(double lo, double hi) { return Domain({Interval{lo, hi}}); }

Domain Domain::box(std::size_t dim, double lo, double hi) {
  return Domain(std::vector<Interval>(dim, Interval{lo, hi}));
}

bool Domain::contains(const Vec& p) const {
  if (p.size() != box_.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i]) || !box_[i].contains(p[i])) return false;
  }
  return extra_ ? extra_(p) : true;
}

bool Domain::contains(double x) const { return contains(Vec{x}); }

Generator::Generator(std::string name, Domain domain, ValueFn value, GradFn gradient,
                     HessFn hessian, InvGradFn inverse_gradient)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)),
      inverse_gradient_(std::move(inverse_gradient)) {
  if (!value_ || !gradient_ || !hessian_)
    throw ParamError("Generator: value, gradient and hessian are required");
}

Generator Generator::scalar(std::string name, Interval domain,
                            std::function<double(double)> value,
                            std::function<double(double)> gradient,
                            std::function<double(double)> hessian,
                            std::function<double(double)> inverse_gradient) {
  InvGradFn inv = nullptr;
  if (inverse_gradient) {
    inv = [f = std::move(inverse_gradient)](const Vec& eta) { return Vec{f(eta[0])}; };
  }
  return Generator(
      std::move(name), Domain({domain}),
      [f = std::move(value)](const Vec& t) { return f(t[0]); },
      [f = std::move(gradient)](const Vec& t) { return Vec{f(t[0])}; },
      [f = std::move(hessian)](const Vec& t) { return Matrix::diagonal({f(t[0])}); },
      std::move(inv));
}

void Generator::check(const Vec& theta) const {
  if (theta.size() != dim()) {
    std::ostringstream os;
    os << name_ << ": point has dimension " << theta.size() << ", domain has " << dim();
    throw DimensionError(os.str());
  }
  if (!domain_.contains(theta)) {
    std::ostringstream os;
    os << name_ << ": point outside the open domain";
    throw DomainError(os.str());
  }
}

double Generator::value(const Vec& theta) const {
  check(theta);
  return value_(theta);
}

Vec Generator::gradient(const Vec& theta) const {
  check(theta);
  return gradient_(theta);
}

Matrix Generator::hessian(const Vec& theta) const {
  check(theta);
  return hessian_(theta);
}

Vec Generator::inverse_gradient(const Vec& eta) const {
  if (!inverse_gradient_)
    throw ParamError(name_ + ": no closed-form inverse gradient installed");
  if (eta.size() != dim()) throw DimensionError(name_ + ": eta dimension mismatch");
  return inverse_gradient_(eta);
}

double Generator::value(double theta) const { return value(Vec{theta}); }
double Generator::gradient(double theta) const { return gradient(Vec{theta})[0]; }
double Generator::hessian(double theta) const { return hessian(Vec{theta})(0, 0); }
double Generator::inverse_gradient(double eta) const { return inverse_gradient(Vec{eta})[0]; }

DualPair dual_pair_from_theta(const Generator& gen, Vec theta) {
  Vec eta = gen.gradient(theta);
  return DualPair{std::move(theta), std::move(eta)};
}

DualPair dual_pair_from_eta(const Generator& gen, Vec eta) {
  Vec theta = primal_coord(gen, eta);
  return DualPair{std::move(theta), std::move(eta)};
}

}  // namespace cauchygeom
