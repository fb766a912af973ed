#pragma once

#include <stdexcept>
#include <string>

namespace cauchygeom {

// Invalid construction arguments: nonpositive scale, coincident mixture
// components, bad quadrature settings, ...
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Point outside the open domain of a generator or operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dual coordinate outside the open image of the gradient map.
class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Iterative Legendre inversion hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixture weights not positive or not summing to one.
class WeightError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPositiveDefiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Panel doubling hit the refinement cap before meeting the gap tolerance.
// Carries the last estimate and the last inter-refinement gap.
class NoConvergenceError : public std::runtime_error {
 public:
  NoConvergenceError(const std::string& what, double estimate, double gap)
      : std::runtime_error(what), estimate(estimate), gap(gap) {}
  double estimate;
  double gap;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cauchygeom
