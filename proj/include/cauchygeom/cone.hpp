#pragma once

#include "cauchygeom/generator.hpp"
#include "cauchygeom/linalg.hpp"

namespace cauchygeom {

// Point of the positive orthant cone.
struct OrthantPoint {
  explicit OrthantPoint(Vec x);
  Vec x;
  std::size_t dim() const { return x.size(); }
};

// Symmetric positive-definite matrix; symmetry within 1e-12 and
// positive-definiteness (Cholesky) checked at construction.
struct SpdPoint {
  explicit SpdPoint(Matrix p);
  Matrix p;
  std::size_t dim() const { return p.dim(); }
};

// Barrier generator of the orthant cone: F(x) = -sum log x_i,
// gradient -1/x_i, Hessian diag(1/x_i^2), inverse gradient x_i = -1/eta_i
// (eta_i < 0 required).
Generator orthant_generator(std::size_t d);

// Log-characteristic generator of the SPD cone: -((d+1)/2) log det P.
double spd_generator_value(const SpdPoint& p);

// Gradient in the Frobenius pairing: -((d+1)/2) P^{-1}.
Matrix spd_generator_gradient(const SpdPoint& p);

// [F(x1) - 1/2 log det Hess F(x1)] - [F(x2) - 1/2 log det Hess F(x2)].
// Identically zero for generators of homogeneous cones, where
// F = 1/2 log det Hess F holds up to an additive constant.
double halfdet_identity_gap(const Generator& gen, const Vec& x1, const Vec& x2);

}  // namespace cauchygeom
