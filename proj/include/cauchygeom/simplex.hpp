#pragma once

#include "cauchygeom/generator.hpp"
#include "cauchygeom/linalg.hpp"

namespace cauchygeom {

// Probability vector in the open standard simplex: positive entries summing
// to 1 within 1e-12.
struct SimplexPoint {
  explicit SimplexPoint(Vec probs);
  Vec probs;
  std::size_t dim() const { return probs.size(); }
};

// Positive measure: positive entries, no normalization constraint.
struct PositiveMeasurePoint {
  explicit PositiveMeasurePoint(Vec weights);
  Vec weights;
  std::size_t dim() const { return weights.size(); }
};

// Fisher information of the categorical family: diag(1/p_1, ..., 1/p_d).
Matrix categorical_fim(const SimplexPoint& p);

// Two-square-root embedding (2 sqrt(p_1), ..., 2 sqrt(p_d)); lands on the
// positive orthant of the radius-2 sphere.
Vec sphere_embedding(const SimplexPoint& p);

// Geodesic (Rao) distance 2 arccos(sum_i sqrt(p_i q_i)); the argument is the
// Bhattacharyya coefficient, clamped to [-1,1] against round-off.
double rao_distance(const SimplexPoint& p, const SimplexPoint& q);

double bhattacharyya_coeff(const SimplexPoint& p, const SimplexPoint& q);

// ||sqrt(p) - sqrt(q)||_2 on positive measures.
double hellinger_distance(const PositiveMeasurePoint& p, const PositiveMeasurePoint& q);

// Chordal distance of the two-square-root embedding: 2 * Hellinger.
double extended_rao_distance(const PositiveMeasurePoint& p, const PositiveMeasurePoint& q);

// Negentropy generator of the categorical family with d atoms in the D=d-1
// free coordinates (theta_0 = 1 - sum theta_i implicit):
//   F(theta) = sum_{i=0}^{D} theta_i log theta_i
// Gradient log(theta_i/theta_0), Hessian delta_ij/theta_i + 1/theta_0,
// inverse gradient the softmax theta_i = e^{eta_i} / (1 + sum_j e^{eta_j}).
// Its Bregman divergence is the discrete KL divergence.
Generator categorical_mixture_generator(std::size_t d);

}  // namespace cauchygeom
