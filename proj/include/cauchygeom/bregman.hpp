#pragma once

#include <functional>
#include <vector>

#include "cauchygeom/generator.hpp"
#include "cauchygeom/linalg.hpp"

namespace cauchygeom {

// B_F(theta1 : theta2) = F(theta1) - F(theta2) - <theta1 - theta2, grad F(theta2)>
double bregman_divergence(const Generator& gen, const Vec& theta1, const Vec& theta2);
double bregman_divergence(const Generator& gen, double theta1, double theta2);

// eta(theta) = grad F(theta)
Vec dual_coord(const Generator& gen, const Vec& theta);
double dual_coord(const Generator& gen, double theta);

// theta(eta) = grad F*(eta). Uses the closed-form inverse gradient when one
// is installed; otherwise inverts the monotone scalar gradient by Newton's
// method seeded at the domain midpoint with bisection safeguarding (1-D only).
// Throws OutOfRangeError when eta is not attained on the open domain and
// ConvergenceError past the iteration cap.
Vec primal_coord(const Generator& gen, const Vec& eta);
double primal_coord(const Generator& gen, double eta);

// F*(eta) = <theta(eta), eta> - F(theta(eta))
double legendre_dual_value(const Generator& gen, const Vec& eta);
double legendre_dual_value(const Generator& gen, double eta);

// Y_F(theta1 : eta2) = F(theta1) + F*(eta2) - <theta1, eta2>
double fenchel_young(const Generator& gen, const Vec& theta1, const Vec& eta2);
double fenchel_young(const Generator& gen, double theta1, double eta2);

// (1-alpha) F(theta1) + alpha F(theta2) - F((1-alpha) theta1 + alpha theta2)
double jensen_divergence(const Generator& gen, const Vec& theta1, const Vec& theta2,
                         double alpha);
double jensen_divergence(const Generator& gen, double theta1, double theta2, double alpha);

// sum_i w_i F(theta_i) - F(sum_i w_i theta_i); weights positive, summing to 1.
double jensen_diversity(const Generator& gen, const std::vector<Vec>& points,
                        const Vec& weights);

// Length-space distance of a separable Hessian metric diag(F_i''):
// sqrt(sum_i (h_i(theta1^i) - h_i(theta2^i))^2) where h_i is an antiderivative
// of sqrt(F_i'').
double separable_riemannian_distance(
    const std::vector<std::function<double(double)>>& antiderivatives, const Vec& theta1,
    const Vec& theta2);

// Metric recovered from the divergence: g_ij = -d/dtheta1_i d/dtheta2_j
// B_F(theta1 : theta2) at theta1 = theta2 = theta, by a central
// finite-difference stencil of step `step`. Agrees with the Hessian to O(step^2).
Matrix eguchi_metric_fd(const Generator& gen, const Vec& theta, double step);
double eguchi_metric_fd(const Generator& gen, double theta, double step);

// Residual tolerance on the eta equation and iteration cap for the Newton
// inversion path.
inline constexpr double kInversionEtaTol = 1e-12;
inline constexpr int kInversionMaxIter = 100;

}  // namespace cauchygeom
