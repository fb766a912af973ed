#pragma once

#include <functional>

#include "cauchygeom/linalg.hpp"

namespace cauchygeom::fd {

// Central differences with one Richardson extrapolation step.
// Steps are scaled by max(1, |x|) of the coordinate being perturbed.
inline constexpr double kGradStep = 1e-5;
inline constexpr double kHessStep = 1e-4;

double derivative(const std::function<double(double)>& f, double x,
                  double base_step = kGradStep);

double second_derivative(const std::function<double(double)>& f, double x,
                         double base_step = kHessStep);

Vec gradient(const std::function<double(const Vec&)>& f, const Vec& x,
             double base_step = kGradStep);

// Hessian of a scalar field obtained by differencing its gradient map;
// result is symmetrized.
Matrix hessian_of_gradient(const std::function<Vec(const Vec&)>& grad, const Vec& x,
                           double base_step = kGradStep);

// Jacobian of a map R^n -> R^m; rows index output components.
std::vector<Vec> jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x,
                          double base_step = kGradStep);

}  // namespace cauchygeom::fd
