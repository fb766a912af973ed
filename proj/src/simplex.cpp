#include "cauchygeom/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "cauchygeom/errors.hpp"

namespace cauchygeom {

SimplexPoint::SimplexPoint(Vec probs_in) : probs(std::move(probs_in)) {
  if (probs.empty()) throw ParamError("SimplexPoint: empty vector");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p > 0.0) || !std::isfinite(p))
      throw ParamError("SimplexPoint: entries must be finite and > 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw ParamError("SimplexPoint: entries must sum to 1 within 1e-12");
}

PositiveMeasurePoint::PositiveMeasurePoint(Vec weights_in) : weights(std::move(weights_in)) {
  if (weights.empty()) throw ParamError("PositiveMeasurePoint: empty vector");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w))
      throw ParamError("PositiveMeasurePoint: entries must be finite and > 0");
}

Matrix categorical_fim(const SimplexPoint& p) {
  Vec d(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) d[i] = 1.0 / p.probs[i];
  return Matrix::diagonal(d);
}

Vec sphere_embedding(const SimplexPoint& p) {
  Vec e(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) e[i] = 2.0 * std::sqrt(p.probs[i]);
  return e;
}

double bhattacharyya_coeff(const SimplexPoint& p, const SimplexPoint& q) {
  if (p.dim() != q.dim()) throw DimensionError("bhattacharyya_coeff: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) s += std::sqrt(p.probs[i] * q.probs[i]);
  return s;
}

double rao_distance(const SimplexPoint& p, const SimplexPoint& q) {
  if (p.dim() != q.dim()) throw DimensionError("rao_distance: dimension mismatch");
  const double bc = std::clamp(bhattacharyya_coeff(p, q), -1.0, 1.0);
  return 2.0 * std::acos(bc);
}

double hellinger_distance(const PositiveMeasurePoint& p, const PositiveMeasurePoint& q) {
  if (p.dim() != q.dim()) throw DimensionError("hellinger_distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double d = std::sqrt(p.weights[i]) - std::sqrt(q.weights[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

double extended_rao_distance(const PositiveMeasurePoint& p, const PositiveMeasurePoint& q) {
  return 2.0 * hellinger_distance(p, q);
}

Generator categorical_mixture_generator(std::size_t d) {
  if (d < 2) throw ParamError("categorical_mixture_generator: need d >= 2 atoms");
  const std::size_t free_dim = d - 1;
  auto theta0 = [](const Vec& t) {
    double s = 0.0;
    for (double x : t) s += x;
    return 1.0 - s;
  };
  Domain dom(std::vector<Interval>(free_dim, Interval{0.0, 1.0}),
             [theta0](const Vec& t) { return theta0(t) > 0.0; });
  auto value = [theta0](const Vec& t) {
    double s = 0.0;
    for (double x : t) s += x * std::log(x);
    const double t0 = theta0(t);
    return s + t0 * std::log(t0);
  };
  auto gradient = [theta0](const Vec& t) {
    const double lt0 = std::log(theta0(t));
    Vec g(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) g[i] = std::log(t[i]) - lt0;
    return g;
  };
  auto hessian = [theta0](const Vec& t) {
    const double inv0 = 1.0 / theta0(t);
    Matrix h(t.size(), inv0);
    for (std::size_t i = 0; i < t.size(); ++i) h(i, i) += 1.0 / t[i];
    return h;
  };
  auto inverse = [](const Vec& eta) {
    // overflow-safe softmax against the implicit eta_0 = 0
    double m = 0.0;
    for (double e : eta) m = std::max(m, e);
    double denom = std::exp(-m);
    Vec t(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i) {
      t[i] = std::exp(eta[i] - m);
      denom += t[i];
    }
    for (double& x : t) x /= denom;
    return t;
  };
  return Generator("categorical(" + std::to_string(d) + ")", std::move(dom), std::move(value),
                   std::move(gradient), std::move(hessian), std::move(inverse));
}

}  // namespace cauchygeom
