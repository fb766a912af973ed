#include "cauchygeom/cone.hpp"

#include <cmath>

#include "cauchygeom/errors.hpp"

namespace cauchygeom {

OrthantPoint::OrthantPoint(Vec x_in) : x(std::move(x_in)) {
  if (x.empty()) throw ParamError("OrthantPoint: empty vector");
  for (double v : x)
    if (!(v > 0.0) || !std::isfinite(v))
      throw ParamError("OrthantPoint: entries must be finite and > 0");
}

SpdPoint::SpdPoint(Matrix p_in) : p(std::move(p_in)) {
  if (p.dim() == 0) throw ParamError("SpdPoint: empty matrix");
  if (!p.is_symmetric(1e-12)) throw ParamError("SpdPoint: matrix must be symmetric");
  if (!p.cholesky()) throw NotPositiveDefiniteError("SpdPoint: matrix is not positive-definite");
}

Generator orthant_generator(std::size_t d) {
  if (d < 1) throw ParamError("orthant_generator: need d >= 1");
  Domain dom = Domain::box(d, 0.0, std::numeric_limits<double>::infinity());
  auto value = [](const Vec& x) {
    double s = 0.0;
    for (double v : x) s -= std::log(v);
    return s;
  };
  auto gradient = [](const Vec& x) {
    Vec g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = -1.0 / x[i];
    return g;
  };
  auto hessian = [](const Vec& x) {
    Vec h(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) h[i] = 1.0 / (x[i] * x[i]);
    return Matrix::diagonal(h);
  };
  auto inverse = [](const Vec& eta) {
    Vec x(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i) {
      if (!(eta[i] < 0.0))
        throw OutOfRangeError("orthant generator: dual coordinates must be negative");
      x[i] = -1.0 / eta[i];
    }
    return x;
  };
  return Generator("orthant(" + std::to_string(d) + ")", std::move(dom), std::move(value),
                   std::move(gradient), std::move(hessian), std::move(inverse));
}

double spd_generator_value(const SpdPoint& p) {
  const double d = static_cast<double>(p.dim());
  return -0.5 * (d + 1.0) * p.p.log_det_spd();
}

Matrix spd_generator_gradient(const SpdPoint& p) {
  const double d = static_cast<double>(p.dim());
  Matrix g = p.p.inverse_spd();
  const double c = -0.5 * (d + 1.0);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) g(i, j) *= c;
  return g;
}

double halfdet_identity_gap(const Generator& gen, const Vec& x1, const Vec& x2) {
  auto residue = [&gen](const Vec& x) {
    return gen.value(x) - 0.5 * gen.hessian(x).log_det_spd();
  };
  return residue(x1) - residue(x2);
}

}  // namespace cauchygeom
