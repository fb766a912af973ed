#include "cauchygeom/finite_diff.hpp"

#include <cmath>
#include <cstdlib>

namespace cauchygeom::fd {

namespace {

double scaled(double base, double x) { return base * std::max(1.0, std::abs(x)); }

}  // namespace

double derivative(const std::function<double(double)>& f, double x, double base_step) {
  const double h = scaled(base_step, x);
  auto central = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

double second_derivative(const std::function<double(double)>& f, double x, double base_step) {
  const double h = scaled(base_step, x);
  auto central = [&](double s) { return (f(x + s) - 2.0 * f(x) + f(x - s)) / (s * s); };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

Vec gradient(const std::function<double(const Vec&)>& f, const Vec& x, double base_step) {
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = scaled(base_step, x[i]);
    auto central = [&](double s) {
      Vec xp = x, xm = x;
      xp[i] += s;
      xm[i] -= s;
      return (f(xp) - f(xm)) / (2.0 * s);
    };
    g[i] = (4.0 * central(h / 2.0) - central(h)) / 3.0;
  }
  return g;
}

Matrix hessian_of_gradient(const std::function<Vec(const Vec&)>& grad, const Vec& x,
                           double base_step) {
  const std::size_t n = x.size();
  Matrix h(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double s0 = scaled(base_step, x[j]);
    auto column = [&](double s) {
      Vec xp = x, xm = x;
      xp[j] += s;
      xm[j] -= s;
      Vec gp = grad(xp), gm = grad(xm);
      Vec c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = (gp[i] - gm[i]) / (2.0 * s);
      return c;
    };
    Vec c1 = column(s0), c2 = column(s0 / 2.0);
    for (std::size_t i = 0; i < n; ++i) h(i, j) = (4.0 * c2[i] - c1[i]) / 3.0;
  }
  // symmetrize
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (h(i, j) + h(j, i));
      h(i, j) = h(j, i) = v;
    }
  return h;
}

std::vector<Vec> jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x,
                          double base_step) {
  const std::size_t n = x.size();
  const std::size_t m = f(x).size();
  std::vector<Vec> jac(m, Vec(n));
  for (std::size_t j = 0; j < n; ++j) {
    const double s0 = scaled(base_step, x[j]);
    auto column = [&](double s) {
      Vec xp = x, xm = x;
      xp[j] += s;
      xm[j] -= s;
      Vec fp = f(xp), fm = f(xm);
      Vec c(m);
      for (std::size_t i = 0; i < m; ++i) c[i] = (fp[i] - fm[i]) / (2.0 * s);
      return c;
    };
    Vec c1 = column(s0), c2 = column(s0 / 2.0);
    for (std::size_t i = 0; i < m; ++i) jac[i][j] = (4.0 * c2[i] - c1[i]) / 3.0;
  }
  return jac;
}

}  // namespace cauchygeom::fd
