#include "cauchygeom/bregman.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cauchygeom/errors.hpp"

namespace cauchygeom {

namespace {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Inverts the strictly increasing scalar map F' on an open interval.
double invert_scalar_gradient(const Generator& gen, double eta) {
  const Interval dom = gen.domain().bound(0);
  auto residual = [&](double th) { return gen.gradient(th) - eta; };

  // Seed at the domain midpoint; unbounded sides start one unit in.
  double seed;
  if (dom.finite())
    seed = 0.5 * (dom.lo + dom.hi);
  else if (std::isfinite(dom.lo))
    seed = dom.lo + 1.0;
  else if (std::isfinite(dom.hi))
    seed = dom.hi - 1.0;
  else
    seed = 0.0;

  // Walk toward the boundaries until the residual brackets zero. The
  // gradient of a strictly convex scalar generator is increasing, so a
  // residual that never changes sign means eta is not attained.
  double a = seed;
  {
    double r = residual(a);
    double step = 1.0;
    for (int k = 0; k < 200 && r > 0.0; ++k) {
      const double next = std::isfinite(dom.lo) ? dom.lo + (a - dom.lo) * 0.5 : a - step;
      step *= 2.0;
      if (!(next > dom.lo) || !std::isfinite(next) || next == a) break;
      a = next;
      r = residual(a);
    }
    if (r > 0.0) throw OutOfRangeError(gen.name() + ": eta below the gradient image");
  }
  double b = seed;
  {
    double r = residual(b);
    double step = 1.0;
    for (int k = 0; k < 200 && r < 0.0; ++k) {
      const double next = std::isfinite(dom.hi) ? dom.hi - (dom.hi - b) * 0.5 : b + step;
      step *= 2.0;
      if (!(next < dom.hi) || !std::isfinite(next) || next == b) break;
      b = next;
      r = residual(b);
    }
    if (r < 0.0) throw OutOfRangeError(gen.name() + ": eta above the gradient image");
  }

  double th = 0.5 * (a + b);
  for (int iter = 0; iter < kInversionMaxIter; ++iter) {
    const double r = residual(th);
    if (std::abs(r) <= kInversionEtaTol) return th;
    if (r > 0.0)
      b = th;
    else
      a = th;
    const double next = th - r / gen.hessian(th);
    // fall back to bisection whenever Newton leaves the bracket
    th = (std::isfinite(next) && next > a && next < b) ? next : 0.5 * (a + b);
  }
  std::ostringstream os;
  os << gen.name() << ": gradient inversion did not reach |residual| <= " << kInversionEtaTol
     << " within " << kInversionMaxIter << " iterations";
  throw ConvergenceError(os.str());
}

}  // namespace

double bregman_divergence(const Generator& gen, const Vec& theta1, const Vec& theta2) {
  if (theta1.size() != gen.dim() || theta2.size() != gen.dim())
    throw DimensionError(gen.name() + ": bregman_divergence dimension mismatch");
  const Vec g2 = gen.gradient(theta2);
  Vec diff(theta1.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = theta1[i] - theta2[i];
  return gen.value(theta1) - gen.value(theta2) - dot(diff, g2);
}

double bregman_divergence(const Generator& gen, double theta1, double theta2) {
  return bregman_divergence(gen, Vec{theta1}, Vec{theta2});
}

Vec dual_coord(const Generator& gen, const Vec& theta) { return gen.gradient(theta); }
double dual_coord(const Generator& gen, double theta) { return gen.gradient(theta); }

Vec primal_coord(const Generator& gen, const Vec& eta) {
  if (eta.size() != gen.dim()) throw DimensionError(gen.name() + ": eta dimension mismatch");
  if (gen.has_inverse_gradient()) {
    Vec theta = gen.inverse_gradient(eta);
    if (!gen.domain().contains(theta))
      throw OutOfRangeError(gen.name() + ": eta maps outside the open domain");
    return theta;
  }
  if (gen.dim() != 1)
    throw ParamError(gen.name() +
                     ": numeric gradient inversion is 1-D only and no closed form is installed");
  return Vec{invert_scalar_gradient(gen, eta[0])};
}

double primal_coord(const Generator& gen, double eta) { return primal_coord(gen, Vec{eta})[0]; }

double legendre_dual_value(const Generator& gen, const Vec& eta) {
  const Vec theta = primal_coord(gen, eta);
  return dot(theta, eta) - gen.value(theta);
}

double legendre_dual_value(const Generator& gen, double eta) {
  return legendre_dual_value(gen, Vec{eta});
}

double fenchel_young(const Generator& gen, const Vec& theta1, const Vec& eta2) {
  if (theta1.size() != gen.dim() || eta2.size() != gen.dim())
    throw DimensionError(gen.name() + ": fenchel_young dimension mismatch");
  return gen.value(theta1) + legendre_dual_value(gen, eta2) - dot(theta1, eta2);
}

double fenchel_young(const Generator& gen, double theta1, double eta2) {
  return fenchel_young(gen, Vec{theta1}, Vec{eta2});
}

double jensen_divergence(const Generator& gen, const Vec& theta1, const Vec& theta2,
                         double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError(gen.name() + ": jensen_divergence needs alpha in (0,1)");
  if (theta1.size() != theta2.size()) throw DimensionError("jensen_divergence: size mismatch");
  Vec mid(theta1.size());
  for (std::size_t i = 0; i < mid.size(); ++i)
    mid[i] = (1.0 - alpha) * theta1[i] + alpha * theta2[i];
  return (1.0 - alpha) * gen.value(theta1) + alpha * gen.value(theta2) - gen.value(mid);
}

double jensen_divergence(const Generator& gen, double theta1, double theta2, double alpha) {
  return jensen_divergence(gen, Vec{theta1}, Vec{theta2}, alpha);
}

double jensen_diversity(const Generator& gen, const std::vector<Vec>& points,
                        const Vec& weights) {
  if (points.empty()) throw WeightError("jensen_diversity: no points");
  if (points.size() != weights.size())
    throw WeightError("jensen_diversity: points and weights differ in count");
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw WeightError("jensen_diversity: weights must be positive");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw WeightError("jensen_diversity: weights must sum to 1");
  const std::size_t d = points.front().size();
  Vec mean(d, 0.0);
  double acc = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].size() != d) throw DimensionError("jensen_diversity: point size mismatch");
    acc += weights[k] * gen.value(points[k]);
    for (std::size_t i = 0; i < d; ++i) mean[i] += weights[k] * points[k][i];
  }
  return acc - gen.value(mean);
}

double separable_riemannian_distance(
    const std::vector<std::function<double(double)>>& antiderivatives, const Vec& theta1,
    const Vec& theta2) {
  if (antiderivatives.size() != theta1.size() || theta1.size() != theta2.size())
    throw DimensionError("separable_riemannian_distance: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < theta1.size(); ++i) {
    const double d = antiderivatives[i](theta1[i]) - antiderivatives[i](theta2[i]);
    if (!std::isfinite(d))
      throw DomainError("separable_riemannian_distance: antiderivative not finite at input");
    s += d * d;
  }
  return std::sqrt(s);
}

Matrix eguchi_metric_fd(const Generator& gen, const Vec& theta, double step) {
  const std::size_t n = theta.size();
  auto shifted = [&](std::size_t i, double si, std::size_t j, double sj) {
    Vec t1 = theta, t2 = theta;
    t1[i] += si;
    t2[j] += sj;
    return bregman_divergence(gen, t1, t2);
  };
  Matrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double pp = shifted(i, step, j, step);
      const double pm = shifted(i, step, j, -step);
      const double mp = shifted(i, -step, j, step);
      const double mm = shifted(i, -step, j, -step);
      g(i, j) = -(pp - pm - mp + mm) / (4.0 * step * step);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (g(i, j) + g(j, i));
      g(i, j) = g(j, i) = v;
    }
  return g;
}

double eguchi_metric_fd(const Generator& gen, double theta, double step) {
  return eguchi_metric_fd(gen, Vec{theta}, step)(0, 0);
}

}  // namespace cauchygeom
