#include "cauchygeom/cauchy.hpp"

#include <cmath>
#include <numbers>

#include "cauchygeom/errors.hpp"

namespace cauchygeom {

namespace {
constexpr double kPi = std::numbers::pi;
}

CauchyParam::CauchyParam(double location, double scale) : location(location), scale(scale) {
  if (!std::isfinite(location)) throw ParamError("CauchyParam: location must be finite");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw ParamError("CauchyParam: scale must be finite and > 0");
}

double CauchyParam::pdf(double x) const {
  const double d = x - location;
  return scale / (kPi * (scale * scale + d * d));
}

double CauchyParam::entropy() const { return std::log(4.0 * kPi * scale); }

double kl_cauchy_to_mixture(const CauchyParam& p0, const CauchyParam& p1, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw DomainError("kl_cauchy_to_mixture: theta must lie in [0,1]");
  const double dl = p0.location - p1.location;
  const double s0 = p0.scale, s1 = p1.scale;
  const double num = dl * dl + (s0 + s1) * (s0 + s1);
  double root_arg =
      s0 * s0 * s1 * s1 + s0 * s1 * ((s0 - s1) * (s0 - s1) + dl * dl) * theta * (1.0 - theta);
  // round-off guard at theta in {0,1}
  if (root_arg < 0.0 && root_arg > -1e-14) root_arg = 0.0;
  const double den = (1.0 - theta) * (s0 * s0 + s1 * s1 + dl * dl) + 2.0 * theta * s0 * s1 +
                     2.0 * std::sqrt(root_arg);
  return std::log(num / den);
}

double js_skewed_cauchy(const CauchyParam& p0, const CauchyParam& p1, double theta) {
  if (!(theta > 0.0 && theta < 1.0))
    throw DomainError("js_skewed_cauchy: theta must lie in (0,1)");
  return (1.0 - theta) * kl_cauchy_to_mixture(p0, p1, theta) +
         theta * kl_cauchy_to_mixture(p1, p0, 1.0 - theta);
}

double js_half_cauchy(const CauchyParam& p0, const CauchyParam& p1) {
  const double dl = p0.location - p1.location;
  const double s = std::sqrt(dl * dl + (p0.scale + p1.scale) * (p0.scale + p1.scale));
  return std::log(2.0 * s / (s + 2.0 * std::sqrt(p0.scale * p1.scale)));
}

}  // namespace cauchygeom
