#pragma once

namespace cauchygeom {

// One Cauchy density p_{l,s}(x) = s / (pi (s^2 + (x-l)^2)).
struct CauchyParam {
  CauchyParam(double location, double scale);

  double location;
  double scale;

  double pdf(double x) const;
  // Differential entropy log(4 pi s); location-invariant.
  double entropy() const;

  friend bool operator==(const CauchyParam&, const CauchyParam&) = default;
};

// KL divergence from the Cauchy density p0 to the two-component mixture
// m_theta = (1-theta) p0 + theta p1, in closed form:
//
//   log( ((l0-l1)^2 + (s0+s1)^2) /
//        ( (1-theta)(s0^2+s1^2+(l0-l1)^2) + 2 theta s0 s1
//          + 2 sqrt(s0^2 s1^2 + s0 s1 ((s0-s1)^2+(l0-l1)^2) theta (1-theta)) ) )
//
// Valid for theta in [0,1]; zero at theta = 0 and for p0 == p1.
double kl_cauchy_to_mixture(const CauchyParam& p0, const CauchyParam& p1, double theta);

// Skewed theta-Jensen-Shannon divergence
//   (1-theta) KL(p0 : m_theta) + theta KL(p1 : m_theta),
// where the second term is evaluated as KL(p1 : m'_{1-theta}) with the
// components swapped.
double js_skewed_cauchy(const CauchyParam& p0, const CauchyParam& p1, double theta);

// Jensen-Shannon divergence (theta = 1/2):
//   log( 2 sqrt((l0-l1)^2+(s0+s1)^2) / (sqrt((l0-l1)^2+(s0+s1)^2) + 2 sqrt(s0 s1)) )
double js_half_cauchy(const CauchyParam& p0, const CauchyParam& p1);

}  // namespace cauchygeom
