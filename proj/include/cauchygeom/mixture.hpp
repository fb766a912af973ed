#pragma once

#include "cauchygeom/cauchy.hpp"
#include "cauchygeom/generator.hpp"

namespace cauchygeom {

// The order-1 mixture family { (1-theta) p_{l0,s0} + theta p_{l1,s1} :
// theta in (0,1) } of two distinct prescribed Cauchy components.
//
// Its Shannon negentropy F(theta) = -h[m_theta] is available in closed form
// together with its derivative (the dual coordinate eta), second derivative
// (the Hessian metric), convex conjugate, and the KL / Jeffreys /
// Jensen-Shannon divergences between members, so the whole dually flat
// geometry of the family is analytic.
//
// Writing d2 = (l1-l0)^2, P = s0 s1, a = (s0-s1)^2 + d2,
// N = (s0+s1)^2 + d2, R(t) = sqrt(P^2 + P a t (1-t)),
// D0(t) = (1-t)(s0^2+s1^2+d2) + 2 t P + 2 R(t) and D1(t) = D0(1-t):
//
//   h[m_t]  = log N - t log D1 - (1-t) log D0 + t log(s1/s0) + log(4 pi s0)
//   F'(t)   = log(D1/D0) - log(s1/s0)
//   F''(t)  = a (D0+D1)/(D0 D1) + P a^2 (1-2t)^2 / (R D0 D1)
//
// (The extra product-rule terms of d/dt h[m_t] cancel identically.)
class CauchyMixtureFamily {
 public:
  // Components must be distinct; coincident or nearly coincident pairs make
  // the negentropy affine and are rejected.
  CauchyMixtureFamily(CauchyParam comp0, CauchyParam comp1);

  const CauchyParam& comp0() const { return c0_; }
  const CauchyParam& comp1() const { return c1_; }

  // Exactly the components (0,1) and (1,1); only this family carries a
  // closed-form inverse gradient.
  bool is_canonical() const;

  // Density of m_theta; accepts the closed range theta in [0,1].
  double pdf(double theta, double x) const;

  // Differential entropy h[m_theta], theta in (0,1).
  double entropy(double theta) const;
  // F(theta) = -h[m_theta].
  double negentropy(double theta) const;
  // eta(theta) = F'(theta), strictly increasing.
  double eta(double theta) const;
  // F''(theta) > 0, the Hessian metric in the theta chart.
  double metric(double theta) const;
  // Open image of eta over (0,1): (log(4 s0^2 / N), log(N / (4 s1^2))).
  Interval eta_image() const;

  // Cross-entropies against the components, closed form:
  // h^x[p0 : m_theta] = KL(p0 : m_theta) + log(4 pi s0), likewise for p1.
  double cross_entropy_p0(double theta) const;
  double cross_entropy_p1(double theta) const;

  // F*(eta(theta)) = h^x[p0 : m_theta].
  double dual_value_in_theta(double theta) const;

  // KL(m_theta1 : m_theta2), assembled from the cross-entropy closed forms:
  // (1-theta1) h^x[p0 : m_theta2] + theta1 h^x[p1 : m_theta2] - h[m_theta1].
  double kl(double theta1, double theta2) const;
  // (theta2-theta1)(eta2-eta1) = KL(theta1:theta2) + KL(theta2:theta1).
  double jeffreys(double theta1, double theta2) const;
  // h[m_mid] - (h[m_theta1]+h[m_theta2])/2 at mid = (theta1+theta2)/2.
  double js(double theta1, double theta2) const;

  // The negentropy as a Generator on (0,1) with analytic gradient and
  // Hessian; the inverse gradient is installed for the canonical family only.
  Generator generator() const;

 private:
  struct Terms {
    double S;  // s0^2 + s1^2 + d2
    double P;  // s0 s1
    double N;  // (s0+s1)^2 + d2
    double a;  // (s0-s1)^2 + d2
  };
  Terms terms() const;
  double d0(double theta) const;
  double d1(double theta) const;
  void check_open(double theta, const char* who) const;

  CauchyParam c0_;
  CauchyParam c1_;
};

// Closed forms specific to the family with components (0,1) and (1,1).
// Writing r = sqrt(1 + t - t^2), A = 2r + t + 2, B = 2r - t + 3:
//   F(t)      = t log(A/B) + log(B / (20 pi))
//   F'(t)     = log(A/B)
//   F*(eta(t))= log(20 pi / B)
double canonical_generator_value(double theta);
double canonical_grad(double theta);
// Inverse of canonical_grad on its open image (log(4/5), log(5/4)):
//   theta(eta) = (5 e^{2 eta} + 2 sqrt(5) e^{eta/2}(e^{eta} - 1) - 3 e^{eta})
//                / (5 e^{2 eta} - 6 e^{eta} + 5)
// The root term carries the sign of e^{eta} - 1.
double canonical_inverse_grad(double eta);
double canonical_dual_value_in_theta(double theta);
// F'' as a single rational-surd expression in theta (independent route,
// equal to CauchyMixtureFamily::metric for the canonical family).
double canonical_metric_tensor(double theta);

CauchyMixtureFamily canonical_family();

}  // namespace cauchygeom
