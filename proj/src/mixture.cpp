#include "cauchygeom/mixture.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cauchygeom/errors.hpp"

namespace cauchygeom {

namespace {
constexpr double kPi = std::numbers::pi;
}

CauchyMixtureFamily::CauchyMixtureFamily(CauchyParam comp0, CauchyParam comp1)
    : c0_(comp0), c1_(comp1) {
  const double gap = std::max(std::abs(comp0.location - comp1.location),
                              std::abs(comp0.scale - comp1.scale));
  if (gap < 1e-12)
    throw ParamError("CauchyMixtureFamily: components must be distinct");
}

bool CauchyMixtureFamily::is_canonical() const {
  return c0_.location == 0.0 && c0_.scale == 1.0 && c1_.location == 1.0 && c1_.scale == 1.0;
}

double CauchyMixtureFamily::pdf(double theta, double x) const {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw DomainError("CauchyMixtureFamily::pdf: theta must lie in [0,1]");
  return (1.0 - theta) * c0_.pdf(x) + theta * c1_.pdf(x);
}

CauchyMixtureFamily::Terms CauchyMixtureFamily::terms() const {
  const double dl = c1_.location - c0_.location;
  const double d2 = dl * dl;
  const double s0 = c0_.scale, s1 = c1_.scale;
  Terms t;
  t.S = s0 * s0 + s1 * s1 + d2;
  t.P = s0 * s1;
  t.N = (s0 + s1) * (s0 + s1) + d2;
  t.a = (s0 - s1) * (s0 - s1) + d2;
  return t;
}

double CauchyMixtureFamily::d0(double theta) const {
  const Terms t = terms();
  double root_arg = t.P * t.P + t.P * t.a * theta * (1.0 - theta);
  if (root_arg < 0.0 && root_arg > -1e-14) root_arg = 0.0;
  return (1.0 - theta) * t.S + 2.0 * theta * t.P + 2.0 * std::sqrt(root_arg);
}

double CauchyMixtureFamily::d1(double theta) const { return d0(1.0 - theta); }

void CauchyMixtureFamily::check_open(double theta, const char* who) const {
  if (!(theta > 0.0 && theta < 1.0)) {
    std::ostringstream os;
    os << "CauchyMixtureFamily::" << who << ": theta must lie in the open interval (0,1)";
    throw DomainError(os.str());
  }
}

double CauchyMixtureFamily::entropy(double theta) const {
  check_open(theta, "entropy");
  const Terms t = terms();
  return std::log(t.N) - theta * std::log(d1(theta)) - (1.0 - theta) * std::log(d0(theta)) +
         theta * std::log(c1_.scale / c0_.scale) + std::log(4.0 * kPi * c0_.scale);
}

double CauchyMixtureFamily::negentropy(double theta) const { return -entropy(theta); }

double CauchyMixtureFamily::eta(double theta) const {
  check_open(theta, "eta");
  return std::log(d1(theta) / d0(theta)) - std::log(c1_.scale / c0_.scale);
}

double CauchyMixtureFamily::metric(double theta) const {
  check_open(theta, "metric");
  const Terms t = terms();
  const double D0 = d0(theta), D1 = d1(theta);
  const double R = std::sqrt(t.P * t.P + t.P * t.a * theta * (1.0 - theta));
  const double w = 1.0 - 2.0 * theta;
  return t.a * (D0 + D1) / (D0 * D1) + t.P * t.a * t.a * w * w / (R * D0 * D1);
}

Interval CauchyMixtureFamily::eta_image() const {
  const Terms t = terms();
  const double s0 = c0_.scale, s1 = c1_.scale;
  return Interval{std::log(4.0 * s0 * s0 / t.N), std::log(t.N / (4.0 * s1 * s1))};
}

double CauchyMixtureFamily::cross_entropy_p0(double theta) const {
  check_open(theta, "cross_entropy_p0");
  return kl_cauchy_to_mixture(c0_, c1_, theta) + c0_.entropy();
}

double CauchyMixtureFamily::cross_entropy_p1(double theta) const {
  check_open(theta, "cross_entropy_p1");
  return kl_cauchy_to_mixture(c1_, c0_, 1.0 - theta) + c1_.entropy();
}

double CauchyMixtureFamily::dual_value_in_theta(double theta) const {
  return cross_entropy_p0(theta);
}

double CauchyMixtureFamily::kl(double theta1, double theta2) const {
  check_open(theta1, "kl");
  check_open(theta2, "kl");
  return (1.0 - theta1) * cross_entropy_p0(theta2) + theta1 * cross_entropy_p1(theta2) -
         entropy(theta1);
}

double CauchyMixtureFamily::jeffreys(double theta1, double theta2) const {
  check_open(theta1, "jeffreys");
  check_open(theta2, "jeffreys");
  return (theta2 - theta1) * (eta(theta2) - eta(theta1));
}

double CauchyMixtureFamily::js(double theta1, double theta2) const {
  check_open(theta1, "js");
  check_open(theta2, "js");
  return entropy(0.5 * (theta1 + theta2)) - 0.5 * (entropy(theta1) + entropy(theta2));
}

Generator CauchyMixtureFamily::generator() const {
  std::ostringstream name;
  name << "mixture(" << c0_.location << "," << c0_.scale << "," << c1_.location << ","
       << c1_.scale << ")";
  std::function<double(double)> inverse = nullptr;
  if (is_canonical()) inverse = [](double e) { return canonical_inverse_grad(e); };
  const CauchyMixtureFamily fam = *this;
  return Generator::scalar(
      name.str(), Interval{0.0, 1.0},
      [fam](double th) { return fam.negentropy(th); },
      [fam](double th) { return fam.eta(th); },
      [fam](double th) { return fam.metric(th); }, std::move(inverse));
}

namespace {

void check_canonical_theta(double theta, const char* who) {
  if (!(theta > 0.0 && theta < 1.0)) {
    std::ostringstream os;
    os << who << ": theta must lie in the open interval (0,1)";
    throw DomainError(os.str());
  }
}

struct CanonicalAB {
  double A;
  double B;
};

CanonicalAB canonical_ab(double theta) {
  const double r = std::sqrt(1.0 + theta - theta * theta);
  return CanonicalAB{2.0 * r + theta + 2.0, 2.0 * r - theta + 3.0};
}

}  // namespace

double canonical_generator_value(double theta) {
  check_canonical_theta(theta, "canonical_generator_value");
  const auto [A, B] = canonical_ab(theta);
  return theta * std::log(A / B) + std::log(B / (20.0 * kPi));
}

double canonical_grad(double theta) {
  check_canonical_theta(theta, "canonical_grad");
  const auto [A, B] = canonical_ab(theta);
  return std::log(A / B);
}

double canonical_inverse_grad(double eta) {
  const double lo = std::log(4.0 / 5.0), hi = std::log(5.0 / 4.0);
  if (!(eta > lo && eta < hi))
    throw OutOfRangeError("canonical_inverse_grad: eta outside the open image (log 4/5, log 5/4)");
  const double e = std::exp(eta);
  const double root = 2.0 * std::sqrt(5.0) * std::sqrt(e) * (e - 1.0);
  return (5.0 * e * e + root - 3.0 * e) / (5.0 * e * e - 6.0 * e + 5.0);
}

double canonical_dual_value_in_theta(double theta) {
  check_canonical_theta(theta, "canonical_dual_value_in_theta");
  return std::log(20.0 * kPi / canonical_ab(theta).B);
}

double canonical_metric_tensor(double theta) {
  check_canonical_theta(theta, "canonical_metric_tensor");
  const double t = theta;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  const double t6 = t5 * t, t7 = t6 * t, t8 = t7 * t, t9 = t8 * t, t10 = t9 * t;
  const double r = std::sqrt(-t2 + t + 1.0);
  const double num = -t8 + 4.0 * t7 +
                     r * (7.0 * t6 - 21.0 * t5 - 35.0 * t4 + 105.0 * t3 + 56.0 * t2 -
                          112.0 * t - 64.0) +
                     19.0 * t6 - 71.0 * t5 - 30.0 * t4 + 183.0 * t3 + 40.0 * t2 - 144.0 * t -
                     64.0;
  const double den = -t10 + 5.0 * t9 +
                     r * (8.0 * t8 - 32.0 * t7 - 40.0 * t6 + 232.0 * t5 + 16.0 * t4 -
                          456.0 * t3 - 48.0 * t2 + 320.0 * t + 128.0) +
                     23.0 * t8 - 122.0 * t7 + t6 + 445.0 * t5 - 127.0 * t4 - 640.0 * t3 +
                     32.0 * t2 + 384.0 * t + 128.0;
  return -num / den;
}

CauchyMixtureFamily canonical_family() {
  return CauchyMixtureFamily(CauchyParam(0.0, 1.0), CauchyParam(1.0, 1.0));
}

}  // namespace cauchygeom
