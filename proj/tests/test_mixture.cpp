#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cauchygeom/bregman.hpp"
#include "cauchygeom/errors.hpp"
#include "cauchygeom/finite_diff.hpp"
#include "cauchygeom/mixture.hpp"
#include "cauchygeom/quadrature.hpp"
#include "test_util.hpp"

using namespace cauchygeom;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-9;  // open-boundary limit offset

// Bregman divergence of the canonical family written out directly in the
// surd form (independent transcription, used to cross-check kl()).
double canonical_bregman_surd(double t1, double t2) {
  const double r1 = std::sqrt(1.0 + t1 - t1 * t1), r2 = std::sqrt(1.0 + t2 - t2 * t2);
  const double a1 = 2.0 * r1 + t1 + 2.0, b1 = 2.0 * r1 - t1 + 3.0;
  const double a2 = 2.0 * r2 + t2 + 2.0, b2 = 2.0 * r2 - t2 + 3.0;
  return t1 * std::log((a1 * b2) / (b1 * a2)) + std::log(b1 / b2);
}

std::vector<CauchyMixtureFamily> test_families() {
  return {
      CauchyMixtureFamily(CauchyParam(0.0, 1.0), CauchyParam(1.0, 1.0)),
      CauchyMixtureFamily(CauchyParam(-1.0, 1.0), CauchyParam(1.0, 2.0)),
      CauchyMixtureFamily(CauchyParam(0.0, 1.0), CauchyParam(5.0, 0.5)),
  };
}

}  // namespace

TEST_CASE("construction rejects coincident and near-coincident components") {
  CHECK_THROWS_AS(CauchyMixtureFamily(CauchyParam(0.0, 1.0), CauchyParam(0.0, 1.0)),
                  ParamError);
  CHECK_THROWS_AS(
      CauchyMixtureFamily(CauchyParam(0.0, 1.0), CauchyParam(1e-13, 1.0 + 1e-13)), ParamError);
  CHECK_NOTHROW(CauchyMixtureFamily(CauchyParam(0.0, 1.0), CauchyParam(1e-9, 1.0)));
}

TEST_CASE("mixture pdf") {
  CauchyMixtureFamily fam(CauchyParam(-1.0, 1.0), CauchyParam(1.0, 2.0));
  CHECK(fam.pdf(0.0, 0.3) == doctest::Approx(fam.comp0().pdf(0.3)));
  CHECK(fam.pdf(0.5, 0.0) ==
        doctest::Approx(0.5 / (2.0 * kPi) + 0.5 * 2.0 / (5.0 * kPi)).epsilon(1e-15));
  CHECK(fam.pdf(0.3, 1e9) < 1e-15);
  CHECK(fam.pdf(0.3, -1e9) < 1e-15);
  CHECK_THROWS_AS(fam.pdf(1.5, 0.0), DomainError);
}

TEST_CASE("closed-form entropy: canonical values and limits") {
  CauchyMixtureFamily canon = canonical_family();
  // theta -> 0 limit: entropy of the standard Cauchy component
  CHECK(canon.entropy(kEps) == doctest::Approx(std::log(4.0 * kPi)).epsilon(1e-8));
  // theta -> 1 limit: the second component also has unit scale
  CHECK(canon.entropy(1.0 - kEps) == doctest::Approx(std::log(4.0 * kPi)).epsilon(1e-8));
  CHECK(canon.entropy(0.5) == doctest::Approx(2.5852549085674759).epsilon(1e-15));
  CHECK(canon.entropy(0.5) ==
        doctest::Approx(-canonical_generator_value(0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(canon.entropy(0.0), DomainError);
  CHECK_THROWS_AS(canon.entropy(1.0), DomainError);
}

TEST_CASE("closed-form entropy agrees with the quadrature oracle") {
  for (const auto& fam : test_families()) {
    const QuadratureSpec spec = QuadratureSpec::for_family(fam);
    for (double th = 0.1; th < 0.95; th += 0.2) {
      const double oracle =
          numeric_entropy([&fam, th](double x) { return fam.pdf(th, x); }, spec);
      CHECK(fam.entropy(th) == doctest::Approx(oracle).epsilon(1e-7));
    }
  }
}

TEST_CASE("closed forms agree with the oracle on randomized families") {
  Xoshiro256pp rng(23);
  for (int k = 0; k < 5; ++k) {
    const double l0 = testutil::urand(rng, -3.0, 3.0), s0 = testutil::urand(rng, 0.3, 3.0);
    const double l1 = testutil::urand(rng, -3.0, 3.0), s1 = testutil::urand(rng, 0.3, 3.0);
    CauchyMixtureFamily fam(CauchyParam(l0, s0), CauchyParam(l1, s1));
    const QuadratureSpec spec = QuadratureSpec::for_family(fam);
    const double th = testutil::urand(rng, 0.05, 0.95);
    const double t2 = testutil::urand(rng, 0.05, 0.95);
    CHECK(fam.entropy(th) ==
          doctest::Approx(numeric_entropy([&](double x) { return fam.pdf(th, x); }, spec))
              .epsilon(1e-7));
    CHECK(fam.kl(th, t2) ==
          doctest::Approx(numeric_kl([&](double x) { return fam.pdf(th, x); },
                                     [&](double x) { return fam.pdf(t2, x); }, spec))
              .epsilon(1e-7));
  }
}

TEST_CASE("entropy reduces to the normalized family up to log s0") {
  Xoshiro256pp rng(17);
  for (int k = 0; k < 20; ++k) {
    const double l0 = testutil::urand(rng, -3.0, 3.0), s0 = testutil::urand(rng, 0.3, 3.0);
    const double l1 = testutil::urand(rng, -3.0, 3.0), s1 = testutil::urand(rng, 0.3, 3.0);
    if (std::abs(l0 - l1) < 1e-6 && std::abs(s0 - s1) < 1e-6) continue;
    CauchyMixtureFamily fam(CauchyParam(l0, s0), CauchyParam(l1, s1));
    CauchyMixtureFamily reduced(CauchyParam(0.0, 1.0),
                                CauchyParam((l1 - l0) / s0, s1 / s0));
    const double th = testutil::urand(rng, 0.05, 0.95);
    CHECK(fam.entropy(th) ==
          doctest::Approx(reduced.entropy(th) + std::log(s0)).epsilon(1e-10));
  }
}

TEST_CASE("generator wraps the closed forms and installs the canonical inverse only") {
  CauchyMixtureFamily canon = canonical_family();
  Generator gen = canon.generator();
  CHECK(gen.has_inverse_gradient());
  for (double th = 0.05; th < 0.96; th += 0.09) {
    CHECK(gen.value(th) == doctest::Approx(canonical_generator_value(th)).epsilon(1e-13));
    CHECK(gen.gradient(th) == doctest::Approx(canonical_grad(th)).epsilon(1e-13));
    CHECK(gen.hessian(th) == doctest::Approx(canonical_metric_tensor(th)).epsilon(1e-9));
  }
  CHECK(!CauchyMixtureFamily(CauchyParam(0.0, 1.0), CauchyParam(1.0, 2.0))
             .generator()
             .has_inverse_gradient());
}

TEST_CASE("generator gradient and hessian match Richardson finite differences") {
  for (const auto& fam : test_families()) {
    for (double th = 0.05; th < 0.96; th += 0.05) {
      const double g = fam.eta(th);
      const double gfd = fd::derivative([&fam](double t) { return fam.negentropy(t); }, th);
      CHECK(std::abs(g - gfd) / std::max(1.0, std::abs(g)) <= 1e-6);
      const double h = fam.metric(th);
      const double hfd =
          fd::second_derivative([&fam](double t) { return fam.negentropy(t); }, th);
      CHECK(std::abs(h - hfd) / std::max(1.0, std::abs(h)) <= 1e-5);
    }
  }
}

TEST_CASE("canonical generator value") {
  CHECK(canonical_generator_value(kEps) ==
        doctest::Approx(-std::log(4.0 * kPi)).epsilon(1e-8));
  CHECK(canonical_generator_value(0.5) ==
        doctest::Approx(-2.5852549085674759).epsilon(1e-15));
  // theta -> 1: -h[p_{1,1}] = -log(4 pi); the t log(A/B) term contributes log(5/4)
  CHECK(canonical_generator_value(1.0 - kEps) ==
        doctest::Approx(-std::log(4.0 * kPi)).epsilon(1e-8));
  CHECK_THROWS_AS(canonical_generator_value(0.0), DomainError);
}

TEST_CASE("canonical gradient and its image") {
  CHECK(canonical_grad(0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(canonical_grad(kEps) == doctest::Approx(std::log(4.0 / 5.0)).epsilon(1e-8));
  CHECK(canonical_grad(1.0 - kEps) == doctest::Approx(std::log(5.0 / 4.0)).epsilon(1e-8));
  double prev = -1e9;
  for (double th = 0.01; th < 0.995; th += 0.01) {
    const double e = canonical_grad(th);
    CHECK(e > prev);
    prev = e;
  }
  const Interval image = canonical_family().eta_image();
  CHECK(image.lo == doctest::Approx(std::log(4.0 / 5.0)).epsilon(1e-15));
  CHECK(image.hi == doctest::Approx(std::log(5.0 / 4.0)).epsilon(1e-15));
}

TEST_CASE("canonical inverse gradient") {
  CHECK(canonical_inverse_grad(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  // round trip across the whole interval, both signs of eta
  for (double th = 0.01; th < 0.995; th += 0.01) {
    CHECK(canonical_inverse_grad(canonical_grad(th)) == doctest::Approx(th).epsilon(1e-12));
  }
  // boundary values of the open image are rejected
  CHECK_THROWS_AS(canonical_inverse_grad(std::log(5.0 / 4.0)), OutOfRangeError);
  CHECK_THROWS_AS(canonical_inverse_grad(std::log(4.0 / 5.0)), OutOfRangeError);
  CHECK_NOTHROW(canonical_inverse_grad(std::log(5.0 / 4.0) - 1e-9));
}

TEST_CASE("cross-entropy closed form") {
  CauchyMixtureFamily canon = canonical_family();
  CHECK(canon.cross_entropy_p0(kEps) == doctest::Approx(std::log(4.0 * kPi)).epsilon(1e-8));
  // h^x[p0 : m_1/2] equals h[m_1/2] here because eta(1/2) = 0
  CHECK(canon.cross_entropy_p0(0.5) == doctest::Approx(2.5852549085674759).epsilon(1e-14));
  CHECK(canon.cross_entropy_p0(0.5) ==
        doctest::Approx(canon.dual_value_in_theta(0.5)).epsilon(1e-15));
  // against the oracle
  const QuadratureSpec spec = QuadratureSpec::for_family(canon);
  for (double th : {0.2, 0.5, 0.8}) {
    const double oracle =
        numeric_cross_entropy([&canon](double x) { return canon.comp0().pdf(x); },
                              [&canon, th](double x) { return canon.pdf(th, x); }, spec);
    CHECK(canon.cross_entropy_p0(th) == doctest::Approx(oracle).epsilon(1e-7));
  }
}

TEST_CASE("dual potential in the theta chart") {
  CauchyMixtureFamily canon = canonical_family();
  for (double th = 0.05; th < 0.96; th += 0.09) {
    CHECK(canon.dual_value_in_theta(th) ==
          doctest::Approx(canonical_dual_value_in_theta(th)).epsilon(1e-10));
    // Legendre identity: F*(eta(theta)) = theta eta - F(theta)
    CHECK(canon.dual_value_in_theta(th) ==
          doctest::Approx(th * canon.eta(th) - canon.negentropy(th)).epsilon(1e-12));
  }
  CHECK(canonical_dual_value_in_theta(kEps) ==
        doctest::Approx(std::log(4.0 * kPi)).epsilon(1e-8));
}

TEST_CASE("kl between mixtures") {
  CauchyMixtureFamily canon = canonical_family();
  CHECK(canon.kl(0.37, 0.37) == doctest::Approx(0.0));
  CHECK(canon.kl(0.2, 0.8) == doctest::Approx(0.077459120711706111).epsilon(1e-14));
  CHECK(canon.kl(0.2, 0.8) ==
        doctest::Approx(canonical_bregman_surd(0.2, 0.8)).epsilon(1e-14));
  // KL is symmetric at complementary weight pairs theta2 = 1 - theta1, for
  // any components; it is genuinely asymmetric away from them.
  CHECK(std::abs(canon.kl(0.2, 0.8) - canon.kl(0.8, 0.2)) <= 1e-10);
  for (const auto& fam : test_families()) {
    for (double t1 : {0.1, 0.2, 0.3, 0.45})
      CHECK(std::abs(fam.kl(t1, 1.0 - t1) - fam.kl(1.0 - t1, t1)) <= 1e-9);
    for (double t1 : {0.1, 0.5, 0.9})
      for (double t2 : {0.3, 0.7})
        CHECK(fam.kl(t1, t2) ==
              doctest::Approx(bregman_divergence(fam.generator(), t1, t2)).epsilon(1e-10));
  }
  // quadrature-verified asymmetric pair of the (0,1),(1,1) family
  CHECK(canon.kl(0.1, 0.3) == doctest::Approx(0.00884695459084868).epsilon(1e-12));
  CHECK(canon.kl(0.3, 0.1) == doctest::Approx(0.00908336118296684).epsilon(1e-12));
  CHECK(std::abs(canon.kl(0.1, 0.3) - canon.kl(0.3, 0.1)) > 1e-5);
}

TEST_CASE("kl is invariant under reflecting both weights") {
  // KL(m_t1 : m_t2) = KL(m_{1-t1} : m_{1-t2}) for any components; the
  // complementary-pair symmetry is the t2 = 1-t1 case.
  Xoshiro256pp rng(19);
  for (const auto& fam : test_families()) {
    for (int k = 0; k < 50; ++k) {
      const double t1 = testutil::urand(rng, 0.02, 0.98);
      const double t2 = testutil::urand(rng, 0.02, 0.98);
      CHECK(fam.kl(t1, t2) ==
            doctest::Approx(fam.kl(1.0 - t1, 1.0 - t2)).epsilon(1e-10));
    }
  }
}

TEST_CASE("kl between mixtures agrees with the quadrature oracle") {
  for (const auto& fam : test_families()) {
    const QuadratureSpec spec = QuadratureSpec::for_family(fam);
    for (double t1 : {0.2, 0.5, 0.8})
      for (double t2 : {0.3, 0.7}) {
        const double oracle = numeric_kl([&fam, t1](double x) { return fam.pdf(t1, x); },
                                         [&fam, t2](double x) { return fam.pdf(t2, x); }, spec);
        CHECK(fam.kl(t1, t2) == doctest::Approx(oracle).epsilon(1e-7));
      }
  }
}

TEST_CASE("jeffreys divergence") {
  CauchyMixtureFamily canon = canonical_family();
  CHECK(canon.jeffreys(0.4, 0.4) == doctest::Approx(0.0));
  CHECK(canon.jeffreys(0.2, 0.8) ==
        doctest::Approx(canon.kl(0.2, 0.8) + canon.kl(0.8, 0.2)).epsilon(1e-12));
  CHECK(canon.jeffreys(0.2, 0.8) == doctest::Approx(0.15491824142341222).epsilon(1e-13));
  // grows with the separation
  double prev = 0.0;
  for (double t2 = 0.3; t2 < 0.95; t2 += 0.1) {
    const double v = canon.jeffreys(0.25, t2);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("jensen-shannon divergence between mixtures") {
  CauchyMixtureFamily canon = canonical_family();
  CHECK(canon.js(0.4, 0.4) == doctest::Approx(0.0));
  Generator gen = canon.generator();
  for (double t1 : {0.2, 0.5})
    for (double t2 : {0.35, 0.8}) {
      CHECK(canon.js(t1, t2) ==
            doctest::Approx(jensen_divergence(gen, t1, t2, 0.5)).epsilon(1e-12));
    }
  // boundary pair approaches the two-component Jensen-Shannon divergence
  const double eps = 1e-6;
  CHECK(canon.js(eps, 1.0 - eps) ==
        doctest::Approx(js_half_cauchy(CauchyParam(0.0, 1.0), CauchyParam(1.0, 1.0)))
            .epsilon(1e-5));
}

TEST_CASE("metric closed form") {
  CauchyMixtureFamily canon = canonical_family();
  CHECK(canon.metric(0.5) == doctest::Approx(0.42229123600033649).epsilon(1e-12));
  CHECK(canon.metric(0.5) ==
        doctest::Approx(2.0 / (2.0 * std::sqrt(1.25) + 2.5)).epsilon(1e-15));
  double err = 0.0;
  for (double th = 0.01; th < 0.995; th += 0.01) {
    CHECK(canon.metric(th) > 0.0);
    err = std::max(err, std::abs(canon.metric(th) - canonical_metric_tensor(th)));
  }
  CHECK(err <= 1e-9);
  for (const auto& fam : test_families())
    for (double th = 0.01; th < 0.995; th += 0.07) CHECK(fam.metric(th) > 0.0);
}

TEST_CASE("skewed JS equals the generator gap at the boundary limits") {
  for (const auto& fam : test_families()) {
    const double f0 = fam.negentropy(kEps);
    const double f1 = fam.negentropy(1.0 - kEps);
    for (double th : {0.2, 0.5, 0.7}) {
      const double gap = (1.0 - th) * f0 + th * f1 - fam.negentropy(th);
      CHECK(js_skewed_cauchy(fam.comp0(), fam.comp1(), th) ==
            doctest::Approx(gap).epsilon(1e-7));
    }
  }
}

TEST_CASE("eta image bounds match the gradient limits") {
  for (const auto& fam : test_families()) {
    const Interval im = fam.eta_image();
    CHECK(fam.eta(kEps) == doctest::Approx(im.lo).epsilon(1e-7));
    CHECK(fam.eta(1.0 - kEps) == doctest::Approx(im.hi).epsilon(1e-7));
    // interior values stay strictly inside
    for (double th : {0.1, 0.5, 0.9}) {
      CHECK(fam.eta(th) > im.lo);
      CHECK(fam.eta(th) < im.hi);
    }
  }
}
