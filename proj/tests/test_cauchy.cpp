#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cauchygeom/cauchy.hpp"
#include "cauchygeom/errors.hpp"
#include "cauchygeom/monte_carlo.hpp"
#include "cauchygeom/quadrature.hpp"
#include "test_util.hpp"

using namespace cauchygeom;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("construction validates the scale") {
  CHECK_THROWS_AS(CauchyParam(0.0, 0.0), ParamError);
  CHECK_THROWS_AS(CauchyParam(0.0, -1.0), ParamError);
  CHECK_THROWS_AS(CauchyParam(std::numeric_limits<double>::infinity(), 1.0), ParamError);
}

TEST_CASE("pdf values at the mode and half-width point") {
  CHECK(CauchyParam(0.0, 1.0).pdf(0.0) == doctest::Approx(1.0 / kPi));
  CHECK(CauchyParam(1.0, 2.0).pdf(1.0) == doctest::Approx(1.0 / (2.0 * kPi)));
  CHECK(CauchyParam(0.0, 1.0).pdf(1.0) == doctest::Approx(1.0 / (2.0 * kPi)));
}

TEST_CASE("pdf integrates to one for randomized parameters") {
  Xoshiro256pp rng(21);
  for (int k = 0; k < 10; ++k) {
    const CauchyParam p(testutil::urand(rng, -5.0, 5.0), testutil::urand(rng, 0.2, 4.0));
    const double mass = integrate_real_line([&p](double x) { return p.pdf(x); },
                                            QuadratureSpec::for_component(p));
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("entropy is log(4 pi s), location-invariant") {
  CHECK(CauchyParam(0.0, 1.0).entropy() == doctest::Approx(std::log(4.0 * kPi)));
  CHECK(CauchyParam(5.0, 1.0).entropy() == doctest::Approx(std::log(4.0 * kPi)));
  CHECK(CauchyParam(0.0, 2.0).entropy() ==
        doctest::Approx(std::log(4.0 * kPi) + std::log(2.0)));
}

TEST_CASE("kl_cauchy_to_mixture closed form") {
  const CauchyParam p0(0.0, 1.0), p1(1.0, 1.0);
  SUBCASE("identical components give zero for any theta") {
    const CauchyParam p(0.7, 1.3);
    for (double th : {0.0, 0.3, 1.0}) CHECK(kl_cauchy_to_mixture(p, p, th) == doctest::Approx(0.0));
  }
  SUBCASE("theta = 0 gives zero") {
    CHECK(kl_cauchy_to_mixture(p0, p1, 0.0) == doctest::Approx(0.0));
  }
  SUBCASE("hand-evaluated midpoint value") {
    const double expect = std::log(5.0 / (2.5 + 2.0 * std::sqrt(1.25)));
    CHECK(kl_cauchy_to_mixture(p0, p1, 0.5) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(expect == doctest::Approx(0.054230661598185154).epsilon(1e-14));
  }
  SUBCASE("theta outside [0,1] is rejected") {
    CHECK_THROWS_AS(kl_cauchy_to_mixture(p0, p1, -0.01), DomainError);
    CHECK_THROWS_AS(kl_cauchy_to_mixture(p0, p1, 1.01), DomainError);
  }
}

TEST_CASE("kl_cauchy_to_mixture agrees with the quadrature oracle on a parameter grid") {
  Xoshiro256pp rng(5);
  for (int k = 0; k < 6; ++k) {
    const CauchyParam p0(testutil::urand(rng, -2.0, 2.0), testutil::urand(rng, 0.3, 2.0));
    const CauchyParam p1(testutil::urand(rng, -2.0, 2.0), testutil::urand(rng, 0.3, 2.0));
    QuadratureSpec spec;
    spec.anchor = CauchyParam(0.5 * (p0.location + p1.location),
                              std::max(p0.scale, p1.scale));
    for (double th : {0.1, 0.5, 0.9}) {
      auto mix = [&](double x) { return (1.0 - th) * p0.pdf(x) + th * p1.pdf(x); };
      const double oracle = numeric_kl([&p0](double x) { return p0.pdf(x); }, mix, spec);
      CHECK(kl_cauchy_to_mixture(p0, p1, th) == doctest::Approx(oracle).epsilon(1e-7));
    }
  }
}

TEST_CASE("kl_cauchy_to_mixture is nondecreasing in theta") {
  const CauchyParam p0(0.0, 1.0), p1(2.0, 0.7);
  double prev = -1.0;
  for (double th = 0.0; th <= 1.0; th += 0.02) {
    const double v = kl_cauchy_to_mixture(p0, p1, th);
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
}

TEST_CASE("skewed Jensen-Shannon divergence") {
  const CauchyParam p0(0.0, 1.0), p1(1.0, 1.0);
  SUBCASE("identical components give zero") {
    CHECK(js_skewed_cauchy(p0, p0, 0.42) == doctest::Approx(0.0));
  }
  SUBCASE("coincides with the theta = 1/2 closed form") {
    CHECK(js_skewed_cauchy(p0, p1, 0.5) ==
          doctest::Approx(js_half_cauchy(p0, p1)).epsilon(1e-14));
  }
  SUBCASE("equals the mixture-entropy gap measured by the oracle") {
    const CauchyParam q1(1.0, 2.0);
    const double th = 0.3;
    QuadratureSpec spec;
    spec.anchor = CauchyParam(0.5, 2.0);
    auto mix = [&](double x) { return 0.7 * p0.pdf(x) + 0.3 * q1.pdf(x); };
    const double gap =
        numeric_entropy(mix, spec) - (0.7 * p0.entropy() + 0.3 * q1.entropy());
    CHECK(js_skewed_cauchy(p0, q1, th) == doctest::Approx(gap).epsilon(1e-7));
  }
  SUBCASE("skew symmetry under swapping components and theta -> 1-theta") {
    Xoshiro256pp rng(13);
    for (int k = 0; k < 50; ++k) {
      const CauchyParam a(testutil::urand(rng, -3.0, 3.0), testutil::urand(rng, 0.2, 3.0));
      const CauchyParam b(testutil::urand(rng, -3.0, 3.0), testutil::urand(rng, 0.2, 3.0));
      const double th = testutil::urand(rng, 0.01, 0.99);
      CHECK(js_skewed_cauchy(a, b, th) ==
            doctest::Approx(js_skewed_cauchy(b, a, 1.0 - th)).epsilon(1e-12));
    }
  }
  SUBCASE("theta on the boundary is rejected") {
    CHECK_THROWS_AS(js_skewed_cauchy(p0, p1, 0.0), DomainError);
    CHECK_THROWS_AS(js_skewed_cauchy(p0, p1, 1.0), DomainError);
  }
}

TEST_CASE("js_half_cauchy closed form") {
  const CauchyParam p0(0.0, 1.0), p1(1.0, 1.0);
  CHECK(js_half_cauchy(p0, p0) == doctest::Approx(0.0));
  const double expect = std::log(2.0 * std::sqrt(5.0) / (std::sqrt(5.0) + 2.0));
  CHECK(js_half_cauchy(p0, p1) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(expect == doctest::Approx(0.054230661598185154).epsilon(1e-14));
  CHECK(js_half_cauchy(CauchyParam(0.0, 1.0), CauchyParam(0.0, 4.0)) ==
        doctest::Approx(std::log(10.0 / 9.0)).epsilon(1e-15));
}
