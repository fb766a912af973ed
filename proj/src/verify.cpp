#include "cauchygeom/verify.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "cauchygeom/bregman.hpp"
#include "cauchygeom/finite_diff.hpp"

namespace cauchygeom {

namespace {

const Vec kThetaGrid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
const Vec kPairGrid = {0.1, 0.3, 0.5, 0.7, 0.9};

std::string family_label(const CauchyMixtureFamily& fam) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "(%g,%g,%g,%g)", fam.comp0().location, fam.comp0().scale,
                fam.comp1().location, fam.comp1().scale);
  return buf;
}

CheckResult check(std::string name, std::string family, double err, double tol) {
  return CheckResult{std::move(name), std::move(family), std::isfinite(err) && err <= tol, err,
                     tol};
}

}  // namespace

std::vector<CauchyMixtureFamily> default_verify_families() {
  return {
      CauchyMixtureFamily(CauchyParam(0.0, 1.0), CauchyParam(1.0, 1.0)),
      CauchyMixtureFamily(CauchyParam(-1.0, 1.0), CauchyParam(1.0, 2.0)),
      CauchyMixtureFamily(CauchyParam(0.0, 1.0), CauchyParam(5.0, 0.5)),
  };
}

std::vector<CheckResult> verify_family(const CauchyMixtureFamily& fam, double oracle_abs_tol) {
  std::vector<CheckResult> out;
  const std::string label = family_label(fam);
  QuadratureSpec spec = QuadratureSpec::for_family(fam);
  spec.abs_tol = oracle_abs_tol;
  const Generator gen = fam.generator();
  auto density = [&fam](double th) {
    return [&fam, th](double x) { return fam.pdf(th, x); };
  };

  // closed-form entropy vs oracle
  {
    double err = 0.0;
    for (double th : kThetaGrid)
      err = std::max(err, std::abs(fam.entropy(th) - numeric_entropy(density(th), spec)));
    out.push_back(check("entropy_vs_oracle", label, err, 1e-7));
  }
  // closed-form KL vs oracle and vs the Bregman divergence of the generator
  {
    double err_oracle = 0.0, err_bregman = 0.0;
    for (double t1 : kPairGrid)
      for (double t2 : kPairGrid) {
        const double closed = fam.kl(t1, t2);
        err_oracle =
            std::max(err_oracle, std::abs(closed - numeric_kl(density(t1), density(t2), spec)));
        err_bregman = std::max(err_bregman, std::abs(closed - bregman_divergence(gen, t1, t2)));
      }
    out.push_back(check("kl_vs_oracle", label, err_oracle, 1e-7));
    out.push_back(check("kl_vs_bregman", label, err_bregman, 1e-10));
  }
  // KL symmetry at complementary weight pairs (theta, 1-theta); away from
  // them the divergence is genuinely asymmetric
  {
    double err_sym = 0.0;
    for (double t1 : {0.1, 0.2, 0.3, 0.45})
      err_sym = std::max(err_sym, std::abs(fam.kl(t1, 1.0 - t1) - fam.kl(1.0 - t1, t1)));
    out.push_back(check("kl_symmetry_complementary", label, err_sym,
                        fam.is_canonical() ? 1e-10 : 1e-9));
  }
  // cross-entropy closed form vs oracle (doubles as the conjugate-value check)
  {
    double err = 0.0;
    auto p0 = [&fam](double x) { return fam.comp0().pdf(x); };
    for (double th : kPairGrid)
      err = std::max(err,
                     std::abs(fam.cross_entropy_p0(th) - numeric_cross_entropy(p0, density(th), spec)));
    out.push_back(check("cross_entropy_vs_oracle", label, err, 1e-7));
  }
  // Legendre round trip and identity
  {
    double err_rt = 0.0, err_id = 0.0;
    for (double th : kThetaGrid) {
      const double e = fam.eta(th);
      err_rt = std::max(err_rt, std::abs(primal_coord(gen, e) - th));
      err_id = std::max(err_id,
                        std::abs(fam.negentropy(th) + fam.dual_value_in_theta(th) - th * e));
    }
    out.push_back(check("legendre_roundtrip", label, err_rt,
                        gen.has_inverse_gradient() ? 1e-12 : 1e-10));
    out.push_back(check("legendre_identity", label, err_id, 1e-10));
  }
  // Jeffreys and Jensen-Shannon identities
  {
    double err_j = 0.0, err_js = 0.0;
    for (double t1 : kPairGrid)
      for (double t2 : kPairGrid) {
        err_j = std::max(err_j,
                         std::abs(fam.jeffreys(t1, t2) - (fam.kl(t1, t2) + fam.kl(t2, t1))));
        if (t1 != t2)
          err_js = std::max(err_js,
                            std::abs(fam.js(t1, t2) - jensen_divergence(gen, t1, t2, 0.5)));
      }
    out.push_back(check("jeffreys_identity", label, err_j, 1e-9));
    out.push_back(check("js_vs_jensen", label, err_js, 1e-10));
  }
  // analytic gradient/Hessian vs Richardson finite differences
  {
    double err_g = 0.0, err_h = 0.0;
    for (double th = 0.05; th < 0.96; th += 0.05) {
      const double g = fam.eta(th);
      const double gfd = fd::derivative([&fam](double t) { return fam.negentropy(t); }, th);
      err_g = std::max(err_g, std::abs(g - gfd) / std::max(1.0, std::abs(g)));
      const double h = fam.metric(th);
      const double hfd = fd::derivative([&fam](double t) { return fam.eta(t); }, th);
      err_h = std::max(err_h, std::abs(h - hfd) / std::max(1.0, std::abs(h)));
    }
    out.push_back(check("gradient_vs_fd", label, err_g, 1e-6));
    out.push_back(check("hessian_vs_fd", label, err_h, 1e-5));
  }
  if (fam.is_canonical()) {
    double err_inv = 0.0, err_metric = 0.0, err_crz = 0.0;
    for (double th = 0.01; th < 0.995; th += 0.01) {
      err_inv = std::max(err_inv, std::abs(canonical_inverse_grad(canonical_grad(th)) - th));
      err_metric = std::max(err_metric,
                            std::abs(canonical_metric_tensor(th) - fam.metric(th)));
      const double eta = canonical_grad(th);
      const double dual_hess = fd::derivative(canonical_inverse_grad, eta);
      err_crz = std::max(err_crz, std::abs(fam.metric(th) * dual_hess - 1.0));
    }
    out.push_back(check("canonical_inverse_roundtrip", label, err_inv, 1e-12));
    out.push_back(check("canonical_metric_tensor", label, err_metric, 1e-9));
    out.push_back(check("crouzeix_product", label, err_crz, 1e-6));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.passed) return false;
  return true;
}

void print_report(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s  %-28s family=%-14s err=%.3e tol=%.1e\n",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.family.c_str(), r.err, r.tol);
    os << buf;
  }
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace cauchygeom
