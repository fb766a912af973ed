#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cauchygeom/mixture.hpp"
#include "cauchygeom/quadrature.hpp"

namespace cauchygeom {

struct CheckResult {
  std::string name;
  std::string family;
  bool passed = false;
  double err = 0.0;
  double tol = 0.0;
};

// Consistency battery for one mixture family: closed forms against the
// quadrature oracle, Legendre round trips and identities, Jeffreys identity,
// KL symmetry, finite-difference gradient/Hessian checks, and (for the
// canonical family) the inverse-gradient and metric-tensor closed forms.
// Individual failures do not abort the battery.
std::vector<CheckResult> verify_family(const CauchyMixtureFamily& fam, double oracle_abs_tol);

// The three families exercised by default.
std::vector<CauchyMixtureFamily> default_verify_families();

bool all_passed(const std::vector<CheckResult>& results);
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_value(double v);

}  // namespace cauchygeom
