#pragma once

#include <functional>

#include "cauchygeom/cauchy.hpp"
#include "cauchygeom/linalg.hpp"
#include "cauchygeom/mixture.hpp"

namespace cauchygeom {

// Configuration for real-line integration of heavy-tailed integrands.
// The integral is computed after the substitution x = l_a + s_a tan(u),
// u in (-pi/2, pi/2), with (l_a, s_a) given by `anchor`; the substituted
// interval is covered by composite Gauss-Legendre panels whose edges are
// graded geometrically toward +-pi/2 (entropy-type integrands carry a log
// singularity there after the substitution). Panel counts double until two
// successive estimates differ by less than abs_tol.
struct QuadratureSpec {
  int panels = 16;
  int nodes_per_panel = 32;
  double abs_tol = 1e-10;
  int max_refinements = 8;
  CauchyParam anchor{0.0, 1.0};

  void validate() const;

  // Anchor at the component midpoint with the larger scale.
  static QuadratureSpec for_family(const CauchyMixtureFamily& fam);
  static QuadratureSpec for_component(const CauchyParam& p);
};

struct GaussRule {
  Vec nodes;    // on (-1, 1), ascending
  Vec weights;  // summing to 2
};

// Nodes and weights of the n-point Gauss-Legendre rule; cached per order.
const GaussRule& gauss_legendre(int n);

struct IntegralResult {
  double value = 0.0;
  double gap = 0.0;        // |last - previous| at acceptance
  int refinements = 0;     // doublings performed
  Vec estimates;           // successive estimates, coarsest first
};

// Integral of f over the real line. Throws NoConvergenceError (carrying the
// last estimate and gap) when the refinement cap is hit first.
IntegralResult integrate_real_line_full(const std::function<double(double)>& f,
                                        const QuadratureSpec& spec);
double integrate_real_line(const std::function<double(double)>& f, const QuadratureSpec& spec);

// h[p] = -int p log p; points where the density underflows to zero contribute
// nothing (lim p log p = 0).
double numeric_entropy(const std::function<double(double)>& density,
                       const QuadratureSpec& spec);

// h^x[p:q] = -int p log q; q must be strictly positive on the line.
double numeric_cross_entropy(const std::function<double(double)>& p,
                             const std::function<double(double)>& q,
                             const QuadratureSpec& spec);

// KL[p:q] = int p log(p/q), integrated as a single integral for cancellation
// stability.
double numeric_kl(const std::function<double(double)>& p,
                  const std::function<double(double)>& q, const QuadratureSpec& spec);

}  // namespace cauchygeom
