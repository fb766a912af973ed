#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cauchygeom/bregman.hpp"
#include "cauchygeom/cone.hpp"
#include "cauchygeom/errors.hpp"
#include "cauchygeom/mixture.hpp"
#include "cauchygeom/monte_carlo.hpp"
#include "cauchygeom/quadrature.hpp"
#include "cauchygeom/simplex.hpp"
#include "cauchygeom/verify.hpp"

namespace py = pybind11;
using namespace cauchygeom;

namespace {

std::vector<Vec> matrix_rows(const Matrix& m) {
  std::vector<Vec> rows(m.dim(), Vec(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  return rows;
}

Matrix matrix_from_rows(const std::vector<Vec>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("matrix rows must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(cauchygeom, m) {
  m.doc() = "Closed-form dually flat geometry of two-component Cauchy mixtures";

  py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<WeightError>(m, "WeightError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<NotPositiveDefiniteError>(m, "NotPositiveDefiniteError",
                                                   PyExc_ValueError);
  py::register_exception<NoConvergenceError>(m, "NoConvergenceError", PyExc_RuntimeError);

  py::class_<CauchyParam>(m, "CauchyParam")
      .def(py::init<double, double>(), py::arg("location"), py::arg("scale"))
      .def_readonly("location", &CauchyParam::location)
      .def_readonly("scale", &CauchyParam::scale)
      .def("pdf", &CauchyParam::pdf, py::arg("x"))
      .def("entropy", &CauchyParam::entropy)
      .def("__repr__", [](const CauchyParam& p) {
        return "CauchyParam(" + format_value(p.location) + ", " + format_value(p.scale) + ")";
      });

  m.def("kl_cauchy_to_mixture", &kl_cauchy_to_mixture, py::arg("p0"), py::arg("p1"),
        py::arg("theta"));
  m.def("js_skewed_cauchy", &js_skewed_cauchy, py::arg("p0"), py::arg("p1"), py::arg("theta"));
  m.def("js_half_cauchy", &js_half_cauchy, py::arg("p0"), py::arg("p1"));

  py::class_<Interval>(m, "Interval")
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi);

  py::class_<CauchyMixtureFamily>(m, "CauchyMixtureFamily")
      .def(py::init<CauchyParam, CauchyParam>(), py::arg("comp0"), py::arg("comp1"))
      .def_property_readonly("comp0", &CauchyMixtureFamily::comp0)
      .def_property_readonly("comp1", &CauchyMixtureFamily::comp1)
      .def("is_canonical", &CauchyMixtureFamily::is_canonical)
      .def("pdf", &CauchyMixtureFamily::pdf, py::arg("theta"), py::arg("x"))
      .def("entropy", &CauchyMixtureFamily::entropy, py::arg("theta"))
      .def("negentropy", &CauchyMixtureFamily::negentropy, py::arg("theta"))
      .def("eta", &CauchyMixtureFamily::eta, py::arg("theta"))
      .def("metric", &CauchyMixtureFamily::metric, py::arg("theta"))
      .def("eta_image", &CauchyMixtureFamily::eta_image)
      .def("cross_entropy_p0", &CauchyMixtureFamily::cross_entropy_p0, py::arg("theta"))
      .def("cross_entropy_p1", &CauchyMixtureFamily::cross_entropy_p1, py::arg("theta"))
      .def("dual_value_in_theta", &CauchyMixtureFamily::dual_value_in_theta, py::arg("theta"))
      .def("kl", &CauchyMixtureFamily::kl, py::arg("theta1"), py::arg("theta2"))
      .def("jeffreys", &CauchyMixtureFamily::jeffreys, py::arg("theta1"), py::arg("theta2"))
      .def("js", &CauchyMixtureFamily::js, py::arg("theta1"), py::arg("theta2"))
      .def("generator", &CauchyMixtureFamily::generator);

  m.def("canonical_family", &canonical_family);
  m.def("canonical_generator_value", &canonical_generator_value, py::arg("theta"));
  m.def("canonical_grad", &canonical_grad, py::arg("theta"));
  m.def("canonical_inverse_grad", &canonical_inverse_grad, py::arg("eta"));
  m.def("canonical_dual_value_in_theta", &canonical_dual_value_in_theta, py::arg("theta"));
  m.def("canonical_metric_tensor", &canonical_metric_tensor, py::arg("theta"));

  py::class_<Generator>(m, "Generator")
      .def_property_readonly("name", &Generator::name)
      .def_property_readonly("dim", &Generator::dim)
      .def("value", py::overload_cast<const Vec&>(&Generator::value, py::const_))
      .def("gradient", py::overload_cast<const Vec&>(&Generator::gradient, py::const_))
      .def("hessian",
           [](const Generator& g, const Vec& t) { return matrix_rows(g.hessian(t)); })
      .def("has_inverse_gradient", &Generator::has_inverse_gradient)
      .def("inverse_gradient",
           py::overload_cast<const Vec&>(&Generator::inverse_gradient, py::const_));

  m.def("bregman_divergence",
        py::overload_cast<const Generator&, const Vec&, const Vec&>(&bregman_divergence));
  m.def("dual_coord", py::overload_cast<const Generator&, const Vec&>(&dual_coord));
  m.def("primal_coord", py::overload_cast<const Generator&, const Vec&>(&primal_coord));
  m.def("legendre_dual_value",
        py::overload_cast<const Generator&, const Vec&>(&legendre_dual_value));
  m.def("fenchel_young",
        py::overload_cast<const Generator&, const Vec&, const Vec&>(&fenchel_young));
  m.def("jensen_divergence", py::overload_cast<const Generator&, const Vec&, const Vec&, double>(
                                 &jensen_divergence));
  m.def("jensen_diversity", &jensen_diversity);
  m.def("eguchi_metric_fd",
        [](const Generator& g, const Vec& t, double step) {
          return matrix_rows(eguchi_metric_fd(g, t, step));
        });
  m.def("separable_riemannian_distance",
        [](const std::vector<std::function<double(double)>>& h, const Vec& a, const Vec& b) {
          return separable_riemannian_distance(h, a, b);
        });

  // simplex geometry
  m.def("categorical_fim",
        [](const Vec& p) { return matrix_rows(categorical_fim(SimplexPoint(p))); });
  m.def("sphere_embedding", [](const Vec& p) { return sphere_embedding(SimplexPoint(p)); });
  m.def("rao_distance",
        [](const Vec& p, const Vec& q) { return rao_distance(SimplexPoint(p), SimplexPoint(q)); });
  m.def("bhattacharyya_coeff", [](const Vec& p, const Vec& q) {
    return bhattacharyya_coeff(SimplexPoint(p), SimplexPoint(q));
  });
  m.def("hellinger_distance", [](const Vec& p, const Vec& q) {
    return hellinger_distance(PositiveMeasurePoint(p), PositiveMeasurePoint(q));
  });
  m.def("extended_rao_distance", [](const Vec& p, const Vec& q) {
    return extended_rao_distance(PositiveMeasurePoint(p), PositiveMeasurePoint(q));
  });
  m.def("categorical_mixture_generator", &categorical_mixture_generator, py::arg("d"));

  // cone geometry
  m.def("orthant_generator", &orthant_generator, py::arg("d"));
  m.def("spd_generator_value",
        [](const std::vector<Vec>& p) { return spd_generator_value(SpdPoint(matrix_from_rows(p))); });
  m.def("spd_generator_gradient", [](const std::vector<Vec>& p) {
    return matrix_rows(spd_generator_gradient(SpdPoint(matrix_from_rows(p))));
  });
  m.def("halfdet_identity_gap", &halfdet_identity_gap);

  // oracle
  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init([](int panels, int nodes_per_panel, double abs_tol, int max_refinements,
                       CauchyParam anchor) {
             QuadratureSpec s;
             s.panels = panels;
             s.nodes_per_panel = nodes_per_panel;
             s.abs_tol = abs_tol;
             s.max_refinements = max_refinements;
             s.anchor = anchor;
             s.validate();
             return s;
           }),
           py::arg("panels") = 16, py::arg("nodes_per_panel") = 32,
           py::arg("abs_tol") = 1e-10, py::arg("max_refinements") = 8,
           py::arg("anchor") = CauchyParam(0.0, 1.0))
      .def_readonly("panels", &QuadratureSpec::panels)
      .def_readonly("nodes_per_panel", &QuadratureSpec::nodes_per_panel)
      .def_readonly("abs_tol", &QuadratureSpec::abs_tol)
      .def_readonly("max_refinements", &QuadratureSpec::max_refinements)
      .def_readonly("anchor", &QuadratureSpec::anchor)
      .def_static("for_family", &QuadratureSpec::for_family)
      .def_static("for_component", &QuadratureSpec::for_component);

  m.def("integrate_real_line", &integrate_real_line, py::arg("f"),
        py::arg("spec") = QuadratureSpec{});
  m.def("numeric_entropy", &numeric_entropy, py::arg("density"),
        py::arg("spec") = QuadratureSpec{});
  m.def("numeric_cross_entropy", &numeric_cross_entropy, py::arg("p"), py::arg("q"),
        py::arg("spec") = QuadratureSpec{});
  m.def("numeric_kl", &numeric_kl, py::arg("p"), py::arg("q"),
        py::arg("spec") = QuadratureSpec{});

  // Monte Carlo
  py::class_<McSpec>(m, "McSpec")
      .def(py::init([](std::uint64_t sample_count, std::uint64_t seed) {
             McSpec s{sample_count, seed};
             s.validate();
             return s;
           }),
           py::arg("sample_count") = 1'000'000, py::arg("seed") = 0)
      .def_readonly("sample_count", &McSpec::sample_count)
      .def_readonly("seed", &McSpec::seed);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("mean", &McEstimate::mean)
      .def_readonly("std_error", &McEstimate::std_error)
      .def_readonly("sample_count", &McEstimate::sample_count);

  m.def("mc_kl", &mc_kl, py::arg("family"), py::arg("theta"), py::arg("q_density"),
        py::arg("spec"));
  m.def("mc_kl_between_mixtures", &mc_kl_between_mixtures, py::arg("family"),
        py::arg("theta1"), py::arg("theta2"), py::arg("spec"));
}
