#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toepcomm/classify.hpp"
#include "toepcomm/curve.hpp"
#include "toepcomm/errors.hpp"
#include "toepcomm/expr.hpp"
#include "toepcomm/factor.hpp"
#include "toepcomm/opspace.hpp"
#include "toepcomm/registry.hpp"
#include "toepcomm/serialize.hpp"
#include "toepcomm/svgplot.hpp"
#include "toepcomm/symbol.hpp"

namespace py = pybind11;
namespace tc = toepcomm;
using tc::Complex;

namespace {

// Accept either DSL text or an already-lowered TaylorSymbol.
tc::TaylorSymbol as_symbol(const py::object& obj, int order = tc::kDefaultTruncationOrder) {
    if (py::isinstance<py::str>(obj)) return tc::lower_dsl(obj.cast<std::string>(), order);
    return obj.cast<tc::TaylorSymbol>();
}

py::object json_to_py(const tc::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "analytic Toeplitz symbol laboratory (C++ core)";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const tc::SyntaxError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const tc::Error& e) {
            if (tc::is_input_error(e))
                PyErr_SetString(PyExc_ValueError, e.what());
            else
                PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<tc::TaylorSymbol>(m, "TaylorSymbol")
        .def(py::init<std::vector<Complex>, std::string, bool>(), py::arg("coeffs"),
             py::arg("label") = "", py::arg("exact_polynomial") = true)
        .def_property_readonly("coeffs", [](const tc::TaylorSymbol& s) { return s.coeffs(); })
        .def_property_readonly("order", &tc::TaylorSymbol::order)
        .def_property_readonly("label", &tc::TaylorSymbol::label)
        .def_property_readonly("exact_polynomial", &tc::TaylorSymbol::exact_polynomial)
        .def("eval", &tc::TaylorSymbol::eval, py::arg("z"))
        .def("eval_circle", &tc::TaylorSymbol::eval_circle, py::arg("nodes"),
             py::arg("radius") = 1.0)
        .def("derivative", &tc::TaylorSymbol::derivative)
        .def("__repr__", [](const tc::TaylorSymbol& s) {
            return "<TaylorSymbol '" + s.label() + "' order " + std::to_string(s.order()) + ">";
        });

    py::class_<tc::BlaschkeProduct>(m, "BlaschkeProduct")
        .def(py::init<std::vector<Complex>, Complex>(), py::arg("zeros"),
             py::arg("constant") = Complex(1.0))
        .def_property_readonly("zeros", [](const tc::BlaschkeProduct& b) { return b.zeros(); })
        .def_property_readonly("order", &tc::BlaschkeProduct::order)
        .def("eval", &tc::BlaschkeProduct::eval, py::arg("z"));

    m.def("parse_check", [](const std::string& text) { return tc::render(*tc::parse_symbol(text)); },
          py::arg("text"), "parse DSL text and return its canonical rendering");

    m.def("lower", &tc::lower_dsl, py::arg("text"), py::arg("order") = tc::kDefaultTruncationOrder,
          py::arg("label") = std::string(), "lower DSL text to a TaylorSymbol");

    m.def("blaschke_to_taylor",
          [](const std::vector<Complex>& zeros, int order) {
              return tc::blaschke_to_taylor(tc::BlaschkeProduct(zeros), order);
          },
          py::arg("zeros"), py::arg("order") = tc::kDefaultTruncationOrder);

    m.def("winding_number",
          [](const py::object& s, Complex at, int nodes) {
              return tc::winding_number(as_symbol(s), at, nodes);
          },
          py::arg("symbol"), py::arg("at"), py::arg("nodes") = tc::kDefaultCurveNodes);

    m.def("valence",
          [](const py::object& s, Complex at, int nodes) {
              return tc::valence(as_symbol(s), at, nodes);
          },
          py::arg("symbol"), py::arg("at"), py::arg("nodes") = tc::kDefaultCurveNodes);

    m.def("winding_profile",
          [](const py::object& s, int grid, int nodes) {
              return json_to_py(tc::profile_to_json(tc::winding_profile(as_symbol(s), grid, nodes)));
          },
          py::arg("symbol"), py::arg("grid") = 16, py::arg("nodes") = tc::kDefaultCurveNodes);

    m.def("minimal_winding_of",
          [](const py::object& s, int grid, int nodes) {
              return tc::minimal_winding(tc::winding_profile(as_symbol(s), grid, nodes));
          },
          py::arg("symbol"), py::arg("grid") = 16, py::arg("nodes") = tc::kDefaultCurveNodes);

    m.def("jordan_crossings",
          [](const py::object& s, int nodes) {
              return json_to_py(
                  tc::crossings_to_json(tc::jordan_test(tc::BoundaryCurve(as_symbol(s), nodes))));
          },
          py::arg("symbol"), py::arg("nodes") = tc::kDefaultCurveNodes);

    m.def("univalence",
          [](const py::object& s, int grid, int nodes) {
              const tc::UnivalenceVerdict v = tc::univalence_probe(as_symbol(s), grid, nodes);
              py::dict out;
              out["certified_nonunivalent"] = v.certified_nonunivalent;
              if (v.witness) out["witness"] = py::make_tuple(v.witness->first, v.witness->second);
              if (v.witness_w) out["witness_w"] = *v.witness_w;
              if (v.witness_winding) out["winding"] = *v.witness_winding;
              out["from_grid_collision"] = v.from_grid_collision;
              return out;
          },
          py::arg("symbol"), py::arg("grid") = 16, py::arg("nodes") = tc::kDefaultCurveNodes);

    m.def("single_cover",
          [](const py::object& s, int grid, int nodes) {
              const tc::TaylorSymbol sym = as_symbol(s);
              const tc::SingleCoverVerdict v =
                  tc::single_cover_probe(sym, tc::winding_profile(sym, grid, nodes));
              py::dict out;
              out["single_covers"] = v.single_covers;
              if (v.witness_w) out["witness_w"] = *v.witness_w;
              if (v.witness_a) out["witness_a"] = *v.witness_a;
              return out;
          },
          py::arg("symbol"), py::arg("grid") = 16, py::arg("nodes") = tc::kDefaultCurveNodes);

    m.def("support_gcd",
          [](const py::object& s, double tol) { return tc::support_gcd(as_symbol(s), tol); },
          py::arg("symbol"), py::arg("tol") = tc::kNoiseFloor);

    m.def("bdu_factor",
          [](const py::object& s) { return json_to_py(tc::bdu_to_json(tc::bdu_factor(as_symbol(s)))); },
          py::arg("symbol"));

    m.def("bdu_crosscheck",
          [](const py::object& s, int grid) {
              const tc::BDUCrossCheck c = tc::bdu_crosscheck(as_symbol(s), grid);
              return py::make_tuple(c.k_gcd, c.k_wind, c.agree);
          },
          py::arg("symbol"), py::arg("grid") = 24);

    m.def("tc_inner_part",
          [](const py::object& s, Complex lam) {
              return tc::tc_inner_part(as_symbol(s), lam).zeros();
          },
          py::arg("symbol"), py::arg("lam"));

    m.def("fit_through_blaschke",
          [](const py::object& s, const std::vector<Complex>& zeros, int degree) {
              const tc::TaylorSymbol sym = as_symbol(s);
              const tc::BlaschkeProduct b(zeros);
              const int d = degree > 0 ? degree : tc::default_fit_degree(sym, b);
              return json_to_py(tc::tc_to_json(tc::fit_through_blaschke(sym, b, d)));
          },
          py::arg("symbol"), py::arg("zeros"), py::arg("degree") = 0);

    m.def("toeplitz_matrix",
          [](const py::object& s, int n) { return tc::toeplitz_truncation(as_symbol(s), n).matrix; },
          py::arg("symbol"), py::arg("n"));

    m.def("adjoint_eigen_residual",
          [](const py::object& s, Complex a, int n) {
              return tc::adjoint_eigen_residual(as_symbol(s), a, n);
          },
          py::arg("symbol"), py::arg("a"), py::arg("n"));

    m.def("commutant_dims",
          [](const py::object& s, int dim) {
              const tc::TruncatedOperator t = tc::toeplitz_truncation(as_symbol(s), dim);
              const auto basis = tc::commutant_basis(t);
              const auto bicommutant = tc::double_commutant_basis(basis);
              return py::make_tuple(basis.size(), bicommutant.size(),
                                    tc::polynomial_algebra_dim(t));
          },
          py::arg("symbol"), py::arg("dim") = 8);

    m.def("density_witness",
          [](const py::object& s, int n, int depth) -> py::object {
              const auto w = tc::density_witness(as_symbol(s), n, depth);
              if (!w) return py::none();
              return json_to_py(tc::witness_to_json(*w));
          },
          py::arg("symbol"), py::arg("n") = 16, py::arg("depth") = 6);

    m.def("deddens_wong_residual",
          [](const py::object& s, const Eigen::MatrixXcd& x, Complex a) {
              return tc::deddens_wong_identity_residual(as_symbol(s), {x, "X"}, a);
          },
          py::arg("symbol"), py::arg("x"), py::arg("a"));

    m.def("fejer_polynomial",
          [](const py::object& h, int n) { return tc::fejer_polynomial(as_symbol(h), n); },
          py::arg("h"), py::arg("n"));

    m.def("fejer_wot_gap",
          [](const py::object& h, int n, Complex a, const py::object& f) {
              return tc::fejer_wot_gap(as_symbol(h), n, a, as_symbol(f));
          },
          py::arg("h"), py::arg("n"), py::arg("a"), py::arg("f") = py::cast(std::string("1")));

    m.def("fejer_supnorm_check",
          [](const py::object& h, int n) {
              const tc::SupNormCheck c = tc::fejer_supnorm_check(as_symbol(h), n);
              return py::make_tuple(c.sigma_norm, c.h_norm, c.ok);
          },
          py::arg("h"), py::arg("n"));

    m.def("wold_components",
          [](const py::object& f, int n) { return tc::wold_components(as_symbol(f), n); },
          py::arg("f"), py::arg("n"));

    m.def("wold_projection_matrix",
          [](int n, int dim) { return tc::wold_projection_matrix(n, dim).matrix; }, py::arg("n"),
          py::arg("dim"));

    m.def("dilation_matrix",
          [](Complex lam, int dim) { return tc::dilation_matrix(lam, dim).matrix; },
          py::arg("lam"), py::arg("dim"));

    m.def("malmquist_basis",
          [](const std::vector<Complex>& zeros, int order) {
              return tc::malmquist_basis(tc::BlaschkeProduct(zeros), order);
          },
          py::arg("zeros"), py::arg("order") = tc::kDefaultTruncationOrder);

    m.def("model_expand",
          [](const py::object& f, const std::vector<Complex>& zeros, int depth) {
              const tc::ModelExpansion e =
                  tc::model_expand(as_symbol(f), tc::BlaschkeProduct(zeros), depth);
              return py::make_tuple(e.alpha, e.reconstruction_error);
          },
          py::arg("f"), py::arg("zeros"), py::arg("depth"));

    m.def("_classify_json",
          [](const py::object& s, int order, int nodes, int grid, int depth) {
              tc::ClassifyConfig cfg;
              cfg.truncation_order = order;
              cfg.curve_nodes = nodes;
              cfg.grid = grid;
              cfg.krylov_depth = depth;
              return tc::verdict_to_json(tc::classify(as_symbol(s, order), cfg)).dump();
          },
          py::arg("symbol"), py::arg("order") = tc::kDefaultTruncationOrder,
          py::arg("nodes") = tc::kDefaultCurveNodes, py::arg("grid") = 16, py::arg("depth") = 6);

    m.def("explain_verdict",
          [](const py::object& s, int order, int nodes, int grid, int depth) {
              tc::ClassifyConfig cfg;
              cfg.truncation_order = order;
              cfg.curve_nodes = nodes;
              cfg.grid = grid;
              cfg.krylov_depth = depth;
              return tc::explain(tc::classify(as_symbol(s, order), cfg));
          },
          py::arg("symbol"), py::arg("order") = tc::kDefaultTruncationOrder,
          py::arg("nodes") = tc::kDefaultCurveNodes, py::arg("grid") = 16, py::arg("depth") = 6);

    m.def("winding_plot_svg",
          [](const py::object& s, int nodes) {
              tc::PlotConfig cfg;
              cfg.curve_nodes = nodes;
              return tc::winding_plot_svg(as_symbol(s), cfg);
          },
          py::arg("symbol"), py::arg("nodes") = tc::kDefaultCurveNodes);

    m.def("example_dsl",
          [](const std::string& name) -> py::object {
              const auto dsl = tc::example_dsl(name);
              if (!dsl) return py::none();
              return py::cast(*dsl);
          },
          py::arg("name"));

    m.def("example_names", [] {
        std::vector<std::string> names;
        for (const auto& e : tc::example_registry()) names.push_back(e.name);
        return names;
    });
}
