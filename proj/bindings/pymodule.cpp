// Python bindings exposing the main operations: Riley representations, the
// adjoint twisted Alexander polynomial by both routes, torsion, and the
// building blocks (Chebyshev, Fox calculus, adjoint closed forms).

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "atap/pipeline.hpp"
#include "atap/record_json.hpp"
#include "atap/selftest.hpp"

namespace py = pybind11;
using namespace atap;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

using PyMat2 = std::array<std::array<cplx, 2>, 2>;
using PyMat3 = std::array<std::array<cplx, 3>, 3>;

Mat2 mat2_from(const PyMat2& m) { return Mat2{m[0][0], m[0][1], m[1][0], m[1][1]}; }

PyMat3 mat3_to(const Mat3& m) {
  PyMat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m.e[i][j];
  return out;
}

RunConfig config_from(int m, int n, std::optional<cplx> x, std::optional<cplx> s,
                      std::optional<double> tol) {
  RunConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.x = x;
  cfg.s = s;
  if (tol) {
    cfg.tol.equality = *tol;
    cfg.tol.root_residual = *tol;
    cfg.tol.crosscheck = *tol;
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(atap, m) {
  m.doc() =
      "Adjoint twisted Alexander polynomials and nonabelian Reidemeister "
      "torsion of the genus one two-bridge knots J(2m,2n)";

  py::register_exception<InvalidParam>(m, "InvalidParamError", PyExc_ValueError);
  py::register_exception<Error>(m, "AtapError", PyExc_RuntimeError);

  m.def("cheb_eval", &cheb_eval, py::arg("k"), py::arg("v"),
        "Chebyshev polynomial of the second kind S_k(v), any integer k");
  m.def(
      "cheb_coeffs",
      [](long k) { return cheb_coeffs(k).coeffs; }, py::arg("k"),
      "Coefficient list of S_k (ascending powers)");
  m.def(
      "poly_roots",
      [](const std::vector<cplx>& coeffs) { return poly_roots(DensePoly(coeffs)); },
      py::arg("coeffs"), "All roots of the polynomial with the given coefficients");

  m.def(
      "build_w", [](int mm) { return build_w(mm).str(); }, py::arg("m"),
      "The word w = (b a^-1)^m (b^-1 a)^m, freely reduced");
  m.def(
      "build_relator",
      [](int mm, int nn) { return build_relator({mm, nn}).str(); }, py::arg("m"),
      py::arg("n"), "The relator w^n a w^-n b^-1, freely reduced");
  m.def(
      "relator_fox_terms",
      [](int mm, int nn) {
        std::vector<std::pair<long long, std::string>> out;
        for (const auto& [w, c] : fox_derivative(build_relator({mm, nn}), Gen::a).terms())
          out.emplace_back(c, w.str());
        return out;
      },
      py::arg("m"), py::arg("n"),
      "Fox derivative d(relator)/da as (coefficient, word) pairs");

  m.def("trace_z", &trace_z, py::arg("m"), py::arg("y"), py::arg("x"),
        "z = tr rho(w) as a function of y and x");
  m.def(
      "riley_poly",
      [](int mm, int nn, cplx s) { return riley_poly({mm, nn}, s).coeffs; },
      py::arg("m"), py::arg("n"), py::arg("s"),
      "Riley polynomial phi_K(s, .) coefficients in y (ascending)");

  m.def(
      "riley_roots",
      [](int mm, int nn, std::optional<cplx> x, std::optional<cplx> s) {
        const RunConfig cfg = config_from(mm, nn, x, s, std::nullopt);
        auto [sv, xv] = resolve_s_x(cfg);
        const RileyRootsResult rr = riley_roots({mm, nn}, sv);
        py::list out;
        for (const NonabelianRep& rep : rr.reps) {
          py::dict d;
          d["s"] = rep.s;
          d["x"] = rep.x;
          d["y"] = rep.y;
          d["z"] = rep.z;
          d["riley_residual"] = rep.riley_residual;
          d["multiplicity"] = rep.multiplicity;
          d["verify_residual"] = verify_rep(rep, {mm, nn});
          out.append(d);
        }
        return out;
      },
      py::arg("m"), py::arg("n"), py::kw_only(), py::arg("x") = std::nullopt,
      py::arg("s") = std::nullopt,
      "Nonabelian representations: one dict per accepted Riley root");

  m.def(
      "ad", [](const PyMat2& M) { return mat3_to(ad(mat2_from(M))); }, py::arg("M"),
      "Adjoint action of an SL2 matrix in the basis {E, H, F}");
  m.def(
      "ad_power_closed",
      [](const PyMat2& M, long k) { return mat3_to(ad_power_closed(mat2_from(M), k)); },
      py::arg("M"), py::arg("n"), "(Ad_M)^n in closed form");
  m.def(
      "ad_geom_sum_closed",
      [](const PyMat2& M, long k) {
        return mat3_to(ad_geom_sum_closed(mat2_from(M), k));
      },
      py::arg("M"), py::arg("n"),
      "sum_{i=0}^{n-1} (Ad_M)^i in closed form (DegenerateTrace on parabolics)");

  m.def(
      "compute",
      [](int mm, int nn, std::optional<cplx> x, std::optional<cplx> s,
         std::optional<double> tol) {
        const RunConfig cfg = config_from(mm, nn, x, s, tol);
        const ComputeResult res = compute_records(cfg);
        py::list out;
        for (const OutputRecord& r : res.records) out.append(json_to_py(record_to_json(r)));
        return out;
      },
      py::arg("m"), py::arg("n"), py::kw_only(), py::arg("x") = std::nullopt,
      py::arg("s") = std::nullopt, py::arg("tol") = std::nullopt,
      "Full pipeline: one record dict per Riley root (same schema as the CLI "
      "JSON output)");

  m.def(
      "crosscheck_grid",
      [](std::pair<int, int> m_range, std::pair<int, int> n_range,
         const std::vector<cplx>& x_samples, double perturb) {
        const GridSummary g = crosscheck_grid(m_range.first, m_range.second,
                                              n_range.first, n_range.second, x_samples,
                                              Tolerances{}, perturb);
        return json_to_py(grid_summary_to_json(g));
      },
      py::arg("m_range"), py::arg("n_range"),
      py::arg("x_samples") = std::vector<cplx>{cplx(2.0), cplx(1.7), cplx(0.6, 1.1)},
      py::arg("perturb") = 0.0, "Dual-pipeline agreement over an (m, n, x) grid");

  m.def(
      "selftest",
      [](std::uint64_t seed) { return json_to_py(suites_to_json(run_selftest(seed))); },
      py::arg("seed") = 1, "Run all invariant suites; returns one dict per suite");

  m.attr("__version__") = "0.1.0";
}
