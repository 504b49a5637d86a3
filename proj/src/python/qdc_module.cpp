#include <pybind11/pybind11.h>

#include "qdc/battery.hpp"
#include "qdc/expr.hpp"
#include "qdc/report.hpp"
#include "qdc/rewrite.hpp"

namespace py = pybind11;

namespace {

qdc::BuildOptions build_opts(const std::string& convention) {
  qdc::BuildOptions opt;
  opt.convention = qdc::convention_from_name(convention);
  return opt;
}

bool py_check_ybe(int n, const std::string& convention) {
  return qdc::check_ybe(n, qdc::convention_from_name(convention));
}

bool py_check_hecke(int n, const std::string& convention) {
  return qdc::check_hecke(n, qdc::convention_from_name(convention));
}

std::string py_reduce_expr(const std::string& presentation, int n, const std::string& expr,
                           const std::string& convention) {
  qdc::Presentation pres =
      qdc::make_presentation(qdc::pres_from_name(presentation), n, build_opts(convention));
  return qdc::print_poly(qdc::reduce(qdc::parse_expr(expr, n), pres.rules));
}

std::string py_normalize_expr(const std::string& expr, int n) {
  return qdc::print_poly(qdc::parse_expr(expr, n));
}

std::string py_run_suite_json(const std::string& suite, int n, const std::string& convention,
                              const std::string& mutation, std::int64_t budget_ms, bool stable) {
  qdc::BatteryOptions opt;
  opt.convention = qdc::convention_from_name(convention);
  opt.mutation = qdc::mutation_from_name(mutation);
  opt.budget_ms = budget_ms;
  auto results = qdc::run_suite(qdc::suite_from_name(suite), n, opt);
  return qdc::report_json(results, suite, n, opt, stable);
}

std::string py_run_check_json(const std::string& name, int n, const std::string& convention,
                              const std::string& mutation) {
  qdc::BatteryOptions opt;
  opt.convention = qdc::convention_from_name(convention);
  opt.mutation = qdc::mutation_from_name(mutation);
  auto result = qdc::run_check(name, n, opt);
  return qdc::report_json({result}, "single", n, opt, false);
}

py::tuple py_constants(int n) {
  auto [lam, nq, kq] = qdc::constants(n);
  return py::make_tuple(lam.str(), nq.str(), kq.str());
}

py::dict py_defined_symbols(int n) {
  qdc::DefinedSymbols tab = qdc::defined_symbols(n);
  auto matrix = [](const qdc::PolyMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
      py::list row;
      for (int j = 0; j < m.cols(); ++j) row.append(qdc::print_poly(m.at(i, j)));
      rows.append(row);
    }
    return rows;
  };
  py::dict d;
  d["OmTilde"] = matrix(tab.omega_tilde);
  d["WL"] = matrix(tab.wl);
  d["OmX"] = matrix(tab.omega_x);
  d["XiX"] = qdc::print_poly(tab.xi);
  d["W"] = matrix(tab.w);
  d["Wbar"] = matrix(tab.wbar);
  d["TrOmL"] = qdc::print_poly(tab.tr_omL);
  d["DetT"] = qdc::print_poly(tab.det_T);
  return d;
}

std::string py_dump_rmatrix(int n, const std::string& convention) {
  return qdc::dump_rmatrix_json(n, qdc::convention_from_name(convention));
}

std::string py_dump_rules(const std::string& presentation, int n, const std::string& convention) {
  return qdc::dump_rules_json(qdc::pres_from_name(presentation), n, build_opts(convention));
}

std::string py_dump_presentation(const std::string& presentation, int n,
                                 const std::string& convention) {
  return qdc::dump_presentation_json(qdc::pres_from_name(presentation), n,
                                     build_opts(convention));
}

}  // namespace

PYBIND11_MODULE(_qdc, m) {
  m.doc() = "Exact rewriting checks for quantum-group differential algebras";

  m.def("check_ybe", &py_check_ybe, py::arg("n"), py::arg("convention") = "standard",
        "Braid Yang-Baxter identity for the GL_q(N) R-matrix");
  m.def("check_hecke", &py_check_hecke, py::arg("n"), py::arg("convention") = "standard",
        "Hecke identity R - R^-1 = lambda Id");
  m.def("constants", &py_constants, py::arg("n"),
        "(lambda, N_q, kappa_q) as canonical strings");
  m.def("reduce_expr", &py_reduce_expr, py::arg("presentation"), py::arg("n"), py::arg("expr"),
        py::arg("convention") = "standard",
        "Normal form of an expression in the given presentation");
  m.def("normalize_expr", &py_normalize_expr, py::arg("expr"), py::arg("n"),
        "Parse and reprint an expression in canonical term order");
  m.def("run_suite_json", &py_run_suite_json, py::arg("suite"), py::arg("n"),
        py::arg("convention") = "standard", py::arg("mutation") = "none",
        py::arg("budget_ms") = -1, py::arg("stable") = false,
        "Run a check suite; returns the qdc-report/1 JSON document");
  m.def("run_check_json", &py_run_check_json, py::arg("name"), py::arg("n"),
        py::arg("convention") = "standard", py::arg("mutation") = "none",
        "Run a single named check; returns a one-element report");
  m.def("defined_symbols", &py_defined_symbols, py::arg("n"),
        "The defined-symbol table (traceless forms, W, Wbar, xi_x, ...) as strings");
  m.def("dump_rmatrix", &py_dump_rmatrix, py::arg("n"), py::arg("convention") = "standard");
  m.def("dump_rules", &py_dump_rules, py::arg("presentation"), py::arg("n"),
        py::arg("convention") = "standard");
  m.def("dump_presentation", &py_dump_presentation, py::arg("presentation"), py::arg("n"),
        py::arg("convention") = "standard");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
