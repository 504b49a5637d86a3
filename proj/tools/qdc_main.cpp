// qdc: exact symbolic checks for the GL_q(N)/SL_q(N) differential algebras.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "qdc/battery.hpp"
#include "qdc/errors.hpp"
#include "qdc/expr.hpp"
#include "qdc/report.hpp"
#include "qdc/rewrite.hpp"

namespace {

// "500ms", "20s", "5m" or a plain number of seconds.
std::int64_t parse_budget_ms(const std::string& s) {
  if (s.empty()) return -1;
  std::size_t idx = 0;
  double v = std::stod(s, &idx);
  std::string unit = s.substr(idx);
  if (unit == "ms") return static_cast<std::int64_t>(v);
  if (unit == "m") return static_cast<std::int64_t>(v * 60000.0);
  if (unit.empty() || unit == "s") return static_cast<std::int64_t>(v * 1000.0);
  throw CLI::ValidationError("budget", "unknown time unit '" + unit + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qdc: quantum-group differential calculus checker"};
  app.require_subcommand(1);

  int N = 2;
  std::string suite = "all";
  std::string presentation = "swz";
  std::string format = "text";
  std::string convention = "standard";
  std::string mutation = "none";
  std::string budget;
  std::string expr;
  std::uint64_t seed = 0;
  std::uint64_t step_cap = 1'000'000;
  int max_degree = 3;
  bool stable = false;
  bool dump_rmatrix = false, dump_rules = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", N, "matrix size N")->check(CLI::PositiveNumber);
    cmd->add_option("--convention", convention, "R-matrix convention")
        ->check(CLI::IsMember({"standard", "inverse"}))
        ->envname("QDC_CONVENTION");
    cmd->add_option("--step-cap", step_cap, "rewrite step cap per reduction");
  };

  CLI::App* check = app.add_subcommand("check", "run verification suites");
  add_common(check);
  check->add_option("--suite", suite, "check suite")
      ->check(CLI::IsMember({"all", "matrix", "swz", "lbasis", "fp-embed"}));
  check->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  check->add_option("--seed", seed, "seed for permuted-strategy verification");
  check->add_option("--budget", budget, "time budget, e.g. 90s, 15m, 500ms");
  check->add_option("--max-degree", max_degree, "overlap diagnostic degree")
      ->check(CLI::Range(3, 8));
  check->add_option("--mutation", mutation, "negative-control mutation")
      ->check(CLI::IsMember({"none", "kappa_q", "rhat_entry", "traceless_projector",
                             "ss4_constant", "qtrace_weights"}));
  check->add_flag("--stable", stable, "zero timing fields for byte-stable output");
  bool heavy = false;
  check->add_flag("--heavy", heavy, "run the degree-4 product checks C10-C12 at N >= 3");

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduce an expression to normal form");
  add_common(reduce_cmd);
  reduce_cmd->add_option("--presentation", presentation, "presentation")
      ->check(CLI::IsMember({"frt_T", "swz", "lbasis", "fp"}));
  reduce_cmd->add_option("expr", expr, "expression to reduce")->required();

  CLI::App* dump = app.add_subcommand("dump", "emit presentations, rules or the R-matrix as JSON");
  add_common(dump);
  dump->add_flag("--rmatrix", dump_rmatrix, "dump the R-matrix");
  dump->add_flag("--rules", dump_rules, "dump the compiled rule set");
  dump->add_option("--presentation", presentation, "presentation")
      ->check(CLI::IsMember({"frt_T", "swz", "lbasis", "fp"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      qdc::BatteryOptions opt;
      opt.convention = qdc::convention_from_name(convention);
      opt.mutation = qdc::mutation_from_name(mutation);
      opt.seed = seed;
      opt.step_cap = step_cap;
      opt.max_degree = max_degree;
      opt.heavy = heavy;
      opt.budget_ms = parse_budget_ms(budget);
      qdc::Suite s = qdc::suite_from_name(suite);
      auto results = qdc::run_suite(s, N, opt);
      if (format == "json")
        std::cout << qdc::report_json(results, suite, N, opt, stable);
      else
        std::cout << qdc::report_text(results, suite, N, opt);
      if (qdc::any_failed(results)) return 1;
      if (qdc::any_skipped(results)) return 3;
      return 0;
    }
    if (reduce_cmd->parsed()) {
      qdc::BuildOptions opt;
      opt.convention = qdc::convention_from_name(convention);
      qdc::Presentation pres =
          qdc::make_presentation(qdc::pres_from_name(presentation), N, opt);
      qdc::Polynomial p = qdc::parse_expr(expr, N);
      qdc::ReduceOptions ropt;
      ropt.step_cap = step_cap;
      std::cout << qdc::print_poly(qdc::reduce(p, pres.rules, ropt)) << "\n";
      return 0;
    }
    if (dump->parsed()) {
      qdc::BuildOptions opt;
      opt.convention = qdc::convention_from_name(convention);
      if (dump_rmatrix) {
        std::cout << qdc::dump_rmatrix_json(N, opt.convention);
      } else if (dump_rules) {
        std::cout << qdc::dump_rules_json(qdc::pres_from_name(presentation), N, opt);
      } else if (dump->count("--presentation") > 0) {
        std::cout << qdc::dump_presentation_json(qdc::pres_from_name(presentation), N, opt);
      } else {
        std::cerr << "dump: pick one of --rmatrix, --rules, --presentation\n";
        return 2;
      }
      return 0;
    }
  } catch (const qdc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
