#include <doctest.h>

#include <json.hpp>

#include "qdc/battery.hpp"
#include "qdc/report.hpp"
#include "qdc/rewrite.hpp"

using namespace qdc;

TEST_CASE("xi_nilpotent and fp_embedding pass at N=2") {
  CHECK(run_check("xi_nilpotent", 2).status == CheckStatus::pass);
  CHECK(run_check("fp_embedding", 2).status == CheckStatus::pass);
}

TEST_CASE("kappa mutation flips fp_embedding with a nonzero witness") {
  BatteryOptions opt;
  opt.mutation = Mutation::kappa_q;
  CheckResult r = run_check("fp_embedding", 2, opt);
  CHECK(r.status == CheckStatus::fail);
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(r.witness->is_zero());
  // the witness is a normal form: re-reducing it reproduces it
  Presentation pres = make_presentation(PresName::lbasis, 2,
                                        BuildOptions{opt.convention, opt.mutation, {}});
  CHECK(reduce(*r.witness, pres.rules) == *r.witness);
}

TEST_CASE("suite routing") {
  auto matrix = suite_checks(Suite::matrix);
  CHECK(matrix == std::vector<std::string>{"ybe_hecke", "qtrace_traceless", "detq_central"});
  auto fp = suite_checks(Suite::fp_embed);
  CHECK(fp == std::vector<std::string>{"helper_identities", "fp_embedding",
                                       "omegaL_basis_change"});
  CHECK(suite_checks(Suite::all).size() == 13);
}

TEST_CASE("matrix suite at N=3 gives three passes") {
  auto results = run_suite(Suite::matrix, 3);
  REQUIRE(results.size() == 3);
  for (const auto& r : results) CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("run_suite(all, 2) gives 13 passes") {
  auto results = run_suite(Suite::all, 2);
  REQUIRE(results.size() == 13);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.status == CheckStatus::pass);
  }
  CHECK(all_passed(results));
  CHECK_FALSE(any_skipped(results));
}

TEST_CASE("pbw_overlaps presentation filter") {
  CHECK(run_check("pbw_overlaps:frt_T", 3).status == CheckStatus::pass);
  CHECK(run_check("pbw_overlaps:swz", 2).status == CheckStatus::pass);
}

TEST_CASE("budget gate skips out-of-scale runs") {
  BatteryOptions opt;
  opt.budget_ms = 1000;
  auto results = run_suite(Suite::lbasis, 9, opt);
  CHECK(any_skipped(results));
  for (const auto& r : results) {
    CHECK(r.status == CheckStatus::skip);
    CHECK(r.detail.find("budget") != std::string::npos);
  }
}

TEST_CASE("heavy product checks at N>=3 sit behind the opt-in") {
  CheckResult r = run_check("w_relations", 3);
  CHECK(r.status == CheckStatus::skip);
  CHECK(r.detail.find("heavy") != std::string::npos);
}

TEST_CASE("rhat mutation fails ybe_hecke and skips rule-based checks") {
  BatteryOptions opt;
  opt.mutation = Mutation::rhat_entry;
  CHECK(run_check("ybe_hecke", 2, opt).status == CheckStatus::fail);
  // presentation construction cannot verify the Hecke inverse any more
  CheckResult dc = run_check("detq_central", 2, opt);
  CHECK(dc.status == CheckStatus::skip);
}

TEST_CASE("JSON report carries the schema and stable mode zeroes timing") {
  BatteryOptions opt;
  auto results = run_suite(Suite::matrix, 2, opt);
  std::string doc = report_json(results, "matrix", 2, opt, true);
  auto j = nlohmann::json::parse(doc);
  CHECK(j["schema"] == "qdc-report/1");
  CHECK(j["suite"] == "matrix");
  CHECK(j["N"] == 2);
  CHECK(j["convention"] == "standard");
  REQUIRE(j["checks"].size() == 3);
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK(c["millis"] == 0);
    CHECK(c["witness"].is_null());
  }
}

TEST_CASE("unknown check name is rejected") {
  CHECK_THROWS_AS(run_check("nonsense", 2), std::invalid_argument);
}

TEST_CASE("dump outputs are byte-identical across runs") {
  CHECK(dump_rmatrix_json(2, Convention::standard) ==
        dump_rmatrix_json(2, Convention::standard));
  CHECK(dump_rules_json(PresName::lbasis, 2) == dump_rules_json(PresName::lbasis, 2));
  CHECK(dump_presentation_json(PresName::fp, 2) == dump_presentation_json(PresName::fp, 2));
}
