#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdc/presentation.hpp"

namespace qdc {

enum class CheckStatus { pass, fail, skip };

std::string status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  int N = 0;
  CheckStatus status = CheckStatus::skip;
  std::optional<Polynomial> witness;  // nonzero normal form on failure
  std::string detail;                 // failing component label or skip reason
  std::int64_t millis = 0;
};

enum class Suite { all, matrix, swz, lbasis, fp_embed };

std::string suite_name(Suite s);
Suite suite_from_name(const std::string& s);

struct BatteryOptions {
  Convention convention = Convention::standard;
  Mutation mutation = Mutation::none;
  std::uint64_t step_cap = 1'000'000;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::leftmost;
  // Cross-check every zero normal form under a permuted rule-application
  // strategy; a disagreement is reported as a failure.
  bool verify_permuted = true;
  // The degree-4 product checks C10-C12 run at N >= 3 only when opted in;
  // combine with budget_ms for large N.
  bool heavy = false;
  std::int64_t budget_ms = -1;  // < 0: unlimited
  int max_degree = 3;           // overlap diagnostic degree
};

// Canonical check order C1..C13.
const std::vector<std::string>& check_names();
std::vector<std::string> suite_checks(Suite s);

// `pbw_overlaps` accepts an optional presentation filter, e.g.
// "pbw_overlaps:lbasis"; the bare name covers all four presentations.
CheckResult run_check(const std::string& name, int N, const BatteryOptions& opt = {});

std::vector<CheckResult> run_suite(Suite suite, int N, const BatteryOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);
bool any_skipped(const std::vector<CheckResult>& results);
bool any_failed(const std::vector<CheckResult>& results);

}  // namespace qdc
