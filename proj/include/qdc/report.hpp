#pragma once

#include <string>
#include <vector>

#include "qdc/battery.hpp"

namespace qdc {

// JSON report, schema "qdc-report/1". Keys sorted, canonical scalar strings.
// stable=true zeroes wall-clock fields so reruns are byte-identical.
std::string report_json(const std::vector<CheckResult>& results, const std::string& suite, int N,
                        const BatteryOptions& opt, bool stable);

// Human-oriented table.
std::string report_text(const std::vector<CheckResult>& results, const std::string& suite, int N,
                        const BatteryOptions& opt);

std::string dump_rmatrix_json(int N, Convention convention);
std::string dump_rules_json(PresName name, int N, const BuildOptions& opt = {});
std::string dump_presentation_json(PresName name, int N, const BuildOptions& opt = {});

}  // namespace qdc
