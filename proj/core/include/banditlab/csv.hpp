#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "banditlab/policies.hpp"
#include "banditlab/runner.hpp"

namespace banditlab {

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double value);

// One label per policy: the kind name, with "_2", "_3", ... appended to
// repeated kinds in order of appearance.
std::vector<std::string> policy_labels(std::span<const PolicySpec> policies);

// "<label>_K<arms>.csv"
std::string curve_file_name(std::string_view label, int arms);

// Header: round,mean_regret,stderr,runs,policy,env,K,horizon,seed
// followed by one row per recorded round. Line ending is '\n'.
void write_curve_csv(std::ostream& out, const AggregateCurve& curve,
                     std::string_view policy_label, std::string_view env_name,
                     int arms, int horizon, std::uint64_t seed);

}  // namespace banditlab
