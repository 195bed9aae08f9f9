#include "banditlab/csv.hpp"

#include <charconv>
#include <map>
#include <system_error>

#include "banditlab/errors.hpp"

namespace banditlab {

std::string format_double(double value) {
  char buffer[64];
  const std::to_chars_result result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (result.ec != std::errc{}) {
    throw DataError("format_double: conversion failed");
  }
  return std::string(buffer, result.ptr);
}

std::vector<std::string> policy_labels(std::span<const PolicySpec> policies) {
  std::map<std::string, int> seen;
  std::vector<std::string> labels;
  labels.reserve(policies.size());
  for (const PolicySpec& policy : policies) {
    std::string label(policy.name());
    const int occurrence = ++seen[label];
    if (occurrence > 1) {
      label += "_" + std::to_string(occurrence);
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

std::string curve_file_name(std::string_view label, int arms) {
  return std::string(label) + "_K" + std::to_string(arms) + ".csv";
}

void write_curve_csv(std::ostream& out, const AggregateCurve& curve,
                     std::string_view policy_label, std::string_view env_name,
                     int arms, int horizon, std::uint64_t seed) {
  if (curve.rounds.size() != curve.mean_regret.size() ||
      curve.rounds.size() != curve.stderr_regret.size()) {
    throw DataError("write_curve_csv: curve vectors must have equal length");
  }
  out << "round,mean_regret,stderr,runs,policy,env,K,horizon,seed\n";
  for (std::size_t i = 0; i < curve.rounds.size(); ++i) {
    out << curve.rounds[i] << ',' << format_double(curve.mean_regret[i]) << ','
        << format_double(curve.stderr_regret[i]) << ',' << curve.runs << ','
        << policy_label << ',' << env_name << ',' << arms << ',' << horizon
        << ',' << seed << '\n';
  }
}

}  // namespace banditlab
