#pragma once

// Registry of runnable claims and batch reports.

#include <functional>
#include <string>
#include <vector>

#include "gen23/numtheory.hpp"
#include "gen23/report.hpp"

namespace gen23 {

enum class Feasibility { Exact, ExhaustiveScan, PartialCertificate };
std::string to_string(Feasibility f);

struct RunConfig {
  u64 seed = 0;
  u64 cap = u64{1} << 26;
  int threads = 1;
  bool slow = false;
};

struct Claim {
  std::string id;
  std::string description;
  std::vector<std::string> modules;
  Feasibility feasibility = Feasibility::Exact;
  /// Excluded from "all" unless slow claims are requested.
  bool slow = false;
  std::function<ClaimReport(const RunConfig&)> run;
};

const std::vector<Claim>& claim_registry();
/// nullptr for an unknown id.
const Claim* find_claim(const std::string& id);

/// Runs a claim, records wall-clock time and turns a cap overrun into a
/// failed verdict with data.cap_exceeded = true.
ClaimReport run_claim(const Claim& claim, const RunConfig& cfg);

struct RunReport {
  RunConfig config;
  std::vector<ClaimReport> results;
  bool all_pass() const;
  bool any_cap_exceeded() const;
};

nlohmann::json to_json(const RunReport& r, bool with_timing = true);
std::string to_markdown(const RunReport& r, bool with_timing = true);

}  // namespace gen23
