#pragma once

// Group enumeration by closure, classical target orders, generation
// certificates and non-generation scans.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gen23/paperlib.hpp"
#include "gen23/polyring.hpp"
#include "gen23/report.hpp"

namespace gen23 {

/// A requested enumeration does not fit under the configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClosureOptions {
  u64 cap = u64{1} << 26;
  bool keep_elements = false;
  /// Called every 2^20 new elements with the current count.
  std::function<void(u64)> progress;
};

struct ClosureResult {
  u64 order = 0;
  u64 scalar_subgroup_order = 0;
  bool truncated = false;
  /// "u64", "u128" or "bytes".
  std::string key_width;
  std::vector<Matrix> elements;
};

/// Breadth-first closure under right multiplication by the generators.
/// Throws std::invalid_argument on empty, mismatched or singular input.
ClosureResult closure(const std::vector<Matrix>& gens, const ClosureOptions& opts = {});

enum class Family { SL, SU };

struct TargetGroup {
  Family family = Family::SL;
  int n = 3;
  /// For SU the group lives over GF(q^2).
  u64 q = 2;
  BigInt expected_order;
  u64 center_order = 1;

  BigInt projective_order() const { return expected_order / center_order; }
  std::string name() const;
  /// GF(q) for SL, GF(q^2) for SU.
  Field field() const;
};

TargetGroup target_order(Family family, int n, u64 q);
TargetGroup target_for(Target t, u64 q);

struct VerifyOptions {
  u64 cap = u64{1} << 26;
  /// A prime that must divide the order of xy in partial mode.
  std::optional<u64> witness_divisor;
  std::function<void(u64)> progress;
};

/// Full mode when the target order is at most the cap, partial otherwise.
ClaimReport verify_generation(const SearchResult& witness, Target target, const TargetGroup& group,
                              const VerifyOptions& opts = {});

enum class ScanMode { AllPairs, Canonical };

struct ScanCase {
  std::string id;
  std::string label;
  u64 order = 0;  // projective order of the closure
  std::optional<std::string> expected_label;
  /// The pair preserves a nondegenerate form of the target (always true in
  /// all-pairs mode). Reducible canonical pairs can fall outside.
  bool in_target = true;
};

struct NonGenerationCertificate {
  TargetGroup group;
  ScanMode mode = ScanMode::AllPairs;
  std::vector<ScanCase> cases;
  bool verdict = false;
  bool generating_pair_found = false;
  u64 involution_classes = 0;
  u64 order3_elements = 0;
  u64 group_elements = 0;
};

struct ScanOptions {
  u64 cap = u64{1} << 26;
  int threads = 1;
};

/// All-pairs: one involution per conjugacy class of the projective group
/// against every projective order-3 element. Canonical: the eq. (2) pairs
/// with b = a^q for every nonzero a (unitary dimension-3 targets only).
NonGenerationCertificate nongeneration_scan(const TargetGroup& group, ScanMode mode, const ScanOptions& opts = {});

/// A generating set of the full group, filtered from unitriangular and
/// diagonal matrices preserving the standard form.
std::vector<Matrix> classical_generators(const TargetGroup& group);

nlohmann::json to_json(const ClosureResult& r);
nlohmann::json to_json(const TargetGroup& g);
nlohmann::json to_json(const NonGenerationCertificate& c);
std::string to_string(ScanMode m);

}  // namespace gen23
