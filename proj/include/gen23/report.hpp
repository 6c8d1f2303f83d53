#pragma once

#include <string>

#include "json.hpp"

namespace gen23 {

/// Outcome of checking one stated claim.
struct ClaimReport {
  std::string id;
  std::string label;
  bool verdict = false;
  nlohmann::json data = nlohmann::json::object();
  double seconds = 0.0;
};

inline nlohmann::json to_json(const ClaimReport& r, bool with_timing = true) {
  nlohmann::json j{{"id", r.id}, {"label", r.label}, {"verdict", r.verdict}, {"data", r.data}};
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace gen23
