#pragma once

#include <json.hpp>

#include "verify.hpp"

namespace metrext {

inline nlohmann::ordered_json report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["expected_fail"] = r.expected_fail;
  j["tolerance"] = r.tolerance;
  if (r.witness) {
    nlohmann::ordered_json w;
    w["points"] = r.witness->points;
    w["values"] = r.witness->values;
    w["detail"] = r.witness->detail;
    j["witness"] = w;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& reps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reps) arr.push_back(report_to_json(r));
  return arr;
}

}  // namespace metrext
