#pragma once

// Versioned JSON envelope for verification runs.  A RunReport collects the
// individual check verdicts of one suite together with the parameters that
// produced them; serialization is deterministic, so re-serializing a parsed
// report reproduces the original bytes.

#include <string>

#include <json.hpp>

namespace icebox {

inline constexpr const char* kReportSchema = "icebox.report/1";

// Aggregate verdict of one verification suite.  `checks` is a JSON array of
// per-check objects, each carrying at least "id" and "pass"; `pass` is the
// conjunction of all recorded verdicts.
struct RunReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json checks = nlohmann::json::array();
  bool pass = true;

  // Records one verdict; `details` is attached only when non-null.
  void add(const std::string& id, bool ok, nlohmann::json details = nullptr);

  // Records a pre-built check object; it must carry a boolean "pass".
  void add(const nlohmann::json& check);

  nlohmann::json to_json() const;

  // Parses a serialized report, rejecting unknown schema versions.
  static RunReport from_json(const nlohmann::json& j);
};

}  // namespace icebox
