// Versioned report envelope: accumulation of check verdicts and a strict
// round-trippable JSON form.

#include "icebox/report.hpp"

#include <stdexcept>

namespace icebox {

void RunReport::add(const std::string& id, bool ok, nlohmann::json details) {
  nlohmann::json check = {{"id", id}, {"pass", ok}};
  if (!details.is_null()) check["details"] = std::move(details);
  add(check);
}

void RunReport::add(const nlohmann::json& check) {
  if (!check.is_object() || !check.contains("pass") || !check["pass"].is_boolean())
    throw std::invalid_argument("a check must be an object with a boolean pass field");
  checks.push_back(check);
  pass = pass && check["pass"].get<bool>();
}

nlohmann::json RunReport::to_json() const {
  return {{"schema", kReportSchema},
          {"suite", suite},
          {"params", params},
          {"pass", pass},
          {"checks", checks}};
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kReportSchema)
    throw std::domain_error("unsupported report schema");
  RunReport rep;
  rep.suite = j.at("suite").get<std::string>();
  rep.params = j.at("params");
  rep.pass = j.at("pass").get<bool>();
  if (!j.at("checks").is_array()) throw std::domain_error("report checks must be an array");
  rep.checks = j.at("checks");
  return rep;
}

}  // namespace icebox
