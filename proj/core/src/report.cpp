#include "qprimes/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace qprimes {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skip:
      return "skip";
  }
  return "skip";
}

CheckStatus parse_status(std::string_view s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skip") return CheckStatus::skip;
  throw std::invalid_argument("unknown check status: " + std::string(s));
}

CheckStatus VerificationReport::overall() const {
  const bool failed =
      std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
  return failed ? CheckStatus::fail : CheckStatus::pass;
}

nlohmann::json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j;
    j["id"] = c.id;
    j["module"] = c.module;
    j["inputs"] = c.inputs;
    j["computed"] = c.computed;
    j["reference"] = c.reference;
    j["tol"] = c.tol ? nlohmann::json(*c.tol) : nlohmann::json(nullptr);
    j["status"] = to_string(c.status);
    if (include_timing) j["ms"] = c.ms;
    checks.push_back(std::move(j));
  }
  nlohmann::json out;
  out["version"] = report.version;
  out["checks"] = std::move(checks);
  out["status"] = to_string(report.overall());
  return out;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.version = j.at("version").get<std::string>();
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.id = c.at("id").get<std::string>();
    rec.module = c.value("module", std::string{});
    rec.inputs = c.value("inputs", nlohmann::json::object());
    rec.computed = c.value("computed", nlohmann::json());
    rec.reference = c.value("reference", nlohmann::json());
    if (c.contains("tol") && !c.at("tol").is_null()) rec.tol = c.at("tol").get<double>();
    rec.status = parse_status(c.at("status").get<std::string>());
    rec.ms = c.value("ms", 0.0);
    r.checks.push_back(std::move(rec));
  }
  if (j.contains("status") && parse_status(j.at("status").get<std::string>()) != r.overall()) {
    throw std::invalid_argument("report status disagrees with its checks");
  }
  return r;
}

}  // namespace qprimes
