#pragma once

// Machine-readable verification report.
//
// JSON schema:
//   {"version": str,
//    "checks": [{"id", "module", "inputs", "computed", "reference", "tol",
//                "status", "ms"?}],
//    "status": "pass" | "fail"}
// "ms" is written only when timing output is requested, so that reports from
// identical runs compare byte for byte.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qprimes {

enum class CheckStatus { pass, fail, skip };

[[nodiscard]] std::string_view to_string(CheckStatus s);
/// Throws std::invalid_argument for anything but "pass", "fail", "skip".
[[nodiscard]] CheckStatus parse_status(std::string_view s);

struct CheckRecord {
  std::string id;
  std::string module;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json computed;
  nlohmann::json reference;
  std::optional<double> tol;
  CheckStatus status = CheckStatus::skip;
  double ms = 0;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
  std::string version;
  std::vector<CheckRecord> checks;

  /// pass iff no check failed.
  [[nodiscard]] CheckStatus overall() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

[[nodiscard]] nlohmann::json to_json(const VerificationReport& report, bool include_timing);
[[nodiscard]] VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace qprimes
