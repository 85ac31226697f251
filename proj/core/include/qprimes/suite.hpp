#pragma once

// The full verification suite: every acceptance check, each comparing a fast
// routine with an independent oracle, a closed form, or a published value.

#include <functional>
#include <optional>
#include <string_view>

#include "qprimes/parallel.hpp"
#include "qprimes/report.hpp"

namespace qprimes {

inline constexpr std::string_view kSuiteVersion = "1.0.0";

struct SuiteOptions {
  Exec exec;
  /// When set, an extra identity check runs at this cutoff.
  std::optional<double> x;
  std::uint64_t d = 1;
  double epsilon = 0.1;
  /// Only checks whose id starts with this prefix run (empty: all).
  std::string_view filter;
  /// Called after each check completes.
  std::function<void(const CheckRecord&)> on_check;
};

[[nodiscard]] VerificationReport run_verification(const SuiteOptions& options);

}  // namespace qprimes
