#pragma once

// psi_f(n) = log lcm(1^2 + 1, ..., n^2 + 1), computed from maximal prime-power
// valuations rather than from the lcm itself, and the constant B in
// psi_f(n) = n log n + B n + o(n).

#include <vector>

#include "qprimes/arith.hpp"
#include "qprimes/prime_counts.hpp"

namespace qprimes {

inline constexpr double kLcmConstantReference = -0.0662756342;

/// max over 1 <= m <= n of v_p(m^2 + d), by lifting the roots of
/// m^2 + d mod p^k while some root has a representative <= n.
[[nodiscard]] unsigned max_valuation(u64 p, u64 n, u64 d = 1);

/// log lcm(1^2 + d, ..., n^2 + d).
[[nodiscard]] double psi_f(u64 n, u64 d = 1);

/// Euler-Mascheroni constant from the Euler-Maclaurin expansion of H_n.
[[nodiscard]] double euler_gamma();

/// gamma - 1 - (log 2)/2 - sum_{3 <= p <= P} (-1 | p) log p / (p - 1).
[[nodiscard]] ConstantEstimate lcm_constant(u64 P);

struct PsiTrace {
  std::vector<u64> n;
  std::vector<double> psi;
  /// (psi - n log n - B n) / n
  std::vector<double> residual_over_n;
  double B_used = 0;
  /// Least-squares line psi - n log n ~ intercept + slope * n over the
  /// upper half of the samples.
  double fitted_slope = 0;
  double fitted_intercept = 0;
};

/// Samples psi_f at n = round(100 * 2^(i/4)) up to n_max (n_max itself is
/// always included). Throws for n_max < 100.
[[nodiscard]] PsiTrace psi_residual_trend(u64 n_max, double B = kLcmConstantReference);

}  // namespace qprimes
