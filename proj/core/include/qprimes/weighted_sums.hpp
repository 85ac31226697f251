#pragma once

// The weighted sum of Lambda(n^2 + d) over n >= 2, n^2 + d <= x, evaluated
// directly and through its Moebius expansion over moduli q <= x, together with
// the per-modulus progression sums that the expansion is built from.
//
// Every routine takes an Exec; results do not depend on Exec::threads.

#include <vector>

#include "qprimes/arith.hpp"
#include "qprimes/parallel.hpp"

namespace qprimes {

inline constexpr double kDefaultEpsilon = 0.1;
inline constexpr double kDefaultAlpha = 0.5;

/// Largest n with n^2 + d <= x, or 0 when there is none.
[[nodiscard]] u64 max_index(double x, u64 d);

/// 1 / (n (log n)^(1 - alpha)) for n >= 2.
[[nodiscard]] double sum_weight(u64 n, double alpha = kDefaultAlpha);

/// sum_{2 <= n, n^2 + d <= x} Lambda(n^2 + d) / (n (log n)^(1 - alpha)).
/// Returns 0 for x < 5; throws std::invalid_argument unless 0 < alpha <= 1.
[[nodiscard]] double lhs_sum(double x, u64 d, double alpha = kDefaultAlpha, Exec exec = {});

/// -sum_{q <= x} mu(q) log q * T(x; q, d), T the progression sum over the
/// roots of n^2 + d mod q. The sieve must cover floor(x).
[[nodiscard]] double rhs_mobius_expansion(const FactorSieve& sieve, double x, u64 d, Exec exec = {});
[[nodiscard]] double rhs_mobius_expansion(double x, u64 d, Exec exec = {});

struct SumDecomposition {
  double x = 0;
  u64 shift = 1;
  double epsilon = kDefaultEpsilon;
  double lhs = 0;
  double rhs_total = 0;
  double small_part = 0;
  double large_part = 0;
  double large_low_omega = 0;
  double large_high_omega = 0;
  /// Moduli q <= small_cutoff count as small.
  double small_cutoff = 0;
  unsigned omega_threshold = 0;

  [[nodiscard]] bool identity_holds(double rel_tol = 1e-9) const;
};

/// Splits the expansion at q = x^(1/2 - epsilon), and the large moduli again
/// by omega(q) <= ceil(log log x). Throws unless 0 < epsilon < 1/2.
[[nodiscard]] SumDecomposition dyadic_split(const FactorSieve& sieve, double x, u64 d,
                                            double epsilon = kDefaultEpsilon, Exec exec = {});
[[nodiscard]] SumDecomposition dyadic_split(double x, u64 d, double epsilon = kDefaultEpsilon, Exec exec = {});

struct ProgressionSumResult {
  u64 modulus = 1;
  u64 shift = 1;
  /// Exact sum of 1/(n sqrt(log n)) over qualifying n.
  double direct = 0;
  /// Closed-form integral estimate summed over roots.
  double estimate = 0;
  /// frac((sqrt(x) - r) / q) for every root r, in root order.
  std::vector<double> frac_parts;
  /// rho(q) * g(n0), n0 the smallest qualifying n.
  double error_bound = 0;
};

/// Qualifying n (n >= 2, n^2 + d <= x, q | n^2 + d), ascending, found by
/// stepping each root by q.
[[nodiscard]] std::vector<u64> progression_members(double x, u64 q, u64 d);

[[nodiscard]] ProgressionSumResult progression_sum(double x, u64 q, u64 d);

/// sum_{n <= x, n == a (mod q)} mu(n) log n / n. Throws when gcd(a, q) > 1
/// or x exceeds the sieve.
[[nodiscard]] double mobius_log_progression(const FactorSieve& sieve, double x, u64 q, u64 a);

/// sum_{1 <= n <= N} Lambda(n^2 + d) n^(-s).
[[nodiscard]] double dirichlet_partial(double s, u64 N, u64 d, Exec exec = {});

}  // namespace qprimes
