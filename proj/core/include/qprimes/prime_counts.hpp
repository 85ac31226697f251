#pragma once

// Primes of the form n^2 + d: enumeration, counting, gaps, twin pairs, the
// Euler-product density constant, the n^2 + m^4 prime sum, prime-power hits
// and largest-prime-factor records.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qprimes/arith.hpp"
#include "qprimes/parallel.hpp"

namespace qprimes {

struct QuadraticPrimeList {
  u64 shift = 1;
  u64 limit = 0;
  std::vector<u64> members;  ///< n with n^2 + d prime
  std::vector<u64> primes;   ///< the corresponding n^2 + d
  std::vector<u64> gaps;     ///< primes[i + 1] - primes[i]
};

/// Exhaustive over 1 <= n <= N. Throws std::overflow_error when N^2 + d
/// does not fit in 64 bits.
[[nodiscard]] QuadraticPrimeList quadratic_primes(u64 N, u64 d);

/// #{n >= 1 : n^2 + d <= x, n^2 + d prime}.
[[nodiscard]] u64 pi_f(double x, u64 d);

/// (n^2 + 1, n^2 + 3) for n <= N with both entries prime, ascending.
[[nodiscard]] std::vector<std::pair<u64, u64>> twin_quadratic_pairs(u64 N);

/// A truncated Euler product or prime sum, reported both raw and averaged
/// over the running values for primes in (P/2, P].
struct ConstantEstimate {
  std::string name;
  u64 prime_bound = 0;
  double raw = 0;
  double averaged = 0;
  /// max - min of the running value over the averaging block.
  double oscillation = 0;
  std::optional<double> reference;
};

inline constexpr double kHardyLittlewoodReference = 1.3727;

/// prod_{3 <= p <= P} (1 - chi(p) / (p - 1)), chi(p) = (-d | p).
[[nodiscard]] ConstantEstimate hardy_littlewood_constant(u64 d, u64 P);

/// integral_0^1 sqrt(1 - t^4) dt by composite Gauss-Legendre quadrature.
[[nodiscard]] double kappa_quadrature();
/// Gamma(1/4)^2 / (6 sqrt(2 pi)).
[[nodiscard]] double kappa_gamma();

struct FouvryIwaniecResult {
  double x = 0;
  double sum = 0;
  double predicted = 0;
  double ratio = 0;
  double kappa_quadrature = 0;
  double kappa_gamma = 0;
};

/// sum over n, m >= 1 with n^2 + m^4 <= x of Lambda(n^2 + m^4), against
/// (4 kappa / pi) x^(3/4).
[[nodiscard]] FouvryIwaniecResult fouvry_iwaniec_sum(double x, Exec exec = {});

struct PrimePowerHit {
  u64 n = 0;
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePowerHit&, const PrimePowerHit&) = default;
};

/// Every 1 <= n <= N with n^2 + d = p^v, v >= 2.
[[nodiscard]] std::vector<PrimePowerHit> prime_power_scan(u64 N, u64 d, Exec exec = {});

struct FactorRecord {
  u64 n = 0;
  u64 largest_prime = 0;
  double exponent = 0;  ///< log P / log n
};

struct LargestFactorRecords {
  u64 limit = 0;
  u64 shift = 1;
  /// n >= 2 whose exponent beats every earlier n.
  std::vector<FactorRecord> records;
  /// P(prod_{n <= N} (n^2 + d)) and the first n attaining it.
  u64 max_prime = 1;
  u64 max_prime_n = 0;
  double max_exponent = 0;
};

/// Largest prime factor of n^2 + d for every n <= N via a polynomial sieve.
[[nodiscard]] std::vector<u64> largest_prime_factors(u64 N, u64 d);

[[nodiscard]] LargestFactorRecords largest_prime_factor_records(u64 N, u64 d);

}  // namespace qprimes
