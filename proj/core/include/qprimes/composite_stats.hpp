#pragma once

// Exact counts of integers by number of distinct prime factors, and the
// rho-weighted mass carried by moduli with many prime factors.

#include <vector>

#include "qprimes/arith.hpp"

namespace qprimes {

struct OmegaHistogram {
  u64 limit = 0;
  /// counts[k] = #{1 <= n <= limit : omega(n) = k}; n = 1 sits at k = 0.
  std::vector<u64> counts;
  double loglog = 0;
  unsigned threshold = 0;  ///< ceil(log log limit)

  [[nodiscard]] u64 total() const;
  [[nodiscard]] u64 count(unsigned k) const { return k < counts.size() ? counts[k] : 0; }
  /// sum_{k >= threshold} counts[k] / limit.
  [[nodiscard]] double high_omega_fraction() const;
};

[[nodiscard]] OmegaHistogram omega_histogram(const FactorSieve& sieve, u64 x);

/// #{n <= x : omega(n) = k}.
[[nodiscard]] u64 pi_k(const FactorSieve& sieve, u64 x, unsigned k);

/// pi_k(x) (k-1)! log x / (x (log log x)^(k-1)). Throws for x < 16 or k == 0.
[[nodiscard]] double landau_ratio(const FactorSieve& sieve, u64 x, unsigned k);

struct HighOmegaMass {
  u64 x = 0;
  u64 shift = 1;
  double loglog = 0;
  /// omega(q) > log log x, compared against the real value.
  u64 count = 0;
  u64 rho_sum = 0;
  /// omega(q) > ceil(log log x).
  u64 count_ceil = 0;
  u64 rho_sum_ceil = 0;
  /// x^(1 - (log log x)(log log log x) / (2 log x)).
  double bound = 0;

  [[nodiscard]] bool within_bound() const { return static_cast<double>(rho_sum) <= bound; }
};

/// Throws for x < 16 (log log log x must be positive).
[[nodiscard]] HighOmegaMass high_omega_mass(const FactorSieve& sieve, u64 x, u64 d);

}  // namespace qprimes
