#pragma once

// Bounded search for x^2 + d = y^n (n >= 3) and for adjacent perfect powers.
// Results are complete only inside the search box.

#include <utility>
#include <vector>

#include "qprimes/arith.hpp"

namespace qprimes {

struct NagellSolution {
  u64 x = 0;
  u64 y = 0;
  unsigned n = 0;
  u64 shift = 0;

  friend bool operator==(const NagellSolution&, const NagellSolution&) = default;
};

/// Exact check of x^2 + d == y^n in 128-bit arithmetic.
[[nodiscard]] bool satisfies(const NagellSolution& s);

inline constexpr unsigned kDefaultMaxExponent = 64;

/// All solutions with 1 <= x <= x_max, y >= 2, 3 <= n <= n_max, ordered by
/// (n, x). Iterates (y, n) with y^n <= x_max^2 + d and tests y^n - d for a
/// perfect square. Throws std::overflow_error if x_max^2 + d leaves 128 bits.
[[nodiscard]] std::vector<NagellSolution> lebesgue_nagell_solve(u64 d, u64 x_max,
                                                                unsigned n_max = kDefaultMaxExponent);

struct ConsecutivePowers {
  std::vector<u64> powers;
  std::vector<std::pair<u64, u64>> adjacent_pairs;
};

/// Perfect powers m^k <= X (k >= 2, deduplicated, 1 included) and the
/// entries of that list that differ by one.
[[nodiscard]] ConsecutivePowers consecutive_powers(u64 X);

}  // namespace qprimes
