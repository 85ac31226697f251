#pragma once

// Brute-force reference routines. Nothing in the production path calls into
// this header; it exists so the verification suite (and tests) can compare
// each fast routine against a method that shares none of its code.

#include <vector>

#include "qprimes/arith.hpp"
#include "qprimes/diophantine.hpp"

namespace qprimes::oracle {

[[nodiscard]] Factorization trial_factor(u64 n);
[[nodiscard]] bool is_prime_trial(u64 n);
[[nodiscard]] int mobius_trial(u64 n);
[[nodiscard]] double von_mangoldt_trial(u64 n);

/// Every r in [0, q) with r^2 + d == 0 (mod q).
[[nodiscard]] std::vector<u64> root_scan(u64 q, u64 d);

/// n >= 2 with n^2 + d <= x and q | n^2 + d, by testing every n.
[[nodiscard]] std::vector<u64> progression_filter(double x, u64 q, u64 d);

/// Triple loop over x, n, y.
[[nodiscard]] std::vector<NagellSolution> nagell_naive(u64 d, u64 x_max, unsigned n_max = kDefaultMaxExponent);

/// log lcm(1^2 + d, ..., n^2 + d) via arbitrary-precision lcm.
[[nodiscard]] double psi_bigint(u64 n, u64 d = 1);

/// max_{1 <= m <= n} v_p(m^2 + d) by repeated division.
[[nodiscard]] unsigned max_valuation_trial(u64 p, u64 n, u64 d = 1);

}  // namespace qprimes::oracle
