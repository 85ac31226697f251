#pragma once

// Roots of n^2 + d == 0 (mod q): square roots modulo primes, lifting to prime
// powers, and CRT recombination for composite moduli.

#include <cstddef>
#include <vector>

#include "qprimes/arith.hpp"

namespace qprimes {

/// Sorted roots r in [0, q) of r^2 + shift == 0 (mod modulus).
struct RootSet {
  u64 modulus = 1;
  u64 shift = 1;
  std::vector<u64> roots;

  [[nodiscard]] std::size_t count() const { return roots.size(); }
};

/// Legendre symbol (a | p) for an odd prime p, via Euler's criterion.
[[nodiscard]] int legendre(u64 a, u64 p);

/// p |-> (-d | p) on odd primes; 0 when p divides d and for p == 2.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(u64 shift) : shift_(shift) {}

  [[nodiscard]] u64 shift() const { return shift_; }
  [[nodiscard]] int operator()(u64 p) const;

 private:
  u64 shift_;
};

/// All z in [0, p) with z^2 == a (mod p), ascending. Throws
/// std::invalid_argument when p is not prime.
[[nodiscard]] std::vector<u64> sqrt_mod_prime(u64 a, u64 p);

/// Roots of n^2 + d mod p^k, ascending.
[[nodiscard]] std::vector<u64> roots_mod_prime_power(u64 p, unsigned k, u64 d);

[[nodiscard]] RootSet roots_mod(u64 q, u64 d);
[[nodiscard]] RootSet roots_mod(const Factorization& q, u64 d);

/// Number of roots, from per-prime-power counts (no CRT).
[[nodiscard]] u64 rho(u64 q, u64 d);
[[nodiscard]] u64 rho(const Factorization& q, u64 d);

/// Root count modulo a single prime power.
[[nodiscard]] u64 rho_prime_power(u64 p, unsigned k, u64 d);

/// Roots mod p^(k+1) lying over `roots` mod p^k (which must be complete).
[[nodiscard]] std::vector<u64> lift_roots(const std::vector<u64>& roots, u64 p, u64 pk, u64 d);

/// Result of stripping small primes from the values m^2 + d, 1 <= m <= count.
struct QuadraticValueSieve {
  u64 shift = 1;
  u64 prime_bound = 0;
  /// cofactor[m]: m^2 + d with every prime <= prime_bound divided out.
  std::vector<u64> cofactor;
  /// largest_sieved[m]: largest prime <= prime_bound dividing m^2 + d, or 1.
  std::vector<u64> largest_sieved;
};

/// Polynomial sieve driven by the roots of n^2 + d mod p. Requires
/// count^2 + d < 2^64. When prime_bound >= isqrt(count^2 + d) every
/// cofactor is 1 or prime.
[[nodiscard]] QuadraticValueSieve sieve_quadratic_values(u64 count, u64 d, u64 prime_bound);

}  // namespace qprimes
