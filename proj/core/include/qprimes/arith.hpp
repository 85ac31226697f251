#pragma once

// Sieve-backed arithmetic functions and 64-bit primality.
//
// FactorSieve is the bulk path: a smallest-prime-factor table built once and
// queried in O(omega(n)). The free functions factor directly and work on the
// full 64-bit range, so callers above the sieve limit lose nothing but speed.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qprimes {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ using u128 = unsigned __int128;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly increasing.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> parts;

  [[nodiscard]] unsigned omega() const { return static_cast<unsigned>(parts.size()); }
  /// Largest prime factor; 1 for value == 1.
  [[nodiscard]] u64 largest_prime() const { return parts.empty() ? 1 : parts.back().prime; }
  [[nodiscard]] bool squarefree() const;
  [[nodiscard]] int mobius() const;
  [[nodiscard]] double von_mangoldt() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// ---------------------------------------------------------------------------
// Word-size modular arithmetic
// ---------------------------------------------------------------------------

[[nodiscard]] constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
  if (m <= 0xFFFFFFFFULL) return (a * b) % m;
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

[[nodiscard]] constexpr u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

[[nodiscard]] u64 gcd_u64(u64 a, u64 b);

/// floor(sqrt(n)), exact.
[[nodiscard]] u64 isqrt(u64 n);
[[nodiscard]] u64 isqrt(u128 n);

/// floor(n^(1/k)) for k >= 1, exact.
[[nodiscard]] u64 iroot(u64 n, unsigned k);

/// base^exp, or nullopt if the result exceeds `limit`.
[[nodiscard]] std::optional<u128> checked_pow(u64 base, unsigned exp, u128 limit);

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

/// Deterministic Miller-Rabin over the whole 64-bit range.
[[nodiscard]] bool is_prime_u64(u64 n);

/// (p, v) with n == p^v and v >= 1, or nullopt (including n == 1).
[[nodiscard]] std::optional<PrimePower> is_prime_power(u64 n);

/// Trial division by small primes, then Pollard rho (Brent) on the rest.
[[nodiscard]] Factorization factor_u64(u64 n);

/// All divisors of the factored value, ascending.
[[nodiscard]] std::vector<u64> divisors(const Factorization& f);

/// Primes up to and including `limit` (odd-only Eratosthenes).
[[nodiscard]] std::vector<u32> primes_up_to(u64 limit);

// ---------------------------------------------------------------------------
// Sieve
// ---------------------------------------------------------------------------

class FactorSieve {
 public:
  /// Builds the smallest-prime-factor table for [0, limit]. Throws
  /// std::invalid_argument for limit < 2 or limit >= 2^32, and lets
  /// std::bad_alloc escape when the table does not fit.
  explicit FactorSieve(u64 limit);

  [[nodiscard]] u64 limit() const { return limit_; }
  [[nodiscard]] bool covers(u64 n) const { return n <= limit_; }

  /// Smallest prime factor of n, 2 <= n <= limit.
  [[nodiscard]] u32 smallest_factor(u64 n) const { return spf_[n]; }
  [[nodiscard]] bool is_prime(u64 n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }
  [[nodiscard]] std::span<const u32> primes() const { return primes_; }
  [[nodiscard]] std::span<const u32> table() const { return spf_; }

  /// Sieve walk for n <= limit, direct factorization above.
  [[nodiscard]] Factorization factor(u64 n) const;
  [[nodiscard]] int mobius(u64 n) const;
  [[nodiscard]] unsigned omega(u64 n) const;
  [[nodiscard]] double von_mangoldt(u64 n) const;

 private:
  u64 limit_;
  std::vector<u32> spf_;
  std::vector<u32> primes_;
};

// ---------------------------------------------------------------------------
// Arithmetic functions (direct factorization)
// ---------------------------------------------------------------------------

[[nodiscard]] int mobius(u64 n);
[[nodiscard]] unsigned omega(u64 n);
[[nodiscard]] double von_mangoldt(u64 n);

/// -sum_{d | n} mu(d) log d, by divisor enumeration.
[[nodiscard]] double von_mangoldt_via_mobius(u64 n);
[[nodiscard]] double von_mangoldt_via_mobius(const FactorSieve& sieve, u64 n);

}  // namespace qprimes
