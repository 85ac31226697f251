#include "qprimes/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qprimes {

namespace {

constexpr std::array<u32, 18> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                              29, 31, 37, 41, 43, 47, 53, 59, 61};

bool miller_rabin_round(u64 n, u64 d, unsigned s, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho; n odd composite, not a prime power of a
// small prime.
u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  if (auto pp = is_prime_power(n)) {
    for (unsigned i = 0; i < pp->exponent; ++i) out.push_back(pp->prime);
    return;
  }
  const u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

Factorization collect(u64 value, std::vector<u64>& primes) {
  std::sort(primes.begin(), primes.end());
  Factorization f;
  f.value = value;
  for (u64 p : primes) {
    if (!f.parts.empty() && f.parts.back().prime == p) {
      ++f.parts.back().exponent;
    } else {
      f.parts.push_back({p, 1});
    }
  }
  return f;
}

}  // namespace

bool Factorization::squarefree() const {
  return std::all_of(parts.begin(), parts.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

int Factorization::mobius() const {
  if (!squarefree()) return 0;
  return parts.size() % 2 == 0 ? 1 : -1;
}

double Factorization::von_mangoldt() const {
  return parts.size() == 1 ? std::log(static_cast<double>(parts.front().prime)) : 0.0;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 isqrt(u128 n) {
  if (n <= std::numeric_limits<u64>::max()) return isqrt(static_cast<u64>(n));
  long double approx = std::sqrt(static_cast<long double>(n));
  u64 r = approx >= 18446744073709551615.0L ? std::numeric_limits<u64>::max() : static_cast<u64>(approx);
  while (static_cast<u128>(r) * r > n) --r;
  while (r < std::numeric_limits<u64>::max() && static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<u128> checked_pow(u64 base, unsigned exp, u128 limit) {
  u128 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
    if (result > limit) return std::nullopt;
  }
  return result;
}

u64 iroot(u64 n, unsigned k) {
  if (k == 0) throw std::invalid_argument("iroot: k must be positive");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  if (k >= 64) return 1;
  u64 r = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
  while (r > 1 && !checked_pow(r, k, n)) --r;
  while (checked_pow(r + 1, k, n)) ++r;
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u32 p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 67ULL * 67ULL) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sinclair's seven bases are deterministic below 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

std::optional<PrimePower> is_prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  for (u32 p : kSmallPrimes) {
    if (n % p != 0) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (n == 1) return PrimePower{p, k};
    return std::nullopt;
  }
  if (is_prime_u64(n)) return PrimePower{n, 1};
  // No factor below 67, so the exponent is at most 10 (67^11 > 2^64).
  for (unsigned k = 2; k <= 10; ++k) {
    const u64 r = iroot(n, k);
    if (r < 67) break;
    if (checked_pow(r, k, n) == u128{n} && is_prime_u64(r)) return PrimePower{r, k};
  }
  return std::nullopt;
}

Factorization factor_u64(u64 n) {
  if (n == 0) throw std::invalid_argument("factor_u64: zero has no factorization");
  const u64 value = n;
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  return collect(value, primes);
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.parts) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u32> primes_up_to(u64 limit) {
  std::vector<u32> out;
  if (limit < 2) return out;
  if (limit >= (1ULL << 32)) throw std::invalid_argument("primes_up_to: limit must be below 2^32");
  out.push_back(2);
  // index i represents 2i + 1
  const u64 half = (limit - 1) / 2;
  std::vector<bool> composite(half + 1, false);
  for (u64 i = 1; i <= half; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    out.push_back(static_cast<u32>(p));
    for (u64 j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
  }
  return out;
}

FactorSieve::FactorSieve(u64 limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("FactorSieve: limit must be at least 2");
  if (limit >= (1ULL << 32)) throw std::invalid_argument("FactorSieve: limit must be below 2^32");
  spf_.assign(limit + 1, 0);
  spf_[1] = 1;
  // Linear sieve: each composite is struck exactly once by its smallest prime.
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<u32>(i);
      primes_.push_back(static_cast<u32>(i));
    }
    for (u32 p : primes_) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

Factorization FactorSieve::factor(u64 n) const {
  if (n == 0) throw std::invalid_argument("FactorSieve::factor: zero has no factorization");
  if (n > limit_) return factor_u64(n);
  Factorization f;
  f.value = n;
  while (n > 1) {
    const u32 p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.parts.push_back({p, e});
  }
  return f;
}

int FactorSieve::mobius(u64 n) const {
  if (n > limit_) return qprimes::mobius(n);
  int sign = 1;
  while (n > 1) {
    const u32 p = spf_[n];
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

unsigned FactorSieve::omega(u64 n) const {
  if (n > limit_) return qprimes::omega(n);
  unsigned count = 0;
  while (n > 1) {
    const u32 p = spf_[n];
    while (n % p == 0) n /= p;
    ++count;
  }
  return count;
}

double FactorSieve::von_mangoldt(u64 n) const {
  if (n > limit_) return qprimes::von_mangoldt(n);
  if (n < 2) return 0.0;
  const u32 p = spf_[n];
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

int mobius(u64 n) { return factor_u64(n).mobius(); }

unsigned omega(u64 n) { return factor_u64(n).omega(); }

double von_mangoldt(u64 n) {
  const auto pp = is_prime_power(n);
  return pp ? std::log(static_cast<double>(pp->prime)) : 0.0;
}

namespace {

double mobius_log_divisor_sum(const Factorization& f, auto&& mu) {
  double sum = 0.0;
  for (u64 d : divisors(f)) {
    const int m = mu(d);
    if (m != 0) sum += m * std::log(static_cast<double>(d));
  }
  return -sum;
}

}  // namespace

double von_mangoldt_via_mobius(u64 n) {
  return mobius_log_divisor_sum(factor_u64(n), [](u64 d) { return mobius(d); });
}

double von_mangoldt_via_mobius(const FactorSieve& sieve, u64 n) {
  return mobius_log_divisor_sum(sieve.factor(n), [&](u64 d) { return sieve.mobius(d); });
}

}  // namespace qprimes
