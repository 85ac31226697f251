#include "qprimes/quad_congruence.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qprimes {

namespace {

__extension__ using i128 = __int128;

// Below this bound the square root is found by scanning residues.
constexpr u64 kScanBound = 64;

u64 neg_mod(u64 d, u64 m) {
  const u64 r = d % m;
  return r == 0 ? 0 : m - r;
}

// (r^2 + d) mod m without overflow.
u64 poly_mod(u64 r, u64 d, u64 m) {
  const u128 v = static_cast<u128>(r % m) * (r % m) + d % m;
  return static_cast<u64>(v % m);
}

u64 inverse_mod(u64 a, u64 m) {
  i128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: arguments not coprime");
  i128 v = old_s % static_cast<i128>(m);
  if (v < 0) v += m;
  return static_cast<u64>(v);
}

u64 tonelli_shanks(u64 a, u64 p) {
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s;
  u64 c = pow_mod(z, q, p);
  u64 t = pow_mod(a, q, p);
  u64 r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

std::vector<u64> crt_combine(const std::vector<u64>& a, u64 ma, const std::vector<u64>& b, u64 mb) {
  std::vector<u64> out;
  out.reserve(a.size() * b.size());
  const u64 inv = inverse_mod(ma % mb, mb);
  for (u64 ra : a) {
    for (u64 rb : b) {
      const u64 diff = (rb % mb + mb - ra % mb) % mb;
      const u64 t = mul_mod(diff, inv, mb);
      out.push_back(static_cast<u64>(ra + static_cast<u128>(ma) * t));
    }
  }
  return out;
}

}  // namespace

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int QuadraticCharacter::operator()(u64 p) const {
  if (p == 2) return 0;
  return legendre(neg_mod(shift_, p), p);
}

std::vector<u64> sqrt_mod_prime(u64 a, u64 p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("sqrt_mod_prime: modulus is not prime");
  a %= p;
  if (a == 0) return {0};
  if (p == 2) return {a};
  if (p < kScanBound) {
    std::vector<u64> out;
    for (u64 z = 1; z < p; ++z) {
      if (z * z % p == a) out.push_back(z);
    }
    return out;
  }
  if (legendre(a, p) != 1) return {};
  const u64 z = tonelli_shanks(a, p);
  return {std::min(z, p - z), std::max(z, p - z)};
}

std::vector<u64> lift_roots(const std::vector<u64>& roots, u64 p, u64 pk, u64 d) {
  const u64 next = pk * p;
  std::vector<u64> out;
  for (u64 r : roots) {
    if (p != 2 && r % p != 0) {
      // Nonsingular root: the derivative 2r is a unit, so exactly one lift.
      const u64 residue = poly_mod(r, d, next);
      const u64 quotient = residue / pk;
      const u64 inv = inverse_mod(mul_mod(2, r % p, p), p);
      const u64 t = neg_mod(mul_mod(quotient % p, inv, p), p);
      out.push_back(r + t * pk);
    } else {
      for (u64 t = 0; t < p; ++t) {
        const u64 cand = r + t * pk;
        if (poly_mod(cand, d, next) == 0) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> roots_mod_prime_power(u64 p, unsigned k, u64 d) {
  if (k == 0) return {0};
  std::vector<u64> roots = p == 2 ? std::vector<u64>{d % 2} : sqrt_mod_prime(neg_mod(d, p), p);
  u64 pk = p;
  for (unsigned j = 1; j < k && !roots.empty(); ++j) {
    roots = lift_roots(roots, p, pk, d);
    pk *= p;
  }
  return roots;
}

u64 rho_prime_power(u64 p, unsigned k, u64 d) {
  if (k == 0) return 1;
  if (p != 2 && d % p != 0) return static_cast<u64>(1 + legendre(neg_mod(d, p), p));
  return roots_mod_prime_power(p, k, d).size();
}

RootSet roots_mod(const Factorization& q, u64 d) {
  RootSet rs;
  rs.modulus = q.value;
  rs.shift = d;
  std::vector<u64> acc{0};
  u64 acc_mod = 1;
  for (const auto& [p, e] : q.parts) {
    const auto local = roots_mod_prime_power(p, e, d);
    if (local.empty()) return rs;
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    acc = crt_combine(acc, acc_mod, local, pe);
    acc_mod *= pe;
  }
  std::sort(acc.begin(), acc.end());
  rs.roots = std::move(acc);
  return rs;
}

RootSet roots_mod(u64 q, u64 d) {
  if (q == 0) throw std::invalid_argument("roots_mod: modulus must be positive");
  return roots_mod(factor_u64(q), d);
}

u64 rho(const Factorization& q, u64 d) {
  u64 count = 1;
  for (const auto& [p, e] : q.parts) {
    count *= rho_prime_power(p, e, d);
    if (count == 0) break;
  }
  return count;
}

u64 rho(u64 q, u64 d) {
  if (q == 0) throw std::invalid_argument("rho: modulus must be positive");
  return rho(factor_u64(q), d);
}

QuadraticValueSieve sieve_quadratic_values(u64 count, u64 d, u64 prime_bound) {
  if (count > 0 && static_cast<u128>(count) * count + d > std::numeric_limits<u64>::max()) {
    throw std::overflow_error("sieve_quadratic_values: count^2 + d exceeds 64 bits");
  }
  QuadraticValueSieve out;
  out.shift = d;
  out.prime_bound = prime_bound;
  out.cofactor.resize(count + 1);
  out.largest_sieved.assign(count + 1, 1);
  for (u64 m = 0; m <= count; ++m) out.cofactor[m] = m * m + d;

  for (u32 p : primes_up_to(prime_bound)) {
    const auto roots = p == 2 ? std::vector<u64>{d % 2} : sqrt_mod_prime(neg_mod(d, p), p);
    for (u64 r : roots) {
      for (u64 m = r == 0 ? p : r; m <= count; m += p) {
        u64& v = out.cofactor[m];
        while (v % p == 0) v /= p;
        out.largest_sieved[m] = p;
      }
    }
  }
  return out;
}

}  // namespace qprimes
