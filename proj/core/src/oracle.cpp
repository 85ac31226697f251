#include "qprimes/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace qprimes::oracle {

Factorization trial_factor(u64 n) {
  if (n == 0) throw std::invalid_argument("trial_factor: zero");
  Factorization f;
  f.value = n;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.parts.push_back({p, e});
  }
  if (n > 1) f.parts.push_back({n, 1});
  return f;
}

bool is_prime_trial(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

int mobius_trial(u64 n) { return trial_factor(n).mobius(); }

double von_mangoldt_trial(u64 n) { return trial_factor(n).von_mangoldt(); }

std::vector<u64> root_scan(u64 q, u64 d) {
  std::vector<u64> out;
  const u64 target = d % q;
  for (u64 r = 0; r < q; ++r) {
    const u128 sq = static_cast<u128>(r) * r + target;
    if (sq % q == 0) out.push_back(r);
  }
  return out;
}

std::vector<u64> progression_filter(double x, u64 q, u64 d) {
  std::vector<u64> out;
  for (u64 n = 2; static_cast<double>(n * n + d) <= x; ++n) {
    if ((n * n + d) % q == 0) out.push_back(n);
  }
  return out;
}

std::vector<NagellSolution> nagell_naive(u64 d, u64 x_max, unsigned n_max) {
  std::vector<NagellSolution> out;
  for (u64 x = 1; x <= x_max; ++x) {
    const u128 target = static_cast<u128>(x) * x + d;
    for (unsigned n = 3; n <= n_max; ++n) {
      for (u64 y = 2;; ++y) {
        u128 power = 1;
        bool over = false;
        for (unsigned i = 0; i < n && !over; ++i) {
          power *= y;
          over = power > target;
        }
        if (over) break;
        if (power == target) out.push_back({x, y, n, d});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NagellSolution& a, const NagellSolution& b) {
    return a.n != b.n ? a.n < b.n : a.x < b.x;
  });
  return out;
}

double psi_bigint(u64 n, u64 d) {
  using boost::multiprecision::cpp_int;
  cpp_int l = 1;
  for (u64 m = 1; m <= n; ++m) {
    const cpp_int v = cpp_int(m) * m + d;
    l = boost::multiprecision::lcm(l, v);
  }
  // log(l) = log(l >> s) + s log 2 with l >> s holding ~60 bits.
  const auto bits = static_cast<long>(boost::multiprecision::msb(l)) + 1;
  const long shift = std::max(0L, bits - 60);
  const cpp_int top = l >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

unsigned max_valuation_trial(u64 p, u64 n, u64 d) {
  unsigned best = 0;
  for (u64 m = 1; m <= n; ++m) {
    u64 v = m * m + d;
    unsigned k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    best = std::max(best, k);
  }
  return best;
}

}  // namespace qprimes::oracle
