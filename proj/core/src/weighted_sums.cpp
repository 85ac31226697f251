#include "qprimes/weighted_sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qprimes/quad_congruence.hpp"

namespace qprimes {

namespace {

u64 floor_bound(double x) {
  if (!(x >= 0)) return 0;
  if (x >= 18446744073709551615.0) throw std::invalid_argument("cutoff exceeds 64 bits");
  return static_cast<u64>(std::floor(x));
}

std::vector<double> weight_table(u64 n_max) {
  std::vector<double> g(n_max + 1, 0.0);
  for (u64 n = 2; n <= n_max; ++n) g[n] = sum_weight(n);
  return g;
}

// Smallest n >= 2 with n == r (mod q).
u64 first_member(u64 r, u64 q) {
  if (r >= 2) return r;
  return r + q * ((2 - r + q - 1) / q);
}

// T(x; q, d) via root stepping, using the precomputed weights g[n], n <= n_max.
double progression_total(const RootSet& rs, const std::vector<double>& g, u64 n_max) {
  double total = 0.0;
  for (u64 r : rs.roots) {
    for (u64 n = first_member(r, rs.modulus); n <= n_max; n += rs.modulus) total += g[n];
  }
  return total;
}

struct SplitPartial {
  double small = 0;
  double large_low = 0;
  double large_high = 0;
};

void require_sieve(const FactorSieve& sieve, u64 q_max) {
  if (!sieve.covers(q_max)) throw std::invalid_argument("sieve does not cover the requested cutoff");
}

unsigned ceil_loglog(double x) {
  if (x <= std::exp(1.0)) return 0;
  return static_cast<unsigned>(std::ceil(std::log(std::log(x))));
}

}  // namespace

u64 max_index(double x, u64 d) {
  const u64 xf = floor_bound(x);
  if (xf < d) return 0;
  return isqrt(xf - d);
}

double sum_weight(u64 n, double alpha) {
  const double dn = static_cast<double>(n);
  const double l = std::log(dn);
  if (alpha == 0.5) return 1.0 / (dn * std::sqrt(l));
  return 1.0 / (dn * std::pow(l, 1.0 - alpha));
}

double lhs_sum(double x, u64 d, double alpha, Exec exec) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("lhs_sum: alpha must lie in (0, 1]");
  if (x < 5) return 0.0;
  const u64 n_max = max_index(x, d);
  if (n_max < 2) return 0.0;
  const auto parts = map_chunks<double>(2, n_max + 1, kDefaultChunk, exec, [&](u64 lo, u64 hi) {
    double s = 0.0;
    for (u64 n = lo; n < hi; ++n) {
      const double lambda = von_mangoldt(n * n + d);
      if (lambda != 0.0) s += lambda * sum_weight(n, alpha);
    }
    return s;
  });
  double total = 0.0;
  for (double p : parts) total += p;
  return total;
}

double rhs_mobius_expansion(const FactorSieve& sieve, double x, u64 d, Exec exec) {
  if (x < 5) return 0.0;
  const u64 q_max = floor_bound(x);
  require_sieve(sieve, q_max);
  const u64 n_max = max_index(x, d);
  if (n_max < 2) return 0.0;
  const auto g = weight_table(n_max);
  const auto parts = map_chunks<double>(2, q_max + 1, kDefaultChunk, exec, [&](u64 lo, u64 hi) {
    double s = 0.0;
    for (u64 q = lo; q < hi; ++q) {
      const auto f = sieve.factor(q);
      const int mu = f.mobius();
      if (mu == 0) continue;
      const double t = progression_total(roots_mod(f, d), g, n_max);
      if (t != 0.0) s -= mu * std::log(static_cast<double>(q)) * t;
    }
    return s;
  });
  double total = 0.0;
  for (double p : parts) total += p;
  return total;
}

double rhs_mobius_expansion(double x, u64 d, Exec exec) {
  const FactorSieve sieve(std::max<u64>(2, floor_bound(x)));
  return rhs_mobius_expansion(sieve, x, d, exec);
}

bool SumDecomposition::identity_holds(double rel_tol) const {
  return std::abs(lhs - rhs_total) <= rel_tol * std::max(1.0, std::abs(lhs));
}

SumDecomposition dyadic_split(const FactorSieve& sieve, double x, u64 d, double epsilon, Exec exec) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw std::invalid_argument("dyadic_split: epsilon must lie in (0, 1/2)");
  SumDecomposition out;
  out.x = x;
  out.shift = d;
  out.epsilon = epsilon;
  out.small_cutoff = x > 0 ? std::pow(x, 0.5 - epsilon) : 0.0;
  out.omega_threshold = ceil_loglog(x);
  out.lhs = lhs_sum(x, d, kDefaultAlpha, exec);
  if (x < 5) return out;

  const u64 q_max = floor_bound(x);
  require_sieve(sieve, q_max);
  const u64 n_max = max_index(x, d);
  if (n_max < 2) return out;
  const auto g = weight_table(n_max);
  const auto parts = map_chunks<SplitPartial>(2, q_max + 1, kDefaultChunk, exec, [&](u64 lo, u64 hi) {
    SplitPartial s;
    for (u64 q = lo; q < hi; ++q) {
      const auto f = sieve.factor(q);
      const int mu = f.mobius();
      if (mu == 0) continue;
      const double t = progression_total(roots_mod(f, d), g, n_max);
      if (t == 0.0) continue;
      const double term = -mu * std::log(static_cast<double>(q)) * t;
      if (static_cast<double>(q) <= out.small_cutoff) {
        s.small += term;
      } else if (f.omega() <= out.omega_threshold) {
        s.large_low += term;
      } else {
        s.large_high += term;
      }
    }
    return s;
  });
  for (const auto& p : parts) {
    out.small_part += p.small;
    out.large_low_omega += p.large_low;
    out.large_high_omega += p.large_high;
  }
  out.large_part = out.large_low_omega + out.large_high_omega;
  out.rhs_total = out.small_part + out.large_part;
  return out;
}

SumDecomposition dyadic_split(double x, u64 d, double epsilon, Exec exec) {
  const FactorSieve sieve(std::max<u64>(2, floor_bound(x)));
  return dyadic_split(sieve, x, d, epsilon, exec);
}

std::vector<u64> progression_members(double x, u64 q, u64 d) {
  const u64 n_max = max_index(x, d);
  std::vector<u64> out;
  for (u64 r : roots_mod(q, d).roots) {
    for (u64 n = first_member(r, q); n <= n_max; n += q) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProgressionSumResult progression_sum(double x, u64 q, u64 d) {
  ProgressionSumResult out;
  out.modulus = q;
  out.shift = d;
  const RootSet rs = roots_mod(q, d);
  if (rs.roots.empty()) return out;

  const u64 n_max = max_index(x, d);
  const double sqrt_x = std::sqrt(x);
  const double qd = static_cast<double>(q);
  u64 n0 = std::numeric_limits<u64>::max();
  for (u64 r : rs.roots) {
    const double ratio = (sqrt_x - static_cast<double>(r)) / qd;
    const double frac = ratio - std::floor(ratio);
    out.frac_parts.push_back(frac);

    const u64 first = first_member(r, q);
    if (first > n_max) continue;
    n0 = std::min(n0, first);
    for (u64 n = first; n <= n_max; n += q) out.direct += sum_weight(n);
    // Integral of g along the progression, from its first member up to the
    // last progression point below sqrt(x).
    const double upper = sqrt_x - qd * frac;
    out.estimate += (2.0 / qd) * (std::sqrt(std::log(upper)) - std::sqrt(std::log(static_cast<double>(first))));
  }
  if (n0 != std::numeric_limits<u64>::max()) {
    out.error_bound = static_cast<double>(rs.count()) * sum_weight(n0);
  }
  return out;
}

double mobius_log_progression(const FactorSieve& sieve, double x, u64 q, u64 a) {
  if (q == 0) throw std::invalid_argument("mobius_log_progression: modulus must be positive");
  if (gcd_u64(a % q, q) != 1) throw std::invalid_argument("mobius_log_progression: gcd(a, q) > 1");
  const u64 n_max = floor_bound(x);
  require_sieve(sieve, n_max);
  double s = 0.0;
  const u64 start = a % q == 0 ? q : a % q;
  for (u64 n = start; n <= n_max; n += q) {
    const int mu = sieve.mobius(n);
    if (mu != 0 && n > 1) {
      const double dn = static_cast<double>(n);
      s += mu * std::log(dn) / dn;
    }
  }
  return s;
}

double dirichlet_partial(double s, u64 N, u64 d, Exec exec) {
  if (N == 0) return 0.0;
  if (static_cast<u128>(N) * N + d > std::numeric_limits<u64>::max()) {
    throw std::overflow_error("dirichlet_partial: N^2 + d exceeds 64 bits");
  }
  const auto parts = map_chunks<double>(1, N + 1, kDefaultChunk, exec, [&](u64 lo, u64 hi) {
    double acc = 0.0;
    for (u64 n = lo; n < hi; ++n) {
      const double lambda = von_mangoldt(n * n + d);
      if (lambda != 0.0) acc += lambda * std::pow(static_cast<double>(n), -s);
    }
    return acc;
  });
  double total = 0.0;
  for (double p : parts) total += p;
  return total;
}

}  // namespace qprimes
