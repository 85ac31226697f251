#include "qprimes/prime_counts.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qprimes/quad_congruence.hpp"
#include "qprimes/weighted_sums.hpp"

namespace qprimes {

namespace {

void require_fits(u64 N, u64 d, const char* what) {
  if (static_cast<u128>(N) * N + d > std::numeric_limits<u64>::max()) {
    throw std::overflow_error(std::string(what) + ": n^2 + d exceeds 64 bits");
  }
}

// Fills raw/averaged/oscillation from the running values at each prime.
void summarize_block(ConstantEstimate& est, const std::vector<u32>& primes, const std::vector<double>& running) {
  if (running.empty()) return;
  est.raw = running.back();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (2 * static_cast<u64>(primes[i]) <= est.prime_bound) continue;
    sum += running[i];
    lo = std::min(lo, running[i]);
    hi = std::max(hi, running[i]);
    ++count;
  }
  est.averaged = sum / static_cast<double>(count);
  est.oscillation = hi - lo;
}

}  // namespace

QuadraticPrimeList quadratic_primes(u64 N, u64 d) {
  require_fits(N, d, "quadratic_primes");
  QuadraticPrimeList out;
  out.shift = d;
  out.limit = N;
  for (u64 n = 1; n <= N; ++n) {
    const u64 v = n * n + d;
    if (!is_prime_u64(v)) continue;
    if (!out.primes.empty()) out.gaps.push_back(v - out.primes.back());
    out.members.push_back(n);
    out.primes.push_back(v);
  }
  return out;
}

u64 pi_f(double x, u64 d) {
  const u64 n_max = max_index(x, d);
  u64 count = 0;
  for (u64 n = 1; n <= n_max; ++n) count += is_prime_u64(n * n + d) ? 1 : 0;
  return count;
}

std::vector<std::pair<u64, u64>> twin_quadratic_pairs(u64 N) {
  require_fits(N, 3, "twin_quadratic_pairs");
  std::vector<std::pair<u64, u64>> out;
  for (u64 n = 1; n <= N; ++n) {
    const u64 a = n * n + 1;
    if (is_prime_u64(a) && is_prime_u64(a + 2)) out.emplace_back(a, a + 2);
  }
  return out;
}

ConstantEstimate hardy_littlewood_constant(u64 d, u64 P) {
  ConstantEstimate est;
  est.name = "hardy_littlewood";
  est.prime_bound = P;
  est.raw = est.averaged = 1.0;
  if (d == 1) est.reference = kHardyLittlewoodReference;

  std::vector<u32> primes = primes_up_to(P);
  std::erase_if(primes, [](u32 p) { return p < 3; });
  const QuadraticCharacter chi(d);
  std::vector<double> running;
  running.reserve(primes.size());
  // Accumulate in log space; the product has ~P/log P factors.
  double log_product = 0.0;
  for (u32 p : primes) {
    log_product += std::log1p(-chi(p) / (static_cast<double>(p) - 1.0));
    running.push_back(std::exp(log_product));
  }
  summarize_block(est, primes, running);
  return est;
}

double kappa_quadrature() {
  // t = 1 - s^2 removes the square-root singularity at t = 1:
  //   integral_0^1 2 s^2 sqrt((2 - s^2)(1 + (1 - s^2)^2)) ds.
  auto integrand = [](double s) {
    const double s2 = s * s;
    const double u = 1.0 - s2;
    return 2.0 * s2 * std::sqrt((2.0 - s2) * (1.0 + u * u));
  };
  static constexpr std::array<double, 5> nodes = {0.0, 0.5384693101056831, -0.5384693101056831,
                                                   0.9061798459386640, -0.9061798459386640};
  static constexpr std::array<double, 5> weights = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                                     0.2369268850561891, 0.2369268850561891};
  constexpr int panels = 256;
  const double h = 1.0 / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double mid = (i + 0.5) * h;
    double panel = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) panel += weights[k] * integrand(mid + 0.5 * h * nodes[k]);
    total += 0.5 * h * panel;
  }
  return total;
}

double kappa_gamma() {
  const double g = std::tgamma(0.25);
  return g * g / (6.0 * std::sqrt(2.0 * std::numbers::pi));
}

FouvryIwaniecResult fouvry_iwaniec_sum(double x, Exec exec) {
  if (x >= 9.2e18) throw std::overflow_error("fouvry_iwaniec_sum: x must be below 2^63");
  FouvryIwaniecResult out;
  out.x = x;
  out.kappa_quadrature = kappa_quadrature();
  out.kappa_gamma = kappa_gamma();
  out.predicted = 4.0 * out.kappa_gamma / std::numbers::pi * std::pow(x, 0.75);

  const u64 xf = x < 1 ? 0 : static_cast<u64>(std::floor(x));
  u64 m_max = 0;
  while (static_cast<u128>(m_max + 1) * (m_max + 1) * (m_max + 1) * (m_max + 1) + 1 <= xf) ++m_max;
  const auto parts = map_chunks<double>(1, m_max + 1, 1, exec, [&](u64 lo, u64 hi) {
    double s = 0.0;
    for (u64 m = lo; m < hi; ++m) {
      const u64 m4 = m * m * m * m;
      const u64 n_max = isqrt(xf - m4);
      for (u64 n = 1; n <= n_max; ++n) s += von_mangoldt(n * n + m4);
    }
    return s;
  });
  for (double p : parts) out.sum += p;
  out.ratio = out.predicted > 0 ? out.sum / out.predicted : 0.0;
  return out;
}

std::vector<PrimePowerHit> prime_power_scan(u64 N, u64 d, Exec exec) {
  if (N == 0) return {};
  require_fits(N, d, "prime_power_scan");
  const auto parts = map_chunks<std::vector<PrimePowerHit>>(1, N + 1, kDefaultChunk, exec, [&](u64 lo, u64 hi) {
    std::vector<PrimePowerHit> hits;
    for (u64 n = lo; n < hi; ++n) {
      const auto pp = is_prime_power(n * n + d);
      if (pp && pp->exponent >= 2) hits.push_back({n, pp->prime, pp->exponent});
    }
    return hits;
  });
  std::vector<PrimePowerHit> out;
  for (const auto& chunk : parts) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

std::vector<u64> largest_prime_factors(u64 N, u64 d) {
  require_fits(N, d, "largest_prime_factors");
  const u64 bound = isqrt(N * N + d);
  auto sieved = sieve_quadratic_values(N, d, bound);
  std::vector<u64> out(N + 1, 0);
  for (u64 m = 1; m <= N; ++m) {
    out[m] = sieved.cofactor[m] > 1 ? sieved.cofactor[m] : sieved.largest_sieved[m];
  }
  return out;
}

LargestFactorRecords largest_prime_factor_records(u64 N, u64 d) {
  LargestFactorRecords out;
  out.limit = N;
  out.shift = d;
  const auto lpf = largest_prime_factors(N, d);
  double best = -std::numeric_limits<double>::infinity();
  for (u64 n = 1; n <= N; ++n) {
    if (lpf[n] > out.max_prime) {
      out.max_prime = lpf[n];
      out.max_prime_n = n;
    }
    if (n < 2) continue;
    const double e = std::log(static_cast<double>(lpf[n])) / std::log(static_cast<double>(n));
    if (e > best) {
      best = e;
      out.records.push_back({n, lpf[n], e});
    }
  }
  out.max_exponent = out.records.empty() ? 0.0 : best;
  return out;
}

}  // namespace qprimes
