#include "qprimes/composite_stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qprimes/quad_congruence.hpp"

namespace qprimes {

namespace {

void require_covered(const FactorSieve& sieve, u64 x) {
  if (!sieve.covers(x)) throw std::invalid_argument("sieve does not cover x");
}

void require_iterated_log(u64 x, const char* what) {
  if (x < 16) throw std::invalid_argument(std::string(what) + ": x must be at least 16");
}

}  // namespace

u64 OmegaHistogram::total() const { return std::accumulate(counts.begin(), counts.end(), u64{0}); }

double OmegaHistogram::high_omega_fraction() const {
  u64 tail = 0;
  for (std::size_t k = threshold; k < counts.size(); ++k) tail += counts[k];
  return limit == 0 ? 0.0 : static_cast<double>(tail) / static_cast<double>(limit);
}

OmegaHistogram omega_histogram(const FactorSieve& sieve, u64 x) {
  require_covered(sieve, x);
  OmegaHistogram h;
  h.limit = x;
  if (x >= 3) {
    h.loglog = std::log(std::log(static_cast<double>(x)));
    h.threshold = h.loglog > 0 ? static_cast<unsigned>(std::ceil(h.loglog)) : 0;
  }
  for (u64 n = 1; n <= x; ++n) {
    const unsigned k = sieve.omega(n);
    if (k >= h.counts.size()) h.counts.resize(k + 1, 0);
    ++h.counts[k];
  }
  return h;
}

u64 pi_k(const FactorSieve& sieve, u64 x, unsigned k) {
  require_covered(sieve, x);
  u64 count = 0;
  for (u64 n = 1; n <= x; ++n) count += sieve.omega(n) == k ? 1 : 0;
  return count;
}

double landau_ratio(const FactorSieve& sieve, u64 x, unsigned k) {
  require_iterated_log(x, "landau_ratio");
  if (k == 0) throw std::invalid_argument("landau_ratio: k must be at least 1");
  const double dx = static_cast<double>(x);
  const double lx = std::log(dx);
  const double llx = std::log(lx);
  // (k-1)! / (log log x)^(k-1), accumulated factor by factor.
  double scale = 1.0;
  for (unsigned j = 1; j < k; ++j) scale *= static_cast<double>(j) / llx;
  return static_cast<double>(pi_k(sieve, x, k)) * scale * lx / dx;
}

HighOmegaMass high_omega_mass(const FactorSieve& sieve, u64 x, u64 d) {
  require_iterated_log(x, "high_omega_mass");
  require_covered(sieve, x);
  HighOmegaMass out;
  out.x = x;
  out.shift = d;
  const double dx = static_cast<double>(x);
  const double lx = std::log(dx);
  out.loglog = std::log(lx);
  const double lllx = std::log(out.loglog);
  out.bound = std::pow(dx, 1.0 - out.loglog * lllx / (2.0 * lx));
  const auto ceil_threshold = static_cast<unsigned>(std::ceil(out.loglog));

  for (u64 q = 2; q <= x; ++q) {
    const unsigned w = sieve.omega(q);
    if (static_cast<double>(w) <= out.loglog) continue;
    const u64 r = rho(sieve.factor(q), d);
    ++out.count;
    out.rho_sum += r;
    if (w > ceil_threshold) {
      ++out.count_ceil;
      out.rho_sum_ceil += r;
    }
  }
  return out;
}

}  // namespace qprimes
