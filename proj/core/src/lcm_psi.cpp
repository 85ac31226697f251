#include "qprimes/lcm_psi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qprimes/quad_congruence.hpp"

namespace qprimes {

namespace {

u64 poly_mod(u64 r, u64 d, u64 m) {
  const u128 v = static_cast<u128>(r % m) * (r % m) + d % m;
  return static_cast<u64>(v % m);
}

// Smallest positive integer in the class of r mod m.
u64 representative(u64 r, u64 m) { return r == 0 ? m : r; }

}  // namespace

unsigned max_valuation(u64 p, u64 n, u64 d) {
  std::vector<u64> roots;
  for (u64 r : roots_mod_prime_power(p, 1, d)) {
    if (representative(r, p) <= n) roots.push_back(r);
  }
  unsigned k = 0;
  u64 pk = p;
  while (!roots.empty()) {
    ++k;
    if (pk > std::numeric_limits<u64>::max() / p) break;
    const u64 next = pk * p;
    std::vector<u64> lifted;
    for (u64 r : roots) {
      for (u64 t = 0; t < p; ++t) {
        const u64 c = r + t * pk;
        if (c > n && c != 0) break;
        if (representative(c, next) <= n && poly_mod(c, d, next) == 0) lifted.push_back(c);
      }
    }
    roots = std::move(lifted);
    pk = next;
  }
  return k;
}

double psi_f(u64 n, u64 d) {
  if (n == 0) return 0.0;
  const u64 bound = isqrt(static_cast<u128>(n) * n + d);
  double total = 0.0;
  for (u32 p : primes_up_to(bound)) {
    const unsigned k = max_valuation(p, n, d);
    if (k > 0) total += k * std::log(static_cast<double>(p));
  }
  // Whatever survives the sieve is a prime above `bound`, so it divides at
  // most to the first power.
  const auto sieved = sieve_quadratic_values(n, d, bound);
  std::vector<u64> large;
  for (u64 m = 1; m <= n; ++m) {
    if (sieved.cofactor[m] > 1) large.push_back(sieved.cofactor[m]);
  }
  std::sort(large.begin(), large.end());
  large.erase(std::unique(large.begin(), large.end()), large.end());
  for (u64 P : large) total += std::log(static_cast<double>(P));
  return total;
}

double euler_gamma() {
  constexpr int n = 100;
  double harmonic = 0.0;
  for (int k = n; k >= 1; --k) harmonic += 1.0 / k;
  const double inv2 = 1.0 / (static_cast<double>(n) * n);
  // Bernoulli tail: 1/(12n^2) - 1/(120n^4) + 1/(252n^6) - 1/(240n^8)
  const double tail = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 / 240)));
  return harmonic - std::log(static_cast<double>(n)) - 0.5 / n + tail;
}

ConstantEstimate lcm_constant(u64 P) {
  ConstantEstimate est;
  est.name = "lcm_B";
  est.prime_bound = P;
  est.reference = kLcmConstantReference;
  const double base = euler_gamma() - 1.0 - 0.5 * std::log(2.0);
  est.raw = est.averaged = base;

  double running = base;
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::size_t count = 0;
  for (u32 p : primes_up_to(P)) {
    if (p < 3) continue;
    const double chi = p % 4 == 1 ? 1.0 : -1.0;
    running -= chi * std::log(static_cast<double>(p)) / (static_cast<double>(p) - 1.0);
    if (2 * static_cast<u64>(p) > P) {
      sum += running;
      lo = std::min(lo, running);
      hi = std::max(hi, running);
      ++count;
    }
  }
  est.raw = running;
  if (count > 0) {
    est.averaged = sum / static_cast<double>(count);
    est.oscillation = hi - lo;
  }
  return est;
}

PsiTrace psi_residual_trend(u64 n_max, double B) {
  if (n_max < 100) throw std::invalid_argument("psi_residual_trend: n_max must be at least 100");
  PsiTrace out;
  out.B_used = B;
  for (int i = 0;; ++i) {
    const auto n = static_cast<u64>(std::llround(100.0 * std::exp2(i / 4.0)));
    if (n >= n_max) break;
    if (out.n.empty() || out.n.back() != n) out.n.push_back(n);
  }
  out.n.push_back(n_max);

  for (u64 n : out.n) {
    const double psi = psi_f(n);
    const double dn = static_cast<double>(n);
    out.psi.push_back(psi);
    out.residual_over_n.push_back((psi - dn * std::log(dn) - B * dn) / dn);
  }

  // Ordinary least squares on the upper half.
  const std::size_t start = out.n.size() / 2;
  const double m = static_cast<double>(out.n.size() - start);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = start; i < out.n.size(); ++i) {
    const double xv = static_cast<double>(out.n[i]);
    const double yv = out.psi[i] - xv * std::log(xv);
    sx += xv;
    sy += yv;
    sxx += xv * xv;
    sxy += xv * yv;
  }
  const double denom = m * sxx - sx * sx;
  if (denom != 0.0) {
    out.fitted_slope = (m * sxy - sx * sy) / denom;
    out.fitted_intercept = (sy - out.fitted_slope * sx) / m;
  }
  return out;
}

}  // namespace qprimes
