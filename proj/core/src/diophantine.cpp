#include "qprimes/diophantine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qprimes {

namespace {

constexpr u128 kU128Max = ~u128{0};

}  // namespace

bool satisfies(const NagellSolution& s) {
  if (s.n < 3 || s.y < 2 || s.x == 0) return false;
  const u128 lhs = static_cast<u128>(s.x) * s.x + s.shift;
  const auto rhs = checked_pow(s.y, s.n, kU128Max);
  return rhs && *rhs == lhs;
}

std::vector<NagellSolution> lebesgue_nagell_solve(u64 d, u64 x_max, unsigned n_max) {
  if (x_max > (1ULL << 63)) throw std::overflow_error("lebesgue_nagell_solve: x_max^2 + d exceeds 128 bits");
  const u128 limit = static_cast<u128>(x_max) * x_max + d;
  std::vector<NagellSolution> out;
  for (unsigned n = 3; n <= n_max; ++n) {
    for (u64 y = 2;; ++y) {
      const auto power = checked_pow(y, n, limit);
      if (!power) break;
      if (*power <= d) continue;
      const u128 square = *power - d;
      const u64 x = isqrt(square);
      if (static_cast<u128>(x) * x == square && x >= 1 && x <= x_max) out.push_back({x, y, n, d});
    }
  }
  std::sort(out.begin(), out.end(), [](const NagellSolution& a, const NagellSolution& b) {
    return a.n != b.n ? a.n < b.n : a.x < b.x;
  });
  return out;
}

ConsecutivePowers consecutive_powers(u64 X) {
  ConsecutivePowers out;
  if (X == 0) return out;
  out.powers.push_back(1);
  for (unsigned k = 2; k < 64; ++k) {
    const u64 top = iroot(X, k);
    if (top < 2) break;
    for (u64 m = 2; m <= top; ++m) out.powers.push_back(static_cast<u64>(*checked_pow(m, k, X)));
  }
  std::sort(out.powers.begin(), out.powers.end());
  out.powers.erase(std::unique(out.powers.begin(), out.powers.end()), out.powers.end());
  for (std::size_t i = 1; i < out.powers.size(); ++i) {
    if (out.powers[i] - out.powers[i - 1] == 1) out.adjacent_pairs.emplace_back(out.powers[i - 1], out.powers[i]);
  }
  return out;
}

}  // namespace qprimes
