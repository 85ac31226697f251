#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>

#include "qprimes/arith.hpp"
#include "qprimes/prime_counts.hpp"

using namespace qprimes;
using V = std::vector<u64>;

TEST_CASE("quadratic_primes") {
  const auto list = quadratic_primes(100, 1);
  REQUIRE(list.primes.size() >= 5);
  CHECK(V(list.primes.begin(), list.primes.begin() + 5) == V{2, 5, 17, 37, 101});
  CHECK(V(list.members.begin(), list.members.begin() + 5) == V{1, 2, 4, 6, 10});
  CHECK(V(list.gaps.begin(), list.gaps.begin() + 6) == V{3, 12, 20, 64, 96, 60});
  for (std::size_t i = 0; i < list.primes.size(); ++i) {
    REQUIRE(is_prime_u64(list.primes[i]));
    REQUIRE(list.primes[i] == list.members[i] * list.members[i] + 1);
  }
  u64 expected = 0;
  for (u64 n = 1; n <= 100; ++n) expected += is_prime_u64(n * n + 1);
  CHECK(list.primes.size() == expected);
  CHECK(quadratic_primes(1, 1).primes == V{2});
  CHECK_THROWS_AS((void)quadratic_primes(u64{1} << 32, 1), std::overflow_error);
}

TEST_CASE("pi_f") {
  CHECK(pi_f(1e4, 1) == 19);
  CHECK(pi_f(1, 1) == 0);
  CHECK(pi_f(100, 1) == 4);
  CHECK(pi_f(2, 1) == 1);
}

TEST_CASE("twin quadratic pairs") {
  using P = std::pair<u64, u64>;
  const auto pairs = twin_quadratic_pairs(100);
  REQUIRE(pairs.size() == 6);
  CHECK(pairs[0] == P{5, 7});
  CHECK(pairs[1] == P{17, 19});
  CHECK(pairs[2] == P{101, 103});
  CHECK(pairs[3] == P{197, 199});
  CHECK(pairs[4] == P{5477, 5479});
  CHECK(pairs[5] == P{8837, 8839});
  const auto at74 = twin_quadratic_pairs(74);
  CHECK(std::find(at74.begin(), at74.end(), P{5477, 5479}) != at74.end());
  const auto at73 = twin_quadratic_pairs(73);
  CHECK(std::find(at73.begin(), at73.end(), P{5477, 5479}) == at73.end());
  CHECK(twin_quadratic_pairs(1).empty());
}

TEST_CASE("Hardy-Littlewood product") {
  CHECK(hardy_littlewood_constant(1, 2).raw == 1.0);
  CHECK(hardy_littlewood_constant(1, 5).raw == doctest::Approx(1.125).epsilon(1e-15));
  const auto c = hardy_littlewood_constant(1, 1'000'000);
  CHECK(std::abs(c.averaged - kHardyLittlewoodReference) < 0.02);
  REQUIRE(c.reference.has_value());
  CHECK(*c.reference == kHardyLittlewoodReference);
  CHECK_FALSE(hardy_littlewood_constant(3, 1000).reference.has_value());
}

TEST_CASE("kappa by quadrature and by the Gamma function") {
  CHECK(std::abs(kappa_quadrature() - kappa_gamma()) < 1e-8);
  CHECK(kappa_gamma() == doctest::Approx(0.8740191847640401).epsilon(1e-14));
}

TEST_CASE("sum over n^2 + m^4") {
  const auto small = fouvry_iwaniec_sum(17);
  CHECK(small.sum == doctest::Approx(std::log(2.0) + std::log(5.0) + 2 * std::log(17.0)).epsilon(1e-14));
  CHECK(small.sum == doctest::Approx(7.969012).epsilon(1e-6));
  CHECK(fouvry_iwaniec_sum(1).sum == 0.0);
  const auto mid = fouvry_iwaniec_sum(1e6, Exec{4});
  CHECK(mid.sum == fouvry_iwaniec_sum(1e6, Exec{1}).sum);
  CHECK(mid.ratio > 0.8);
  CHECK(mid.ratio < 1.2);
}

TEST_CASE("prime_power_scan") {
  CHECK(prime_power_scan(100'000, 1).empty());
  CHECK(prime_power_scan(0, 1).empty());
  const auto hits = prime_power_scan(1000, 28);
  auto has = [&](u64 n, u64 p, unsigned e) {
    return std::any_of(hits.begin(), hits.end(),
                       [&](const PrimePowerHit& h) { return h.n == n && h.prime == p && h.exponent == e; });
  };
  CHECK(has(6, 2, 6));
  CHECK(has(2, 2, 5));
  for (const auto& h : hits) REQUIRE(h.exponent >= 2);
}

TEST_CASE("largest prime factors") {
  const auto lp = largest_prime_factors(5000, 1);
  CHECK(lp[1] == 2);
  CHECK(lp[3] == 5);
  for (u64 n = 1; n <= 5000; ++n) REQUIRE(lp[n] == factor_u64(n * n + 1).largest_prime());
  const auto rec = largest_prime_factor_records(10'000, 1);
  REQUIRE_FALSE(rec.records.empty());
  CHECK(rec.records.front().n == 2);
  const auto it = std::find_if(rec.records.begin(), rec.records.end(), [](const FactorRecord& r) { return r.n == 3; });
  if (it != rec.records.end()) CHECK(it->exponent == doctest::Approx(std::log(5.0) / std::log(3.0)));
  CHECK(rec.max_exponent >= 1.2);
  for (std::size_t i = 1; i < rec.records.size(); ++i) REQUIRE(rec.records[i].exponent > rec.records[i - 1].exponent);
  CHECK(rec.max_prime == largest_prime_factors(10'000, 1)[rec.max_prime_n]);
}
