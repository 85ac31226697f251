#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "qprimes/arith.hpp"
#include "qprimes/composite_stats.hpp"

using namespace qprimes;

TEST_CASE("pi_k by enumeration") {
  const FactorSieve sieve(100'000);
  CHECK(pi_k(sieve, 20, 1) == 12);
  CHECK(pi_k(sieve, 20, 0) == 1);
  CHECK(pi_k(sieve, 30, 2) == 12);
  CHECK(pi_k(sieve, 100, 1) == 35);
  for (unsigned k = 0; k < 5; ++k) {
    u64 expected = 0;
    for (u64 n = 1; n <= 5000; ++n) expected += omega(n) == k;
    REQUIRE(pi_k(sieve, 5000, k) == expected);
  }
}

TEST_CASE("omega histogram") {
  const FactorSieve sieve(1'000'000);
  const auto h = omega_histogram(sieve, 1'000'000);
  CHECK(h.total() == 1'000'000);
  CHECK(h.count(0) == 1);
  CHECK(h.count(2) == 288'726);
  CHECK(h.count(7) == 8);
  CHECK(h.count(8) == 0);
  CHECK(h.threshold == 3);
  CHECK(omega_histogram(sieve, 16).total() == 16);
}

TEST_CASE("landau_ratio") {
  const FactorSieve sieve(10'000'000);
  CHECK(landau_ratio(sieve, 100, 1) == doctest::Approx(35 * std::log(100.0) / 100));
  CHECK(landau_ratio(sieve, 100, 1) == doctest::Approx(1.6118).epsilon(1e-4));
  const double r = landau_ratio(sieve, 10'000'000, 2);
  CHECK(r >= 0.5);
  CHECK(r <= 2.0);
  CHECK(r == doctest::Approx(1.47086).epsilon(1e-5));
  CHECK_THROWS_AS((void)landau_ratio(sieve, 15, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)landau_ratio(sieve, 100, 0), std::invalid_argument);
}

TEST_CASE("high omega mass") {
  const FactorSieve sieve(1'000'000);
  CHECK(high_omega_mass(sieve, 100, 1).count == 64);
  const auto m = high_omega_mass(sieve, 1'000'000, 1);
  CHECK(m.count == 632'539);
  CHECK(m.rho_sum == 204'044);
  CHECK(m.count_ceil == 252'819);
  CHECK(m.bound == doctest::Approx(281'549.55).epsilon(1e-6));
  CHECK(m.within_bound());
  CHECK_THROWS_AS((void)high_omega_mass(sieve, 15, 1), std::invalid_argument);
}
