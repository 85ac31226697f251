#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "qprimes/arith.hpp"
#include "qprimes/oracle.hpp"

using namespace qprimes;

TEST_CASE("mobius on small values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(6) == 1);
}

TEST_CASE("von_mangoldt on small values") {
  CHECK(von_mangoldt(1) == 0.0);
  CHECK(von_mangoldt(9) == doctest::Approx(std::log(3.0)));
  CHECK(von_mangoldt(10) == 0.0);
  CHECK(von_mangoldt(1024) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("von_mangoldt_via_mobius by divisor enumeration") {
  CHECK(von_mangoldt_via_mobius(4) == doctest::Approx(0.693147).epsilon(1e-6));
  CHECK(std::abs(von_mangoldt_via_mobius(6)) < 1e-12);
  CHECK(von_mangoldt_via_mobius(1) == 0.0);
  const FactorSieve sieve(5000);
  for (u64 n = 1; n <= 5000; ++n) {
    REQUIRE(std::abs(von_mangoldt_via_mobius(sieve, n) - oracle::von_mangoldt_trial(n)) < 1e-9);
    REQUIRE(std::abs(von_mangoldt_via_mobius(n) - von_mangoldt(n)) < 1e-9);
  }
}

TEST_CASE("is_prime_u64 and is_prime_power") {
  CHECK(is_prime_u64((u64{1} << 61) - 1));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(0));
  CHECK(is_prime_u64(2));
  CHECK_FALSE(is_prime_u64(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime_u64(3825123056546413051ULL));  // strong pseudoprime to the first nine primes
  CHECK(is_prime_u64(18446744073709551557ULL));       // largest 64-bit prime
  CHECK_FALSE(is_prime_power(1).has_value());
  CHECK(is_prime_power(512) == PrimePower{2, 9});
  CHECK(is_prime_power(4294967291ULL) == PrimePower{4294967291ULL, 1});
  CHECK(is_prime_power(u64{4294967291ULL} * 4294967291ULL) == PrimePower{4294967291ULL, 2});
  CHECK_FALSE(is_prime_power(36).has_value());
  for (u64 n = 0; n < 20000; ++n) REQUIRE(is_prime_u64(n) == oracle::is_prime_trial(n));
}

TEST_CASE("factor_u64 agrees with trial division") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = rng() % 1'000'000'000'000ULL + 1;
    REQUIRE(factor_u64(n) == oracle::trial_factor(n));
  }
  const auto f = factor_u64(u64{1000000007} * 998244353);
  REQUIRE(f.parts.size() == 2);
  CHECK(f.parts[0] == PrimePower{998244353, 1});
  CHECK(f.parts[1] == PrimePower{1000000007, 1});
  CHECK_THROWS_AS((void)factor_u64(0), std::invalid_argument);
}

TEST_CASE("integer roots") {
  CHECK(isqrt(u64{0}) == 0);
  CHECK(isqrt(u64{99}) == 9);
  CHECK(isqrt(~u64{0}) == 0xFFFFFFFFULL);
  CHECK(isqrt(static_cast<u128>(~u64{0}) * ~u64{0}) == ~u64{0});
  CHECK(iroot(1'000'000'000'000'000'000ULL, 3) == 1'000'000);
  CHECK(iroot(999'999'999'999'999'999ULL, 3) == 999'999);
  CHECK(checked_pow(2, 10, 1024) == u128{1024});
  CHECK_FALSE(checked_pow(2, 11, 1024).has_value());
}

TEST_CASE("FactorSieve matches the free functions") {
  const FactorSieve sieve(100'000);
  CHECK(sieve.primes().size() == 9592);
  for (u64 n = 1; n <= 100'000; n += 7) {
    REQUIRE(sieve.factor(n) == factor_u64(n));
    REQUIRE(sieve.mobius(n) == mobius(n));
    REQUIRE(sieve.omega(n) == omega(n));
  }
  CHECK(primes_up_to(100).size() == 25);
  CHECK_THROWS_AS(FactorSieve(1), std::invalid_argument);
  CHECK_THROWS_AS(FactorSieve(u64{1} << 32), std::invalid_argument);
}
