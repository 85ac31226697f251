#include <doctest.h>

#include <stdexcept>

#include <random>

#include "qprimes/arith.hpp"
#include "qprimes/oracle.hpp"
#include "qprimes/quad_congruence.hpp"

using namespace qprimes;
using V = std::vector<u64>;

TEST_CASE("sqrt_mod_prime") {
  CHECK(sqrt_mod_prime(4, 5) == V{2, 3});
  CHECK(sqrt_mod_prime(0, 7) == V{0});
  CHECK(sqrt_mod_prime(2, 3) == V{});
  CHECK(sqrt_mod_prime(1, 2) == V{1});
  CHECK_THROWS_AS((void)sqrt_mod_prime(1, 9), std::invalid_argument);
  // Tonelli-Shanks path with a large power of two in p - 1.
  const u64 p = 998244353;  // 119 * 2^23 + 1
  for (u64 a : {2ULL, 3ULL, 5ULL, 123456789ULL}) {
    for (u64 z : sqrt_mod_prime(a, p)) REQUIRE(mul_mod(z, z, p) == a);
    CHECK(sqrt_mod_prime(a, p).size() == (legendre(a, p) == 1 ? 2u : 0u));
  }
}

TEST_CASE("roots_mod small moduli") {
  auto r = roots_mod(2, 1);
  CHECK(r.roots == V{1});
  CHECK(r.count() == 1);
  CHECK(roots_mod(3, 1).roots.empty());
  CHECK(roots_mod(65, 1).roots == V{8, 18, 47, 57});
  CHECK(roots_mod(1, 1).roots == V{0});
  CHECK(rho(5, 1) == 2);
  CHECK(rho(1, 1) == 1);
  CHECK(rho(85, 1) == 4);
}

TEST_CASE("roots_mod agrees with an exhaustive scan") {
  for (u64 d : {1, 2, 3, 4, 7, 8, 12, 28, 100}) {
    for (u64 q = 1; q <= 1500; ++q) {
      const auto expected = oracle::root_scan(q, d);
      REQUIRE(roots_mod(q, d).roots == expected);
      REQUIRE(rho(q, d) == expected.size());
    }
  }
  // Prime powers where the derivative vanishes.
  for (u64 q : {1024ULL, 2187ULL, 3125ULL, 4096ULL}) {
    for (u64 d : {4, 9, 25, 36, 100}) REQUIRE(roots_mod(q, d).roots == oracle::root_scan(q, d));
  }
}

TEST_CASE("rho is multiplicative on coprime pairs") {
  std::mt19937_64 rng(11);
  int pairs = 0;
  while (pairs < 500) {
    const u64 a = rng() % 5000 + 1, b = rng() % 5000 + 1;
    if (gcd_u64(a, b) != 1) continue;
    const u64 d = rng() % 100 + 1;
    REQUIRE(rho(a * b, d) == rho(a, d) * rho(b, d));
    ++pairs;
  }
}

TEST_CASE("quadratic character") {
  const QuadraticCharacter chi(1);
  CHECK(chi(2) == 0);
  CHECK(chi(3) == -1);
  CHECK(chi(5) == 1);
  CHECK(chi(13) == 1);
  const QuadraticCharacter chi3(3);
  CHECK(chi3(3) == 0);
  CHECK(chi3(7) == 1);  // -3 = 4 = 2^2 mod 7
  CHECK(chi3(5) == -1);
  for (u64 p : primes_up_to(2000)) {
    if (p == 2) continue;
    REQUIRE(static_cast<u64>(1 + chi(p)) == rho(p, 1));
  }
}

TEST_CASE("polynomial sieve leaves primes above the bound") {
  const u64 count = 3000, d = 1;
  const u64 bound = isqrt(count * count + d);
  const auto s = sieve_quadratic_values(count, d, bound);
  for (u64 m = 1; m <= count; ++m) {
    const u64 v = m * m + d;
    const auto f = factor_u64(v);
    const u64 c = s.cofactor[m];
    REQUIRE((c == 1 || (is_prime_u64(c) && c > bound)));
    REQUIRE(f.largest_prime() == std::max(c, s.largest_sieved[m]));
  }
}
