#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "qsieve/exactmath.hpp"

using namespace qsieve;

namespace {

/* reference primality by trial division, for cross-checking */
bool slow_prime(Nat n) {
  if (n < 2) return false;
  for (Nat d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace

TEST_CASE("checked arithmetic detects overflow") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(6, 7) == 42);
  const Nat big = std::numeric_limits<Nat>::max();
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
  CHECK(checked_mul(big, 1) == big);
  CHECK(checked_add(big - 1, 1) == big);
}

TEST_CASE("wide multiplication covers the 64x64 range") {
  const Nat big = std::numeric_limits<Nat>::max();
  Wide w = wide_mul(big, big);
  CHECK(static_cast<Nat>(w >> 64) == big - 1);
  CHECK(static_cast<Nat>(w) == 1);
  CHECK(wide_mul(0, big) == 0);
}

TEST_CASE("ceiling division") {
  CHECK(ceil_div(0, 5) == 0);
  CHECK(ceil_div(1, 5) == 1);
  CHECK(ceil_div(5, 5) == 1);
  CHECK(ceil_div(6, 5) == 2);
  CHECK(ceil_div(144, 13) == 12);
  CHECK_THROWS_AS(ceil_div(1, 0), std::invalid_argument);
}

TEST_CASE("divisibility on narrow and wide values") {
  CHECK(divides(3, Nat{12}));
  CHECK_FALSE(divides(5, Nat{12}));
  CHECK(divides(1, Nat{0}));
  CHECK_THROWS_AS(divides(0, Nat{12}), std::invalid_argument);
  CHECK_THROWS_AS(divides(0, Wide{7}), std::invalid_argument);
  /* 16 | 4*12*(4*12+1) = 2352 */
  CHECK(divides(16, wide_mul(48, 49)));
  CHECK_FALSE(divides(17, wide_mul(48, 49)));
}

TEST_CASE("deterministic primality agrees with trial division up to 10^6") {
  for (Nat n = 0; n <= 1000000; ++n) {
    if (is_prime(n) != slow_prime(n)) {
      CAPTURE(n);
      CHECK(is_prime(n) == slow_prime(n));
      break;
    }
  }
  /* a few larger targeted values */
  CHECK(is_prime(2927));
  CHECK(is_prime(1000000007ULL));
  CHECK_FALSE(is_prime(1000000007ULL * 3));
  CHECK(is_prime(2147483647ULL)); /* 2^31 - 1 */
  CHECK_FALSE(is_prime(2147483647ULL * 2147483647ULL));
}

TEST_CASE("prime sieve matches point checks") {
  auto ps = primes_up_to(100);
  std::vector<Nat> expect = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                             43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  CHECK(ps == expect);
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<Nat>{2});
}

TEST_CASE("prime factorisation") {
  CHECK(prime_factors(49) == std::set<Nat>{7});
  CHECK(prime_factors(245) == std::set<Nat>{5, 7});
  CHECK(prime_factors(1) == std::set<Nat>{});
  CHECK(prime_factors(2 * 3 * 5 * 7 * 11) == std::set<Nat>{2, 3, 5, 7, 11});
  CHECK(prime_factors(1024) == std::set<Nat>{2});
}

TEST_CASE("chinese remainder combination") {
  /* the pair used by the order-35 contradiction */
  CHECK(crt_pair(0, 35, 1, 16) == 385);
  CHECK(crt_pair(2, 3, 3, 5) == 8);
  CHECK(crt_pair(0, 1, 4, 9) == 4); /* trivial first modulus */
}

TEST_CASE("chinese remainder rejects bad input") {
  CHECK_THROWS_AS(crt_pair(5, 3, 0, 4), std::invalid_argument); /* r >= m */
  CHECK_THROWS_AS(crt_pair(0, 0, 0, 4), std::invalid_argument); /* m = 0 */
  CHECK_THROWS_AS(crt_pair(0, 4, 1, 6), std::invalid_argument); /* gcd 2 */
}

TEST_CASE("crt result satisfies both congruences over a sweep") {
  for (Nat m1 = 1; m1 <= 20; ++m1)
    for (Nat m2 = 1; m2 <= 20; ++m2) {
      /* only coprime moduli */
      Nat a = m1, b = m2;
      while (b) {
        Nat r = a % b;
        a = b;
        b = r;
      }
      if (a != 1) continue;
      for (Nat r1 = 0; r1 < m1; r1 += (m1 > 3 ? 3 : 1))
        for (Nat r2 = 0; r2 < m2; r2 += (m2 > 3 ? 3 : 1)) {
          Nat x = crt_pair(r1, m1, r2, m2);
          REQUIRE(x % m1 == r1);
          REQUIRE(x % m2 == r2);
          REQUIRE(x < m1 * m2);
        }
    }
}

TEST_CASE("signed congruence helper uses floor semantics") {
  CHECK(congruent(-3, 13, 16));
  CHECK(congruent(5, 5, 7));
  CHECK_FALSE(congruent(5, 6, 7));
  CHECK(congruent(-224, 0, 16));
  CHECK(congruent(-1, 34, 35));
}
