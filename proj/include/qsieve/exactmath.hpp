#pragma once

/*
 * Exact unsigned/signed integer arithmetic for the sieve.
 *
 * Every quantity in the engine is an exact integer.  Public values are
 * 64-bit; products that could exceed 64 bits are formed in 128-bit
 * intermediates.  Overflow of a public value is a reported error, never
 * wraparound.  No floating point anywhere.
 */

#include <cstdint>
#include <set>
#include <vector>

namespace qsieve {

using Nat = std::uint64_t;
using Int = std::int64_t;
using Wide = unsigned __int128; /* intermediates only */

/* a+b, a*b with overflow detection; throws std::overflow_error. */
Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);

/* Widening product, never overflows for 64-bit inputs. */
inline Wide wide_mul(Nat a, Nat b) { return static_cast<Wide>(a) * b; }

/* ceil(a/b); b == 0 throws std::invalid_argument. */
Nat ceil_div(Nat a, Nat b);

/* d | n; d == 0 throws std::invalid_argument.  divides(d, 0) is true. */
bool divides(Nat d, Nat n);
bool divides(Nat d, Wide n);

/* Deterministic for every 64-bit n (fixed Miller-Rabin witness set). */
bool is_prime(Nat n);

/* All primes <= limit, ascending (sieve of Eratosthenes). */
std::vector<Nat> primes_up_to(Nat limit);

/* Distinct prime divisors of n >= 2, ascending; n < 2 yields {}. */
std::set<Nat> prime_factors(Nat n);

/* Unique x < m1*m2 with x = r1 (mod m1), x = r2 (mod m2).
 * Requires gcd(m1,m2) == 1, r1 < m1, r2 < m2 (std::invalid_argument),
 * and m1*m2 to fit in 64 bits (std::overflow_error). */
Nat crt_pair(Nat r1, Nat m1, Nat r2, Nat m2);

/* a = b (mod m) over Z, correct for negative operands; m == 0 throws. */
bool congruent(Int a, Int b, Nat m);

} // namespace qsieve
