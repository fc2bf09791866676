#include "qsieve/exactmath.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace qsieve {

Nat checked_add(Nat a, Nat b) {
  Nat r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("checked_add: 64-bit overflow");
  return r;
}

Nat checked_mul(Nat a, Nat b) {
  Nat r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("checked_mul: 64-bit overflow");
  return r;
}

Nat ceil_div(Nat a, Nat b) {
  if (b == 0) throw std::invalid_argument("ceil_div: zero divisor");
  return a / b + (a % b != 0 ? 1 : 0);
}

bool divides(Nat d, Nat n) {
  if (d == 0) throw std::invalid_argument("divides: zero divisor");
  return n % d == 0;
}

bool divides(Nat d, Wide n) {
  if (d == 0) throw std::invalid_argument("divides: zero divisor");
  return n % d == 0;
}

namespace {

Nat mulmod(Nat a, Nat b, Nat m) {
  return static_cast<Nat>(static_cast<Wide>(a) * b % m);
}

Nat powmod(Nat base, Nat exp, Nat m) {
  Nat r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/* One strong-probable-prime round; n odd, n > 2, n-1 = d*2^s. */
bool sprp(Nat n, Nat a, Nat d, int s) {
  a %= n;
  if (a == 0) return true;
  Nat x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

} // namespace

bool is_prime(Nat n) {
  if (n < 2) return false;
  for (Nat p : {Nat{2}, Nat{3}, Nat{5}, Nat{7}, Nat{11}, Nat{13}, Nat{17},
                Nat{19}, Nat{23}, Nat{29}, Nat{31}, Nat{37}}) {
    if (n % p == 0) return n == p;
  }
  Nat d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  /* The first twelve primes as witnesses decide primality for every
   * n < 3.3e24, hence for all 64-bit inputs. */
  for (Nat a : {Nat{2}, Nat{3}, Nat{5}, Nat{7}, Nat{11}, Nat{13}, Nat{17},
                Nat{19}, Nat{23}, Nat{29}, Nat{31}, Nat{37}}) {
    if (!sprp(n, a, d, s)) return false;
  }
  return true;
}

std::vector<Nat> primes_up_to(Nat limit) {
  std::vector<Nat> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (Nat i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (Wide j = static_cast<Wide>(i) * i; j <= limit; j += i)
      composite[static_cast<Nat>(j)] = true;
  }
  return out;
}

std::set<Nat> prime_factors(Nat n) {
  std::set<Nat> out;
  for (Nat p = 2; static_cast<Wide>(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.insert(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.insert(n);
  return out;
}

namespace {

/* Extended Euclid: returns g = gcd(a,b) and x with a*x = g (mod b), x in Z. */
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  if (b == 0) { x = 1; y = 0; return a; }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

} // namespace

Nat crt_pair(Nat r1, Nat m1, Nat r2, Nat m2) {
  if (m1 == 0 || m2 == 0)
    throw std::invalid_argument("crt_pair: zero modulus");
  if (r1 >= m1 || r2 >= m2)
    throw std::invalid_argument("crt_pair: residue not reduced");
  Int x, y;
  Int g = ext_gcd(static_cast<Int>(m1), static_cast<Int>(m2), x, y);
  if (g != 1) throw std::invalid_argument("crt_pair: moduli not coprime");
  Nat m = checked_mul(m1, m2);
  /* x = inverse of m1 mod m2 (normalize to [0, m2)). */
  Nat inv = static_cast<Nat>(((x % static_cast<Int>(m2)) + static_cast<Int>(m2)) %
                             static_cast<Int>(m2));
  /* candidate = r1 + m1 * ((r2 - r1) * inv mod m2) < m1*m2. */
  Nat diff = (r2 + m2 - r1 % m2) % m2;
  Nat k = mulmod(diff, inv, m2);
  return static_cast<Nat>((static_cast<Wide>(m1) * k + r1) % m);
}

bool congruent(Int a, Int b, Nat m) {
  if (m == 0) throw std::invalid_argument("congruent: zero modulus");
  Int mm = static_cast<Int>(m);
  Int ra = a % mm;
  if (ra < 0) ra += mm;
  Int rb = b % mm;
  if (rb < 0) rb += mm;
  return ra == rb;
}

} // namespace qsieve
