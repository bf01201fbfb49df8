// Arbitrary-precision integers used for every exact computation.

#ifndef CRYSTCOH_INTEGER_HPP_
#define CRYSTCOH_INTEGER_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace crystcoh {

using Int = mpz_class;

inline std::string to_string(const Int& a) { return a.get_str(); }

inline bool fits_long(const Int& a) { return a.fits_slong_p(); }

// g = s*a + t*b with g = gcd(a, b) >= 0.
inline void extended_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
             a.get_mpz_t(), b.get_mpz_t());
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0)
    return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

inline bool is_square_free(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0)
      return false;
  return n >= 1;
}

} // namespace crystcoh

#endif
