#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace msl {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& a) { return a.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Exact division helper; caller guarantees b | a.
inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
inline Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool fits_int64(const Integer& a) { return mpz_fits_slong_p(a.get_mpz_t()) != 0; }

}  // namespace msl
