#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zetalab {

// Exact arithmetic types. GMP keeps rationals canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rational(const Rational& base, long e) {
  Rational r;
  if (e >= 0) {
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)e);
  } else {
    mpz_pow_ui(r.get_num_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)(-e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)(-e));
  }
  r.canonicalize();
  return r;
}

// ord_p of a nonzero integer.
inline long p_valuation(const Integer& n, unsigned long p) {
  Integer rest;
  return (long)mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t());
}

// ord_p(num) - ord_p(den) of a nonzero rational.
inline long p_valuation(const Rational& q, unsigned long p) {
  return p_valuation(q.get_num(), p) - p_valuation(q.get_den(), p);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace zetalab
