#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

// ---------------------------------------------------------------------------
// Coefficient fields for the star product. Rational covers polynomials with
// rational roots; QuadRat adjoins a single square root sqrt(d) so the local
// Euler variable X = p^{-(s-1/2)} keeps p^{-1/2} exact.
// ---------------------------------------------------------------------------

struct QuadRat {
  Rational a, b;        // a + b sqrt(d)
  unsigned long d = 0;  // 0 while the element is plain rational

  QuadRat() : a(0), b(0) {}
  QuadRat(Rational ra) : a(std::move(ra)), b(0) {}
  QuadRat(Rational ra, Rational rb, unsigned long dd)
      : a(std::move(ra)), b(std::move(rb)), d(dd) {
    if (b == 0) d = 0;
  }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  double to_double() const {
    return a.get_d() + b.get_d() * std::sqrt((double)d);
  }
};

inline unsigned long quad_join(unsigned long d1, unsigned long d2) {
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  if (d1 != d2)
    throw domain_violation("QuadRat: mixed quadratic fields in one expression");
  return d1;
}

inline QuadRat operator+(const QuadRat& x, const QuadRat& y) {
  return QuadRat(x.a + y.a, x.b + y.b, quad_join(x.d, y.d));
}
inline QuadRat operator-(const QuadRat& x, const QuadRat& y) {
  return QuadRat(x.a - y.a, x.b - y.b, quad_join(x.d, y.d));
}
inline QuadRat operator-(const QuadRat& x) { return QuadRat(-x.a, -x.b, x.d); }
inline QuadRat operator*(const QuadRat& x, const QuadRat& y) {
  const unsigned long d = quad_join(x.d, y.d);
  return QuadRat(x.a * y.a + x.b * y.b * Rational((unsigned long)d),
                 x.a * y.b + x.b * y.a, d);
}
inline QuadRat operator/(const QuadRat& x, const QuadRat& y) {
  if (y.is_zero()) throw domain_violation("QuadRat: division by zero");
  const unsigned long d = quad_join(x.d, y.d);
  // Multiply by the conjugate; the norm a^2 - d b^2 is nonzero for d prime.
  const Rational norm = y.a * y.a - Rational((unsigned long)d) * y.b * y.b;
  const QuadRat conj(y.a, -y.b, d);
  QuadRat num = x * conj;
  return QuadRat(num.a / norm, num.b / norm, d);
}
inline bool operator==(const QuadRat& x, const QuadRat& y) {
  return x.a == y.a && x.b == y.b && (x.b == 0 || y.b == 0 || x.d == y.d);
}
inline bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

namespace field {
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const QuadRat& x) { return x.is_zero(); }
inline Rational one(const Rational&) { return Rational(1); }
inline QuadRat one(const QuadRat&) { return QuadRat(Rational(1)); }
}  // namespace field

// ---------------------------------------------------------------------------
// Unit polynomials: constant term fixed to 1, exact coefficients in F.
// The star product A*B has the products of the (inverse) roots of A and B
// as its (inverse) roots. It is computed through power sums of inverse
// roots, which multiply coordinatewise, so no root is ever extracted.
// ---------------------------------------------------------------------------

template <typename F>
class UnitPolynomial {
 public:
  UnitPolynomial() : c_(1, F(Rational(1))) {}
  explicit UnitPolynomial(std::vector<F> coeff) : c_(std::move(coeff)) {
    if (c_.empty() || !(c_[0] == F(Rational(1))))
      throw domain_violation("UnitPolynomial: constant term must be 1");
    trim();
  }

  std::size_t degree() const { return c_.size() - 1; }
  const F& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<F>& coefficients() const { return c_; }
  bool is_one() const { return degree() == 0; }

  friend UnitPolynomial operator*(const UnitPolynomial& x, const UnitPolynomial& y) {
    std::vector<F> v(x.degree() + y.degree() + 1, F(Rational(0)));
    for (std::size_t i = 0; i <= x.degree(); ++i) {
      if (field::is_zero(x.c_[i])) continue;
      for (std::size_t j = 0; j <= y.degree(); ++j) v[i + j] = v[i + j] + x.c_[i] * y.c_[j];
    }
    return UnitPolynomial(std::move(v));
  }

  friend bool operator==(const UnitPolynomial& x, const UnitPolynomial& y) {
    if (x.degree() != y.degree()) return false;
    for (std::size_t k = 0; k <= x.degree(); ++k)
      if (!(x.c_[k] == y.c_[k])) return false;
    return true;
  }

  // Power sums p_m of the inverse roots, m = 1..count (Newton's identities).
  std::vector<F> power_sums(std::size_t count) const {
    std::vector<F> p(count + 1, F(Rational(0)));
    for (std::size_t m = 1; m <= count; ++m) {
      F s = (m <= degree()) ? F(Rational((long)m) * Rational(-1)) * c_[m]
                            : F(Rational(0));
      for (std::size_t j = 1; j < m && j <= degree(); ++j)
        s = s - c_[j] * p[m - j];
      p[m] = s;
    }
    return p;
  }

  // Reconstruct the unique degree-d unit polynomial with these power sums.
  static UnitPolynomial from_power_sums(const std::vector<F>& p, std::size_t d) {
    std::vector<F> a(d + 1, F(Rational(0)));
    a[0] = F(Rational(1));
    for (std::size_t m = 1; m <= d; ++m) {
      F s = p[m];
      for (std::size_t j = 1; j < m; ++j) s = s + a[j] * p[m - j];
      a[m] = s / F(Rational((long)m) * Rational(-1));
    }
    return UnitPolynomial(std::move(a));
  }

 private:
  void trim() {
    while (c_.size() > 1 && field::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <typename F>
UnitPolynomial<F> star(const UnitPolynomial<F>& x, const UnitPolynomial<F>& y) {
  const std::size_t d = x.degree() * y.degree();
  if (d == 0) return UnitPolynomial<F>();
  auto px = x.power_sums(d);
  auto py = y.power_sums(d);
  std::vector<F> p(d + 1, F(Rational(0)));
  for (std::size_t m = 1; m <= d; ++m) p[m] = px[m] * py[m];
  return UnitPolynomial<F>::from_power_sums(p, d);
}

// Polynomial gcd over F, renormalized to constant term 1. Any common factor
// of two unit polynomials has nonzero constant term, so this is well posed.
template <typename F>
UnitPolynomial<F> unit_gcd(UnitPolynomial<F> x, UnitPolynomial<F> y) {
  std::vector<F> a = x.coefficients(), b = y.coefficients();
  auto deg = [](const std::vector<F>& v) {
    std::size_t d = v.size() - 1;
    while (d > 0 && field::is_zero(v[d])) --d;
    return d;
  };
  while (true) {
    std::size_t db = deg(b);
    if (db == 0 && field::is_zero(b[0])) break;       // b == 0: gcd is a
    if (db == 0) return UnitPolynomial<F>();          // unit gcd
    std::size_t da = deg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    // a <- a mod b
    std::vector<F> r = a;
    for (std::size_t k = da; k + 1 > db; --k) {
      if (field::is_zero(r[k])) continue;
      F q = r[k] / b[db];
      for (std::size_t j = 0; j <= db; ++j)
        r[k - db + j] = r[k - db + j] - q * b[j];
    }
    r.resize(db);
    if (r.empty()) r.push_back(F(Rational(0)));
    a = b;
    b = r;
  }
  // Normalize a to constant term 1.
  std::size_t da = deg(a);
  std::vector<F> out(a.begin(), a.begin() + da + 1);
  if (field::is_zero(out[0]))
    throw domain_violation("unit_gcd: common factor with zero constant term");
  F c0 = out[0];
  for (auto& v : out) v = v / c0;
  return UnitPolynomial<F>(std::move(out));
}

// Exact division, valid when divisor divides dividend.
template <typename F>
UnitPolynomial<F> unit_divide(const UnitPolynomial<F>& num,
                              const UnitPolynomial<F>& den) {
  const std::size_t dq = num.degree() - den.degree();
  std::vector<F> rem(num.coefficients());
  std::vector<F> q(dq + 1, F(Rational(0)));
  for (std::size_t k = 0; k <= dq; ++k) {
    F qk = rem[k];  // den[0] == 1
    q[k] = qk;
    if (field::is_zero(qk)) continue;
    for (std::size_t j = 0; j <= den.degree(); ++j)
      rem[k + j] = rem[k + j] - qk * den[j];
  }
  return UnitPolynomial<F>(std::move(q));
}

// ---------------------------------------------------------------------------
// Unit fractions (elements of the fraction field of unit polynomials).
// ---------------------------------------------------------------------------

template <typename F>
struct UnitFraction {
  UnitPolynomial<F> num, den;

  UnitFraction() = default;
  UnitFraction(UnitPolynomial<F> n, UnitPolynomial<F> d)
      : num(std::move(n)), den(std::move(d)) {
    reduce();
  }

  void reduce() {
    auto g = unit_gcd(num, den);
    if (!g.is_one()) {
      num = unit_divide(num, g);
      den = unit_divide(den, g);
    }
  }
  UnitFraction inverse() const { return UnitFraction(den, num); }

  friend bool operator==(const UnitFraction& x, const UnitFraction& y) {
    return x.num == y.num && x.den == y.den;
  }
};

// A/B * C/D = (A*C)(B*D) / ((A*D)(B*C)), reduced.
template <typename F>
UnitFraction<F> star(const UnitFraction<F>& x, const UnitFraction<F>& y) {
  return UnitFraction<F>(star(x.num, y.num) * star(x.den, y.den),
                         star(x.num, y.den) * star(x.den, y.num));
}

using RatPolynomial = UnitPolynomial<Rational>;
using QuadPolynomial = UnitPolynomial<QuadRat>;
using RatFraction = UnitFraction<Rational>;
using QuadFraction = UnitFraction<QuadRat>;

// ---------------------------------------------------------------------------
// Euler factors in the variable X = p^{-(s-1/2)}.
// ---------------------------------------------------------------------------

struct EulerFactor {
  std::uint64_t p = 2;
  QuadFraction local;
};

// Local factor of zeta: 1 / (1 - p^{-1/2} X).
EulerFactor zeta_local_factor(std::uint64_t p);

// Local factor of L(s, chi) for a real character value chi(p) in {-1, 0, 1}.
EulerFactor l_local_factor(std::uint64_t p, int chi_p);

// Factor-wise star product; both lists must cover the same primes in order.
std::vector<EulerFactor> ene_euler(const std::vector<EulerFactor>& f,
                                   const std::vector<EulerFactor>& g);

// zeta * zeta = zeta(s + 1/2)^{-1}, checked exactly at the prime p:
// the self-star of 1/(1 - p^{-1/2} X) must equal 1 - p^{-1} X.
bool unit_equation_check(std::uint64_t p);

}  // namespace zetalab
