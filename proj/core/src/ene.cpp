#include "zetalab/ene.hpp"

#include "zetalab/special.hpp"

namespace zetalab {

EulerFactor zeta_local_factor(std::uint64_t p) {
  if (!is_prime(p)) throw domain_violation("zeta_local_factor: p must be prime");
  // denominator 1 - p^{-1/2} X, with p^{-1/2} = (1/p) sqrt(p)
  std::vector<QuadRat> den = {QuadRat(Rational(1)),
                              QuadRat(Rational(0), Rational(-1, (long)p), p)};
  return EulerFactor{p, QuadFraction(QuadPolynomial(), QuadPolynomial(std::move(den)))};
}

EulerFactor l_local_factor(std::uint64_t p, int chi_p) {
  if (!is_prime(p)) throw domain_violation("l_local_factor: p must be prime");
  if (chi_p == 0) return EulerFactor{p, QuadFraction(QuadPolynomial(), QuadPolynomial())};
  std::vector<QuadRat> den = {QuadRat(Rational(1)),
                              QuadRat(Rational(0), Rational(-chi_p, (long)p), p)};
  return EulerFactor{p, QuadFraction(QuadPolynomial(), QuadPolynomial(std::move(den)))};
}

std::vector<EulerFactor> ene_euler(const std::vector<EulerFactor>& f,
                                   const std::vector<EulerFactor>& g) {
  if (f.size() != g.size())
    throw domain_violation("ene_euler: factor lists cover different primes");
  std::vector<EulerFactor> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].p != g[i].p)
      throw domain_violation("ene_euler: factor lists cover different primes");
    out.push_back(EulerFactor{f[i].p, star(f[i].local, g[i].local)});
  }
  return out;
}

bool unit_equation_check(std::uint64_t p) {
  if (!is_prime(p)) throw domain_violation("unit_equation_check: p must be prime");
  const EulerFactor zp = zeta_local_factor(p);
  const QuadFraction self = star(zp.local, zp.local);
  // Local factor of zeta(s + 1/2)^{-1}: 1 - p^{-1} X.
  std::vector<QuadRat> want = {QuadRat(Rational(1)), QuadRat(Rational(-1, (long)p))};
  const QuadFraction target(QuadPolynomial(std::move(want)), QuadPolynomial());
  return self == target;
}

}  // namespace zetalab
