#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/dirichlet.hpp"
#include "zetalab/rational.hpp"
#include "zetalab/special.hpp"

namespace zetalab {

// ---------------------------------------------------------------------------
// Riemann zeta and Hurwitz zeta by Euler-Maclaurin. The evaluator works
// directly at any s != 1 (no reflection), so functional-equation tests
// compare genuinely independent evaluations of the two sides.
// ---------------------------------------------------------------------------

Complex zeta(Complex s);                    // throws pole_error at s == 1
Complex hurwitz_zeta(Complex s, double a);  // 0 < a <= 1, s != 1

// |(s-1) zeta(s) - 1| at s = 1 + eps.
double zeta_residue_check(double eps = 1e-6);

// zeta(1-n) as an exact rational (zero for odd n >= 3, -1/2 for n = 1).
Rational zeta_negative(unsigned n);

// zeta(2n) = coefficient * pi^{2n}; returns the exact rational coefficient
// and its binary64 value.
struct EvenZetaValue {
  Rational coefficient;
  double value;
};
EvenZetaValue zeta_even(unsigned n);

// ---------------------------------------------------------------------------
// Completed functions.
// ---------------------------------------------------------------------------

struct CompletedValue {
  Complex raw;        // zeta or L value; +inf at the documented pole s = 1
  Complex completed;  // xi or Lambda value, finite everywhere
};

// xi(s) = (s-1) pi^{-s/2} Gamma(1 + s/2) zeta(s); entire, xi(s) = xi(1-s).
// At s = 1 the completed value is evaluated through the Laurent limit.
CompletedValue xi(Complex s);
Complex Xi(Complex t);  // xi(1/2 + it); real for real t

// L(s, chi) via q^{-s} sum_a chi(a) hurwitz_zeta(s, a/q).
Complex dirichlet_L(Complex s, const DirichletCharacter& chi);

// Lambda(s, chi) = pi^{-(s+a)/2} Gamma((s+a)/2) L(s, chi), primitive chi != 1.
CompletedValue completed_lambda(Complex s, const DirichletCharacter& chi);

// Residual of Lambda(s, chi) = eps(chi) q^{1/2-s} Lambda(1-s, conj chi).
double lambda_equation_residual(Complex s, const DirichletCharacter& chi);

// ---------------------------------------------------------------------------
// L-function families with a real critical-line rotation.
// ---------------------------------------------------------------------------

class Family {
 public:
  static Family zeta_family();
  static Family quadratic(DirichletCharacter chi);  // real primitive chi != 1
  static Family parse(const std::string& label);    // "zeta" or "chiQ.I"

  bool is_zeta() const { return !chi_.has_value(); }
  const DirichletCharacter& chi() const { return *chi_; }
  std::uint32_t index() const { return index_; }
  std::string label() const;

  // Completed value at s (xi or Lambda).
  Complex completed(Complex s) const;
  // L value at s (zeta or Dirichlet L).
  Complex value(Complex s) const;
  // Main term of the zero-counting function at height T.
  double counting_main_term(double T) const;

 private:
  Family() = default;
  std::optional<DirichletCharacter> chi_;
  std::uint32_t index_ = 0;
};

// Real rotation e^{i theta(t)} L(1/2 + it); sign changes locate zeros of odd
// order. Defined for zeta and quadratic primitive characters only.
double hardy_z(double t, const Family& family);

// Riemann-Siegel theta for zeta (phase of the rotation).
double riemann_siegel_theta(double t);

// ---------------------------------------------------------------------------
// Closed-form identities.
// ---------------------------------------------------------------------------

// N-term Dirichlet series sum sigma_{1-2w}(n) n^{w-1/2-s} and the closed
// form zeta(s+w-1/2) zeta(s-w+1/2).
struct EisensteinCheck {
  Complex series;
  Complex product;
};
EisensteinCheck eisenstein_l(Complex s, Complex w, std::uint32_t N);

// Euler product over p <= P of (1-p^{-s})^{-1} (1-p^{1-s})^{-1} against
// zeta(s) zeta(s-1); requires Re s > 2.5.
struct HasseWeilCheck {
  Complex truncated_product;
  Complex closed_form;
};
HasseWeilCheck hasse_weil_p1(Complex s, std::uint32_t prime_limit);

}  // namespace zetalab
