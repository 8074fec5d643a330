#include "zetalab/lfun.hpp"

#include <cmath>
#include <limits>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

// thread-local log table for the integer main sums of zeta.
double log_n(std::size_t n) {
  thread_local std::vector<double> table{0.0, 0.0};  // log 0 unused, log 1
  while (table.size() <= n) table.push_back(std::log((double)table.size()));
  return table[n];
}

Complex cpow_log(double base, Complex e, double logbase) {
  // Magnitude through std::pow (1-2 ulp) rather than exp(re log base), whose
  // relative error grows with |re log base| and dominates the cancellation
  // floor at negative integer arguments.
  return std::polar(std::pow(base, e.real()), e.imag() * logbase);
}

// Euler-Maclaurin core for sum over n >= 0 of (n + a)^{-s}.
//
// N is tied to |Im s| so the correction terms contract; ~40 corrections and
// compensated summation keep the relative error near 1e-12 through desk
// heights (|Im s| of a few thousand).
Complex euler_maclaurin(Complex s, double a, bool integer_base) {
  const double t = std::abs(s.imag());
  // Left of the strip the summands grow like n^{|Re s|}, so a short main sum
  // keeps the cancellation floor down; the correction terms still contract
  // (and terminate exactly at negative integers).
  const double base_n = (s.real() < -0.5) ? 8.0 : 16.0;
  const std::size_t N = (std::size_t)std::max(base_n, std::ceil(t / 4.0));

  const Complex ms = -s;
  Complex sum(0.0, 0.0);
  double comp_re = 0.0, comp_im = 0.0;
  for (std::size_t n = 0; n < N; ++n) {
    const double base = (double)n + a;
    const double lb = integer_base ? log_n(n + 1) : std::log(base);
    const Complex term = cpow_log(base, ms, lb);
    // Kahan on both components.
    double y = term.real() - comp_re;
    double v = sum.real() + y;
    comp_re = (v - sum.real()) - y;
    sum.real(v);
    y = term.imag() - comp_im;
    v = sum.imag() + y;
    comp_im = (v - sum.imag()) - y;
    sum.imag(v);
  }

  const double u = (double)N + a;
  const double lu = std::log(u);
  const Complex u_ms = cpow_log(u, ms, lu);          // u^{-s}
  sum += u_ms * u / (s - 1.0) + 0.5 * u_ms;      // u^{1-s}/(s-1) + u^{-s}/2

  const auto& c = bernoulli_even_over_factorial(40);
  Complex factor = u_ms / u;        // u^{-s-1}
  Complex poch = s;                 // s (s+1) ... rising
  double best = 1e300;
  Complex tail(0.0, 0.0);
  for (std::size_t k = 1; k <= 40; ++k) {
    const Complex term = c[k - 1] * poch * factor;
    const double mag = std::abs(term);
    if (mag > best) break;  // asymptotic tail started to grow
    tail += term;
    best = mag;
    if (mag < 1e-17 * (1.0 + std::abs(sum))) break;
    poch *= (s + (double)(2 * k - 1)) * (s + (double)(2 * k));
    factor /= u * u;
  }
  return sum + tail;
}

bool near_one(Complex s, double tol = 1e-13) {
  return std::abs(s - Complex(1.0, 0.0)) < tol;
}

}  // namespace

Complex zeta(Complex s) {
  if (near_one(s)) throw pole_error("zeta: pole at s = 1");
  return euler_maclaurin(s, 1.0, true);
}

Complex hurwitz_zeta(Complex s, double a) {
  if (a <= 0.0 || a > 1.0)
    throw domain_violation("hurwitz_zeta: a must be in (0, 1]");
  if (near_one(s)) throw pole_error("hurwitz_zeta: pole at s = 1");
  return euler_maclaurin(s, a, a == 1.0);
}

double zeta_residue_check(double eps) {
  const Complex s(1.0 + eps, 0.0);
  return std::abs((s - 1.0) * zeta(s) - 1.0);
}

Rational zeta_negative(unsigned n) {
  if (n == 0) throw domain_violation("zeta_negative: n must be >= 1");
  if (n == 1) return Rational(-1, 2);
  if (n % 2 == 1) return Rational(0);
  Rational b = bernoulli(n);
  return -b / Rational(n);
}

EvenZetaValue zeta_even(unsigned n) {
  if (n == 0) throw domain_violation("zeta_even: n must be >= 1");
  // zeta(2n) = (-1)^{n+1} 2^{2n-1} B_{2n} / (2n)! * pi^{2n}
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), 2 * n);
  Rational ratio(pow_integer(2, 2 * n - 1), fact);
  ratio.canonicalize();
  Rational coeff = bernoulli(2 * n) * ratio;
  if (n % 2 == 0) coeff = -coeff;
  return EvenZetaValue{coeff, coeff.get_d() * std::pow(kPi, 2.0 * n)};
}

CompletedValue xi(Complex s) {
  // (s-1) pi^{-s/2} Gamma(1 + s/2) zeta(s); the shifted Gamma absorbs the
  // s/2 factor so s = 0 needs no special care.
  const Complex prefactor = std::exp(Complex(-0.5, 0.0) * s * std::log(kPi)) *
                            gamma(1.0 + 0.5 * s);
  if (near_one(s, 1e-9)) {
    // (s-1) zeta(s) = 1 + gamma (s-1) + O((s-1)^2)
    const Complex pole_part = 1.0 + kEulerGamma * (s - 1.0);
    const double inf = std::numeric_limits<double>::infinity();
    return CompletedValue{Complex(inf, 0.0), prefactor * pole_part};
  }
  const Complex z = zeta(s);
  return CompletedValue{z, (s - 1.0) * prefactor * z};
}

Complex Xi(Complex t) { return xi(Complex(0.5, 0.0) + Complex(0.0, 1.0) * t).completed; }

Complex dirichlet_L(Complex s, const DirichletCharacter& chi) {
  const std::uint32_t q = chi.modulus;
  if (q == 1) return zeta(s);
  if (chi.is_trivial() && near_one(s))
    throw pole_error("dirichlet_L: pole of the principal character at s = 1");

  if (near_one(s, 1e-8) && !chi.is_trivial()) {
    // L(1, chi) = -(1/q) sum_a chi(a) digamma(a/q); the Hurwitz poles cancel.
    Complex sum(0.0, 0.0);
    for (std::uint32_t a = 1; a < q; ++a) {
      if (std::abs(chi.values[a]) == 0.0) continue;
      sum += chi.values[a] * digamma(Complex((double)a / q, 0.0));
    }
    return -sum / (double)q;
  }

  const Complex qs = std::exp(-s * std::log((double)q));
  Complex sum(0.0, 0.0);
  for (std::uint32_t a = 1; a <= q; ++a) {
    if (std::abs(chi.values[a % q]) == 0.0) continue;
    sum += chi.values[a % q] * hurwitz_zeta(s, (double)a / q);
  }
  return qs * sum;
}

CompletedValue completed_lambda(Complex s, const DirichletCharacter& chi) {
  if (!chi.primitive || chi.is_trivial())
    throw domain_violation("completed_lambda: chi must be primitive and nontrivial");
  const double a = (double)chi.parity;
  const Complex w = 0.5 * (s + a);
  const Complex pi_pow = std::exp(-w * std::log(kPi));

  // At w = -k the Gamma pole meets a trivial zero of L; Lambda stays finite
  // with limit pi^k (-1)^k/k! * 2 L'(s0).
  const double kr = std::round(-w.real());
  if (kr >= 0.0 && std::abs(w + kr) < 5e-10) {
    const unsigned k = (unsigned)kr;
    double fact = 1.0;
    for (unsigned j = 2; j <= k; ++j) fact *= j;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    Complex ratio;  // L(s) / (w + k)
    if (std::abs(w + kr) < 1e-12) {
      const double h = 1e-3;
      const Complex d = (dirichlet_L(s - 2.0 * h, chi) -
                         8.0 * dirichlet_L(s - h, chi) +
                         8.0 * dirichlet_L(s + h, chi) -
                         dirichlet_L(s + 2.0 * h, chi)) /
                        (12.0 * h);
      ratio = 2.0 * d;  // s - s0 = 2 (w + k)
    } else {
      ratio = dirichlet_L(s, chi) / (w + kr);
    }
    const Complex L = dirichlet_L(s, chi);
    return CompletedValue{L, pi_pow * sign / fact * ratio};
  }

  const Complex L = dirichlet_L(s, chi);
  return CompletedValue{L, pi_pow * gamma(w) * L};
}

double lambda_equation_residual(Complex s, const DirichletCharacter& chi) {
  DirichletCharacter conj_chi = chi;
  for (auto& v : conj_chi.values) v = std::conj(v);
  const GaussData g = gauss_sum(chi);
  const Complex lhs = completed_lambda(s, chi).completed;
  const Complex rhs = g.epsilon *
                      std::exp((0.5 - s) * std::log((double)chi.modulus)) *
                      completed_lambda(1.0 - s, conj_chi).completed;
  return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Families.
// ---------------------------------------------------------------------------

Family Family::zeta_family() { return Family(); }

Family Family::quadratic(DirichletCharacter chi) {
  if (!chi.primitive || chi.is_trivial() || !chi.is_real())
    throw unsupported_family_error(
        "Family::quadratic: need a real primitive nontrivial character");
  Family f;
  // Recover the index for a stable label.
  for (std::uint32_t idx = 0; idx < character_count(chi.modulus); ++idx) {
    DirichletCharacter cand = make_character(chi.modulus, idx);
    bool same = true;
    for (std::uint32_t n = 0; n < chi.modulus && same; ++n)
      if (std::abs(cand.values[n] - chi.values[n]) > 1e-12) same = false;
    if (same) {
      f.index_ = idx;
      break;
    }
  }
  f.chi_ = std::move(chi);
  return f;
}

Family Family::parse(const std::string& label) {
  if (label == "zeta") return zeta_family();
  if (label.rfind("chi", 0) == 0) {
    const auto dot = label.find('.');
    if (dot != std::string::npos) {
      const std::uint32_t q = (std::uint32_t)std::stoul(label.substr(3, dot - 3));
      const std::uint32_t idx = (std::uint32_t)std::stoul(label.substr(dot + 1));
      return quadratic(make_character(q, idx));
    }
  }
  throw domain_violation("Family::parse: unknown family label '" + label + "'");
}

std::string Family::label() const {
  if (is_zeta()) return "zeta";
  return "chi" + std::to_string(chi_->modulus) + "." + std::to_string(index_);
}

Complex Family::completed(Complex s) const {
  if (is_zeta()) return xi(s).completed;
  return completed_lambda(s, *chi_).completed;
}

Complex Family::value(Complex s) const {
  if (is_zeta()) return zeta(s);
  return dirichlet_L(s, *chi_);
}

double Family::counting_main_term(double T) const {
  const double q = is_zeta() ? 1.0 : (double)chi_->modulus;
  return T / (2.0 * kPi) * std::log(q * T / (2.0 * kPi)) - T / (2.0 * kPi);
}

double riemann_siegel_theta(double t) {
  const Complex lg = log_gamma(Complex(0.25, 0.5 * t));
  return lg.imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t, const Family& family) {
  if (family.is_zeta()) {
    const Complex z = zeta(Complex(0.5, t));
    const double th = riemann_siegel_theta(t);
    return (std::polar(1.0, th) * z).real();
  }
  const DirichletCharacter& chi = family.chi();
  if (!chi.is_real() || !chi.primitive || chi.is_trivial())
    throw unsupported_family_error(
        "hardy_z: no canonical real rotation for non-quadratic characters");
  const double a = (double)chi.parity;
  const double q = (double)chi.modulus;
  const Complex lg = log_gamma(Complex(0.25 + 0.5 * a, 0.5 * t));
  const double phase = lg.imag() + 0.5 * t * std::log(q / kPi);
  const Complex L = dirichlet_L(Complex(0.5, t), chi);
  return (std::polar(1.0, phase) * L).real();
}

// ---------------------------------------------------------------------------
// Closed-form identities.
// ---------------------------------------------------------------------------

EisensteinCheck eisenstein_l(Complex s, Complex w, std::uint32_t N) {
  const Complex e1 = s + w - 0.5;
  const Complex e2 = s - w + 0.5;
  if (e1.real() <= 1.5 || e2.real() <= 1.5)
    throw convergence_error(
        "eisenstein_l: need Re(s +- (w - 1/2)) > 1.5 for the truncated series");
  Complex series(0.0, 0.0);
  const Complex expo = w - 0.5 - s;
  for (std::uint32_t n = 1; n <= N; ++n) {
    series += sigma_power(n, 1.0 - 2.0 * w) *
              std::exp(expo * std::log((double)n));
  }
  return EisensteinCheck{series, zeta(e1) * zeta(e2)};
}

HasseWeilCheck hasse_weil_p1(Complex s, std::uint32_t prime_limit) {
  if (s.real() <= 2.5)
    throw convergence_error("hasse_weil_p1: need Re s > 2.5");
  Complex prod(1.0, 0.0);
  for (std::uint32_t p : primes_up_to(prime_limit)) {
    const Complex ps = std::exp(-s * std::log((double)p));
    prod /= (1.0 - ps) * (1.0 - (double)p * ps);
  }
  return HasseWeilCheck{prod, zeta(s) * zeta(s - 1.0)};
}

}  // namespace zetalab
