#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/rational.hpp"
#include "zetalab/special.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab {

// ---------------------------------------------------------------------------
// Sieved prime-side data. pi, Mertens and psi come from one linear sieve and
// agree with the scalar functions by construction (tested, not assumed).
// ---------------------------------------------------------------------------

class PrimeTables {
 public:
  explicit PrimeTables(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  std::uint64_t pi_count(double x) const;   // #{p <= x}
  long long mertens(double x) const;        // sum of mu(n), n <= x
  double chebyshev_psi(double x) const;     // sum of Lambda(n), n <= x
  int mobius_at(std::uint32_t n) const { return mobius_[n]; }
  bool is_prime_power(double x) const;      // true iff x is integral p^m

  // Pi(x) = sum over n of (1/n) pi(x^{1/n}), exact rational.
  Rational pi_weighted(double x) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> primes_;
  std::vector<int8_t> mobius_;
  std::vector<long long> mertens_prefix_;
  std::vector<std::uint32_t> pi_prefix_;
  std::vector<double> logp_prefix_;  // cumulative log p over primes
};

// ---------------------------------------------------------------------------
// Explicit formulas: prime side against zero side.
// ---------------------------------------------------------------------------

// zeta'(0)/zeta(0) by a five-point stencil on the Euler-Maclaurin evaluator
// (comes out as log 2pi; kept numeric so the test is not circular).
double zeta_log_derivative_at_zero();

// x - sum over zeros of 2 Re x^rho/rho - zeta'(0)/zeta(0) - log(1-x^-2)/2.
// x must not be a prime power; zeros must be the zeta family and nonempty.
double psi_explicit(double x, const ZeroSet& zeros, double T);

// Riemann's prime-counting approximation: sum over n of
// mu(n)/n (li(x^{1/n}) - li(2)). With the offset integral the terms below
// x^{1/n} = 2 vanish and the series is a finite sum; nmax (0 = automatic)
// must cover log2 x when given.
double riemann_r(double x, unsigned nmax = 0);

// Gram form of the full (non-offset) mu/li series; reference route.
double riemann_r_gram(double x);

// round(R(x)) == pi(x)?
bool ramanujan_set_test(double x, const PrimeTables& tables);

// li(x) - sum over gamma > 0 of 2 Re li(x^rho) + tail integral - log 2.
double pi_star_formula(double x, const ZeroSet& zeros, double T);

// The convergent tail integral of the formula above.
double pi_star_tail_integral(double x);

// Sum over 0 < gamma < T of x^{1/2 + i gamma}.
Complex landau_sum(double x, const ZeroSet& zeros, double T);

// Least-squares slope of Re landau_sum(x, T) against T over sample heights.
double landau_slope(double x, const ZeroSet& zeros,
                    const std::vector<double>& heights);

// ---------------------------------------------------------------------------
// Distributional pairing against a Gaussian test function.
// ---------------------------------------------------------------------------

struct GaussianTest {
  double sigma;  // phi(t) = exp(-t^2 / (2 sigma^2))

  double operator()(double t) const;
  double at_i_half() const;          // phi(i/2), real
  double fourier(double xi) const;   // integral of phi e^{-2 pi i xi t}
};

// Frozen calibration for the pairing convention (hat phi as above); the
// high-precision run balances the sides with constant 1.
inline constexpr double kDelsarteCalibration = 1.0;

struct DelsartePairing {
  double zero_side;
  double prime_side;
  double relative_defect;
};

DelsartePairing delsarte_pairing(const GaussianTest& phi, const ZeroSet& zeros,
                                 std::uint32_t prime_limit);

// ---------------------------------------------------------------------------
// Cramer partial sums and the Newton relations for finite Dirichlet series.
// ---------------------------------------------------------------------------

struct CramerValue {
  Complex value;
  double tail_bound;
};

// Sum over gamma > 0 of e^{rho t}, Im t >= 0.05, truncated at the certified
// height with a geometric tail bound attached.
CramerValue cramer_partial(Complex t, const ZeroSet& zeros);

// For f(s) = 1 + sum a_j e^{-j lambda s}: the series coefficients b_m of
// -log f must satisfy m b_m = p_m, the power sums of the roots of the
// companion polynomial. coeffs lists (1, a_1, ..., a_d); returns max defect
// over m <= order.
double newton_poisson_check(const std::vector<Complex>& coeffs, double lambda,
                            unsigned order);

}  // namespace zetalab
