#include "zetalab/explicit_formulas.hpp"

#include <algorithm>
#include <cmath>

#include "zetalab/errors.hpp"
#include "zetalab/lfun.hpp"

namespace zetalab {

// ---------------------------------------------------------------------------
// PrimeTables.
// ---------------------------------------------------------------------------

PrimeTables::PrimeTables(std::uint32_t limit) : limit_(limit) {
  if (limit < 2) throw domain_violation("PrimeTables: limit must be >= 2");
  std::vector<std::uint32_t> spf(limit + 1, 0);  // smallest prime factor
  mobius_.assign(limit + 1, 0);
  mobius_[1] = 1;
  for (std::uint32_t n = 2; n <= limit; ++n) {
    if (spf[n] == 0) {
      spf[n] = n;
      primes_.push_back(n);
      mobius_[n] = -1;
    }
    for (std::uint32_t p : primes_) {
      if (p > spf[n] || (std::uint64_t)p * n > limit) break;
      spf[p * n] = p;
      mobius_[p * n] = (n % p == 0) ? 0 : -mobius_[n];
    }
  }

  mertens_prefix_.assign(limit + 1, 0);
  pi_prefix_.assign(limit + 1, 0);
  for (std::uint32_t n = 1; n <= limit; ++n) {
    mertens_prefix_[n] = mertens_prefix_[n - 1] + mobius_[n];
    pi_prefix_[n] = pi_prefix_[n - 1] + (n >= 2 && spf[n] == n ? 1 : 0);
  }
  logp_prefix_.reserve(primes_.size() + 1);
  logp_prefix_.push_back(0.0);
  for (std::uint32_t p : primes_)
    logp_prefix_.push_back(logp_prefix_.back() + std::log((double)p));
}

std::uint64_t PrimeTables::pi_count(double x) const {
  if (x < 2.0) return 0;
  if (x > (double)limit_) throw domain_violation("PrimeTables: x beyond sieve limit");
  return pi_prefix_[(std::uint32_t)std::floor(x)];
}

long long PrimeTables::mertens(double x) const {
  if (x < 1.0) return 0;
  if (x > (double)limit_) throw domain_violation("PrimeTables: x beyond sieve limit");
  return mertens_prefix_[(std::uint32_t)std::floor(x)];
}

double PrimeTables::chebyshev_psi(double x) const {
  if (x < 2.0) return 0.0;
  if (x > (double)limit_) throw domain_violation("PrimeTables: x beyond sieve limit");
  // sum of log p over p <= x, plus higher prime powers p^k <= x.
  const std::uint64_t n = pi_count(x);
  double sum = logp_prefix_[n];
  for (std::uint32_t p : primes_) {
    const double lp = std::log((double)p);
    double pk = (double)p * p;
    if (pk > x) break;
    while (pk <= x) {
      sum += lp;
      pk *= (double)p;
    }
  }
  return sum;
}

bool PrimeTables::is_prime_power(double x) const {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9 || r < 2.0) return false;
  return mangoldt((std::uint64_t)r) > 0.0;
}

Rational PrimeTables::pi_weighted(double x) const {
  Rational sum(0);
  for (unsigned n = 1;; ++n) {
    const double root = std::pow(x, 1.0 / n);
    if (root < 2.0) break;
    sum += make_rational((long)pi_count(root), (long)n);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// psi_explicit.
// ---------------------------------------------------------------------------

double zeta_log_derivative_at_zero() {
  const double h = 5e-3;
  const auto z = [](double x) { return zeta(Complex(x, 0.0)).real(); };
  const double d = (z(-2.0 * h) - 8.0 * z(-h) + 8.0 * z(h) - z(2.0 * h)) / (12.0 * h);
  return d / z(0.0);
}

namespace {

void require_zeta_family(const ZeroSet& zeros, const char* who) {
  if (zeros.ordinates.empty())
    throw domain_violation(std::string(who) + ": empty zero set");
  if (!zeros.family.is_zeta())
    throw domain_violation(std::string(who) + ": zeros must be the zeta family");
}

}  // namespace

double psi_explicit(double x, const ZeroSet& zeros, double T) {
  if (x <= 1.0) throw domain_violation("psi_explicit: x must exceed 1");
  require_zeta_family(zeros, "psi_explicit");
  if (T > zeros.certified_height)
    throw domain_violation("psi_explicit: T exceeds the certified height");
  {
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-9 && r >= 2.0 && mangoldt((std::uint64_t)r) > 0.0)
      throw domain_violation("psi_explicit: x is a prime-power jump point");
  }

  const double lx = std::log(x);
  const double sx = std::sqrt(x);
  double zero_sum = 0.0, comp = 0.0;
  for (double g : zeros.ordinates) {
    if (g > T) break;
    // 2 Re x^rho / rho with rho = 1/2 + i gamma.
    const Complex rho(0.5, g);
    const Complex term = std::polar(sx, g * lx) / rho;
    const double y = 2.0 * term.real() - comp;
    const double s = zero_sum + y;
    comp = (s - zero_sum) - y;
    zero_sum = s;
  }
  return x - zero_sum - zeta_log_derivative_at_zero() -
         0.5 * std::log(1.0 - 1.0 / (x * x));
}

// ---------------------------------------------------------------------------
// Riemann's R and the Ramanujan set.
// ---------------------------------------------------------------------------

double riemann_r(double x, unsigned nmax) {
  if (x < 2.0) throw domain_violation("riemann_r: x must be >= 2");
  if (nmax != 0 && (double)nmax < std::log2(x))
    throw domain_violation("riemann_r: nmax below log2 x");
  // sum of mu(n)/n (li(x^{1/n}) - li(2)): the offset integral from 2 makes
  // the terms with x^{1/n} < 2 genuinely vanish, so the truncation at
  // log2 x is exact rather than an approximation.
  const double li2 = li(2.0);
  double sum = 0.0;
  for (unsigned n = 1; n <= (nmax ? nmax : (unsigned)std::log2(x)); ++n) {
    if (std::pow(x, 1.0 / n) < 2.0) break;
    const int mu = mobius(n);
    if (mu == 0) continue;
    sum += (double)mu / n * (li(std::pow(x, 1.0 / n)) - li2);
  }
  return sum;
}

double riemann_r_gram(double x) {
  if (x < 2.0) throw domain_violation("riemann_r_gram: x must be >= 2");
  // Gram form of the full mu/li series: 1 + sum_k (log x)^k/(k k! zeta(k+1)),
  // absolutely convergent; reference route for the truncated R above.
  static std::vector<double> inv_zeta;  // 1/zeta(k+1)
  const double lx = std::log(x);
  double term = 1.0, sum = 1.0;
  for (unsigned k = 1; k < 220; ++k) {
    if (inv_zeta.size() < k)
      inv_zeta.push_back(1.0 / zeta(Complex(k + 1.0, 0.0)).real());
    term *= lx / k;
    const double add = term / k * inv_zeta[k - 1];
    sum += add;
    if (k > lx && std::abs(add) < 1e-15 * std::abs(sum)) break;
  }
  return sum;
}

bool ramanujan_set_test(double x, const PrimeTables& tables) {
  return (std::uint64_t)std::llround(riemann_r(x)) == tables.pi_count(x);
}

// ---------------------------------------------------------------------------
// Riemann's Pi* formula.
// ---------------------------------------------------------------------------

double pi_star_tail_integral(double x) {
  if (x <= 1.0) throw domain_violation("pi_star_tail_integral: x must exceed 1");
  // integral over t in (x, inf) of dt / (t (t^2-1) log t); t = e^u turns it
  // into du / ((e^{2u} - 1) u) which dies like e^{-2u}.
  const double lo = std::log(x);
  const double hi = std::max(lo + 2.0, 15.0);
  const auto f = [](double u) { return 1.0 / (std::expm1(2.0 * u) * u); };
  // Simpson on a fixed fine grid; the integrand is smooth and tiny.
  const int n = 4000;
  const double h = (hi - lo) / n;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) sum += f(lo + i * h) * ((i % 2) ? 4.0 : 2.0);
  return sum * h / 3.0;
}

double pi_star_formula(double x, const ZeroSet& zeros, double T) {
  if (x <= 2.0) throw domain_violation("pi_star_formula: x must exceed 2");
  require_zeta_family(zeros, "pi_star_formula");
  if (T > zeros.certified_height)
    throw domain_violation("pi_star_formula: T exceeds the certified height");
  {
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-9 && r >= 2.0 && mangoldt((std::uint64_t)r) > 0.0)
      throw domain_violation("pi_star_formula: x is a prime-power jump point");
  }

  const double lx = std::log(x);
  double zero_sum = 0.0;
  for (double g : zeros.ordinates) {
    if (g > T) break;
    // li(x^rho) + li(x^{1-rho}) = 2 Re li(x^rho) on the critical line.
    zero_sum += 2.0 * ei_complex(Complex(0.5, g) * lx).real();
  }
  return li(x) - zero_sum + pi_star_tail_integral(x) - std::log(2.0);
}

// ---------------------------------------------------------------------------
// Landau resonance sums.
// ---------------------------------------------------------------------------

Complex landau_sum(double x, const ZeroSet& zeros, double T) {
  if (x <= 1.0) throw domain_violation("landau_sum: x must exceed 1");
  require_zeta_family(zeros, "landau_sum");
  if (T > zeros.certified_height)
    throw domain_violation("landau_sum: T exceeds the certified height");
  const double lx = std::log(x);
  const double sx = std::sqrt(x);
  Complex sum(0.0, 0.0);
  for (double g : zeros.ordinates) {
    if (g >= T) break;
    sum += std::polar(sx, g * lx);
  }
  return sum;
}

double landau_slope(double x, const ZeroSet& zeros,
                    const std::vector<double>& heights) {
  const std::size_t n = heights.size();
  if (n < 2) throw domain_violation("landau_slope: need at least two heights");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double T : heights) {
    const double y = landau_sum(x, zeros, T).real();
    sx += T;
    sy += y;
    sxx += T * T;
    sxy += T * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------
// Delsarte pairing.
// ---------------------------------------------------------------------------

double GaussianTest::operator()(double t) const {
  return std::exp(-t * t / (2.0 * sigma * sigma));
}

double GaussianTest::at_i_half() const {
  return std::exp(1.0 / (8.0 * sigma * sigma));
}

double GaussianTest::fourier(double xi) const {
  return sigma * std::sqrt(2.0 * kPi) *
         std::exp(-2.0 * kPi * kPi * sigma * sigma * xi * xi);
}

namespace {

// integral over R of phi(t) Psi(t) dt with
// Psi(t) = log pi - Re digamma(1/4 + it/2); even integrand. The argument
// 1/4 + it/2 is s/2 on the critical line, i.e. the log-derivative of the
// pi^{-s/2} Gamma(s/2) completion factor.
double archimedean_integral(const GaussianTest& phi) {
  const double L = phi.sigma * 8.7;
  const auto f = [&](double t) {
    const double psi_re = digamma(Complex(0.25, 0.5 * t)).real();
    return phi(t) * (std::log(kPi) - psi_re);
  };
  const int n = 6000;  // smooth integrand; fixed Simpson grid suffices
  const double h = L / n;
  double sum = f(0.0) + f(L);
  for (int i = 1; i < n; ++i) sum += f(i * h) * ((i % 2) ? 4.0 : 2.0);
  return 2.0 * (sum * h / 3.0);
}

}  // namespace

DelsartePairing delsarte_pairing(const GaussianTest& phi, const ZeroSet& zeros,
                                 std::uint32_t prime_limit) {
  require_zeta_family(zeros, "delsarte_pairing");
  const double T = zeros.certified_height;
  if (phi(T) >= 1e-12)
    throw domain_violation(
        "delsarte_pairing: sigma too large for the certified zero height");
  {
    const double tail = mangoldt(2) / std::sqrt((double)prime_limit) *
                        phi.fourier(std::log((double)prime_limit) / (2.0 * kPi));
    if (tail >= 1e-12)
      throw domain_violation("delsarte_pairing: prime limit too small");
  }

  // Guinand-Weil pairing: the pole atoms at +-i/2 enter with sign opposite
  // to the zeros (they come from the pole of zeta, not from its zeros).
  double zsum = 0.0;
  for (double g : zeros.ordinates) zsum += phi(g);
  const double zero_side = 2.0 * kPi * (2.0 * zsum - 2.0 * phi.at_i_half());

  double psum = 0.0;
  for (std::uint32_t n = 2; n <= prime_limit; ++n) {
    const double L = mangoldt(n);
    if (L == 0.0) continue;
    psum += L / std::sqrt((double)n) * phi.fourier(std::log((double)n) / (2.0 * kPi));
  }
  const double prime_side =
      kDelsarteCalibration * (-2.0 * psum - archimedean_integral(phi));

  return DelsartePairing{zero_side, prime_side,
                         std::abs(zero_side - prime_side) / std::abs(zero_side)};
}

// ---------------------------------------------------------------------------
// Cramer partial sums.
// ---------------------------------------------------------------------------

CramerValue cramer_partial(Complex t, const ZeroSet& zeros) {
  require_zeta_family(zeros, "cramer_partial");
  const double v = t.imag();
  if (v < 0.05)
    throw domain_violation("cramer_partial: Im t below the 0.05 threshold");
  const double T = zeros.certified_height;
  if (std::exp(-T * v) >= 1e-14)
    throw convergence_error(
        "cramer_partial: certified height too small for this Im t");

  Complex sum(0.0, 0.0);
  for (double g : zeros.ordinates) sum += std::exp(Complex(0.5, g) * t);
  // Tail: zero density ~ log(g)/2pi per unit height above T.
  const double tail = std::exp(0.5 * t.real()) * std::log(T) * std::exp(-T * v) /
                      (1.0 - std::exp(-v));
  return CramerValue{sum, tail};
}

// ---------------------------------------------------------------------------
// Newton relations for one-frequency finite Dirichlet series.
// ---------------------------------------------------------------------------

double newton_poisson_check(const std::vector<Complex>& coeffs, double lambda,
                            unsigned order) {
  if (lambda <= 0.0)
    throw domain_violation("newton_poisson_check: lambda must be positive");
  if (coeffs.empty() || coeffs[0] != Complex(1.0, 0.0))
    throw domain_violation("newton_poisson_check: leading coefficient must be 1");
  if (order > 30)
    throw domain_violation("newton_poisson_check: order capped at 30");
  const std::size_t d = coeffs.size() - 1;

  // Both recurrences run in extended precision: the power sums reach
  // |alpha|^order and the stated defect budget is absolute.
  using CL = std::complex<long double>;
  std::vector<CL> a(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    a[i] = CL(coeffs[i].real(), coeffs[i].imag());

  // b_m from the power-series log of f(z) = 1 + a_1 z + ... + a_d z^d,
  // z = e^{-lambda s}: -log f = sum b_m z^m.
  std::vector<CL> ell(order + 1, CL(0.0, 0.0));
  for (std::size_t m = 1; m <= order; ++m) {
    CL s = (m <= d) ? (long double)m * a[m] : CL(0.0, 0.0);
    for (std::size_t k = 1; k < m; ++k) {
      if (m - k > d) continue;
      s -= (long double)k * ell[k] * a[m - k];
    }
    ell[m] = s / (long double)m;
  }

  // Power sums of the roots of P(w) = w^d + a_1 w^{d-1} + ... + a_d by
  // Newton's identities.
  std::vector<CL> p(order + 1, CL(0.0, 0.0));
  for (std::size_t m = 1; m <= order; ++m) {
    CL s(0.0, 0.0);
    for (std::size_t i = 1; i < m && i <= d; ++i) s += a[i] * p[m - i];
    if (m <= d) s += (long double)m * a[m];
    p[m] = -s;
  }

  double defect = 0.0;
  for (std::size_t m = 1; m <= order; ++m)
    defect = std::max(defect, (double)std::abs(p[m] + (long double)m * ell[m]));
  return defect;
}

}  // namespace zetalab
