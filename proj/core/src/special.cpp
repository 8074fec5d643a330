#include "zetalab/special.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Lanczos coefficients, g = 7.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

Complex lanczos_series(Complex s) {
  // s here is the shifted variable: Gamma(z) with z = s, valid Re s >= 0.5.
  Complex a(kLanczos[0], 0.0);
  for (int k = 1; k < 9; ++k) a += kLanczos[k] / (s + Complex(k - 1, 0.0));
  return a;
}

// cot(pi s), stable for large |Im s|.
Complex cot_pi(Complex s) {
  if (s.imag() < 0.0) return std::conj(cot_pi(std::conj(s)));
  const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * s);  // |q| <= 1
  return Complex(0.0, 1.0) * (q + 1.0) / (q - 1.0);
}

// log(sin(pi s)) on a branch continuous for Im s >= 0, used by reflection.
Complex log_sin_pi(Complex s) {
  if (s.imag() < 0.0) return std::conj(log_sin_pi(std::conj(s)));
  // sin(pi s) = exp(-i pi s) (q - 1) / (2i), q = exp(2 i pi s).
  const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * s);
  return Complex(0.0, -kPi) * s + std::log((q - 1.0) / Complex(0.0, 2.0));
}

}  // namespace

Complex gamma(Complex s) {
  if (is_nonpositive_integer(s))
    throw pole_error("gamma: pole at non-positive integer s");
  if (s.real() < 0.5) {
    // Reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s).
    return kPi / (std::sin(kPi * s) * gamma(1.0 - s));
  }
  const Complex z = s - 1.0;
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) *
         lanczos_series(s);
}

Complex log_gamma(Complex s) {
  if (is_nonpositive_integer(s))
    throw pole_error("log_gamma: pole at non-positive integer s");
  if (s.real() < 0.5) {
    if (std::abs(s.imag()) < 40.0 && s.real() > -0.5) {
      // One upward shift keeps the argument in the Lanczos region.
      return log_gamma(s + 1.0) - std::log(s);
    }
    return std::log(kPi) - log_sin_pi(s) - log_gamma(1.0 - s);
  }
  const Complex z = s - 1.0;
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_series(s));
}

Complex digamma(Complex s) {
  if (is_nonpositive_integer(s))
    throw pole_error("digamma: pole at non-positive integer s");
  if (s.real() < 0.5) return digamma(1.0 - s) - kPi * cot_pi(s);

  Complex acc(0.0, 0.0);
  while (s.real() < 12.0) {
    acc -= 1.0 / s;
    s += 1.0;
  }
  // Asymptotic series: log s - 1/(2s) - sum B_2k / (2k s^2k).
  const Complex inv = 1.0 / s;
  const Complex inv2 = inv * inv;
  static const double coeff[] = {
      1.0 / 12.0,    -1.0 / 120.0,   1.0 / 252.0,   -1.0 / 240.0,
      1.0 / 132.0,   -691.0 / 32760.0, 1.0 / 12.0,
  };
  Complex sum = std::log(s) - 0.5 * inv;
  Complex p = inv2;
  for (double c : coeff) {
    sum -= c * p;
    p *= inv2;
  }
  return sum + acc;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers.
// ---------------------------------------------------------------------------

namespace {

// Akiyama-Tanigawa recurrence; yields the B(1) = +1/2 convention, flipped
// below to match z/(e^z - 1).
Rational bernoulli_at(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    }
  }
  return a[0];
}

// Tangent numbers T_1..T_m by the integer triangle; B_{2n} recovered from
// B_{2n} = (-1)^{n-1} * 2n * T_n / (4^n (4^n - 1)). Integer-only, so it
// stays fast for the four-digit indices p-adic interpolation needs.
Rational bernoulli_tangent(unsigned n2) {
  const unsigned m = n2 / 2;
  std::vector<Integer> t(m + 1);
  t[1] = 1;
  for (unsigned k = 2; k <= m; ++k) t[k] = t[k - 1] * (k - 1);
  for (unsigned k = 2; k <= m; ++k) {
    for (unsigned j = k; j <= m; ++j) {
      t[j] = t[j - 1] * (j - k) + t[j] * (j - k + 2);
    }
  }
  Integer four_n = pow_integer(4, m);
  Rational b(Integer(2 * m) * t[m], four_n * (four_n - 1));
  b.canonicalize();
  if (m % 2 == 0) b = -b;
  return b;
}

}  // namespace

Rational bernoulli(unsigned n) {
  if (n == 0) return Rational(1);
  if (n == 1) return Rational(-1, 2);
  if (n % 2 == 1) return Rational(0);

  static std::vector<Rational> small_cache;
  static std::once_flag once;
  std::call_once(once, [] {
    small_cache.resize(129);
    for (unsigned k = 0; k <= 128; ++k)
      small_cache[k] = (k % 2 == 1 && k > 1) ? Rational(0) : bernoulli_at(k);
    small_cache[1] = Rational(-1, 2);
  });
  if (n <= 128) return small_cache[n];
  if (n <= 360) return bernoulli_at(n);
  return bernoulli_tangent(n);
}

const std::vector<double>& bernoulli_even_over_factorial(std::size_t count) {
  static std::vector<double> table;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() < count) {
    const unsigned k = (unsigned)table.size() + 1;
    Rational b = bernoulli(2 * k);
    double fact = 1.0;
    for (unsigned j = 2; j <= 2 * k; ++j) fact *= j;
    table.push_back(b.get_d() / fact);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Arithmetic functions.
// ---------------------------------------------------------------------------

int mobius(std::uint64_t n) {
  if (n == 0) throw domain_violation("mobius: n must be >= 1");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

double mangoldt(std::uint64_t n) {
  if (n == 0) throw domain_violation("mangoldt: n must be >= 1");
  if (n == 1) return 0.0;
  std::uint64_t p = 0, m = n;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::log((double)n);  // n prime
  while (m % p == 0) m /= p;
  return (m == 1) ? std::log((double)p) : 0.0;
}

Complex sigma_power(std::uint64_t n, Complex s) {
  if (n == 0) throw domain_violation("sigma_power: n must be >= 1");
  Complex sum(0.0, 0.0);
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += std::exp(s * std::log((double)d));
    const std::uint64_t e = n / d;
    if (e != d) sum += std::exp(s * std::log((double)e));
  }
  return sum;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint32_t p = 2; (std::uint64_t)p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = (std::uint64_t)p * p; q <= limit; q += p)
      composite[q] = true;
  }
  for (std::uint32_t p = 2; p <= limit; ++p)
    if (!composite[p]) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Exponential integral and li.
// ---------------------------------------------------------------------------

namespace {

// Power-series form, |u| not too large.
double ei_series(double u) {
  double sum = 0.0, term = 1.0;
  for (int k = 1; k <= 200; ++k) {
    term *= u / k;
    const double add = term / k;
    sum += add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return kEulerGamma + std::log(std::abs(u)) + sum;
}

// Asymptotic e^u/u * sum k!/u^k, truncated at the smallest term.
double ei_asymptotic(double u) {
  double sum = 1.0, term = 1.0;
  for (int k = 1; k <= 80; ++k) {
    const double next = term * k / u;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return std::exp(u) / u * sum;
}

double adaptive_simpson(double (*f)(double), double a, double b, double fa,
                        double fm, double fb, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

// 1/log t with the simple pole at t = 1 removed; smooth on (0, 10].
double inv_log_regular(double t) {
  if (t == 0.0) return 1.0;
  const double u = t - 1.0;
  if (std::abs(u) < 1e-4) {
    // 1/log(1+u) = 1/u + 1/2 - u/12 + u^2/24 - 19 u^3/720 + ...
    return 0.5 - u / 12.0 + u * u / 24.0 - 19.0 * u * u * u / 720.0;
  }
  return 1.0 / std::log(t) - 1.0 / u;
}

double integrate_inv_log_regular(double a, double b, double tol) {
  if (a == b) return 0.0;
  return adaptive_simpson(inv_log_regular, a, b, inv_log_regular(a),
                          inv_log_regular(0.5 * (a + b)), inv_log_regular(b),
                          tol, 48);
}

}  // namespace

double ei_real(double u) {
  if (u == 0.0) throw domain_violation("ei_real: argument must be nonzero");
  if (std::abs(u) > 40.0) return ei_asymptotic(u);
  return ei_series(u);
}

double li(double x) {
  if (x <= 0.0) throw domain_violation("li: x must be positive");
  if (std::abs(x - 1.0) < 2e-6)
    throw domain_violation("li: logarithmic singularity at x = 1");
  if (x > 10.0) return ei_real(std::log(x));
  // Principal value with the pole subtracted in closed form:
  //   PV int_0^x dt/log t = log|x-1| + int_0^x (1/log t - 1/(t-1)) dt,
  // and the remaining integrand is smooth through t = 1.
  return std::log(std::abs(x - 1.0)) + integrate_inv_log_regular(0.0, x, 1e-13);
}

Complex ei_complex(Complex z) {
  if (z.imag() == 0.0 && z.real() == 0.0)
    throw domain_violation("ei_complex: argument must be nonzero");
  if (z.imag() < 0.0) return std::conj(ei_complex(std::conj(z)));
  if (z.imag() == 0.0) return Complex(ei_real(z.real()), 0.0);

  const double az = std::abs(z);
  if (az <= 25.0) {
    Complex sum(0.0, 0.0), term(1.0, 0.0);
    for (int k = 1; k <= 160; ++k) {
      term *= z / (double)k;
      const Complex add = term / (double)k;
      sum += add;
      if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return kEulerGamma + std::log(z) + sum;  // principal log: continuation
  }                                          // from the positive real axis
  Complex sum(1.0, 0.0), term(1.0, 0.0);
  for (int k = 1; k <= 60; ++k) {
    const Complex next = term * (double)k / z;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return std::exp(z) / z * sum + Complex(0.0, kPi);
}

// ---------------------------------------------------------------------------
// Theta functions.
// ---------------------------------------------------------------------------

double psi_half(double t) {
  if (t <= 0.0) throw domain_violation("psi_half: t must be positive");
  double sum = 0.0, comp = 0.0;
  for (int n = 1;; ++n) {
    const double term = std::exp(-kPi * (double)n * (double)n * t);
    // Kahan summation; series cut when a term drops below 1e-17.
    const double y = term - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    if (term < 1e-17) break;
  }
  return sum;
}

double theta(double t) { return 1.0 + 2.0 * psi_half(t); }

double poisson_check(double sigma) {
  if (sigma <= 0.0) throw domain_violation("poisson_check: sigma must be positive");
  return std::abs(theta(sigma) - theta(1.0 / sigma) / std::sqrt(sigma));
}

}  // namespace zetalab
