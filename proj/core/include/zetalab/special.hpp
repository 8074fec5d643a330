#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zetalab/rational.hpp"

namespace zetalab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLog2Pi = 1.83787706640934548356;

// ---------------------------------------------------------------------------
// Gamma family. Lanczos approximation on the right half plane, reflection
// elsewhere; log_gamma stays on the analytic branch for Re s > 0, which is
// all the completed L-functions need.
// ---------------------------------------------------------------------------

Complex gamma(Complex s);      // throws pole_error at 0, -1, -2, ...
Complex log_gamma(Complex s);  // continuous branch away from (-inf, 0]
Complex digamma(Complex s);    // Gamma'/Gamma, throws pole_error as above

// ---------------------------------------------------------------------------
// Bernoulli numbers of z/(e^z - 1); B(1) = -1/2, B(2k+1) = 0 for k >= 1.
// ---------------------------------------------------------------------------

Rational bernoulli(unsigned n);

// B_{2k}/(2k)! as doubles, k = 1..count; shared by the Euler-Maclaurin cores.
const std::vector<double>& bernoulli_even_over_factorial(std::size_t count);

// ---------------------------------------------------------------------------
// Arithmetic functions.
// ---------------------------------------------------------------------------

int mobius(std::uint64_t n);              // n >= 1
double mangoldt(std::uint64_t n);         // log p at prime powers, else 0
Complex sigma_power(std::uint64_t n, Complex s);  // sum of d^s over d | n

bool is_prime(std::uint64_t n);
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// ---------------------------------------------------------------------------
// Logarithmic integral and exponential integral.
//
// li(x) is the principal value of the integral of dt/log t from 0 to x;
// ei_complex continues Ei along straight paths from the positive real axis,
// so li(x^rho) = ei_complex(rho * log x) for the zero sums.
// ---------------------------------------------------------------------------

double li(double x);        // x > 0, x != 1 (throws domain_violation at 1)
double ei_real(double u);   // u != 0
Complex ei_complex(Complex z);

// ---------------------------------------------------------------------------
// Theta functions, convention theta(t) = sum over n in Z of exp(-pi n^2 t),
// so that theta(t) = t^{-1/2} theta(1/t).
// ---------------------------------------------------------------------------

double theta(double t);      // t > 0
double psi_half(double t);   // half sum over n >= 1

// |sum exp(-pi n^2 sigma) - sigma^{-1/2} sum exp(-pi n^2 / sigma)|
double poisson_check(double sigma);

}  // namespace zetalab
