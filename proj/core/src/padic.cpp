#include "zetalab/padic.hpp"

#include "zetalab/errors.hpp"
#include "zetalab/lfun.hpp"
#include "zetalab/special.hpp"

namespace zetalab {

namespace {

Rational euler_modified_value(std::uint64_t p, unsigned n) {
  // (1 - p^{n-1}) zeta(1-n), exact.
  const Rational factor = Rational(1) - Rational(pow_integer((long)p, n - 1));
  return factor * zeta_negative(n);
}

}  // namespace

PAdicValuationReport kummer_check(std::uint64_t p, unsigned m, unsigned n,
                                  unsigned a) {
  if (p < 3 || !is_prime(p))
    throw domain_violation("kummer_check: p must be an odd prime");
  if (m % 2 != 0 || n % 2 != 0)
    throw domain_violation("kummer_check: m and n must be even");
  if (m % (p - 1) == 0 || n % (p - 1) == 0)
    throw domain_violation("kummer_check: m, n must not vanish mod p-1");
  Integer modulus = Integer((long)(p - 1)) * pow_integer((long)p, a);
  if ((Integer(m) - Integer(n)) % modulus != 0)
    throw domain_violation("kummer_check: m != n mod (p-1) p^a");

  const Rational diff = euler_modified_value(p, m) - euler_modified_value(p, n);
  PAdicValuationReport report{p, diff, 0, false};
  if (diff == 0) {
    report.valuation = 1 << 30;  // exact zero: infinite valuation
    report.pass = true;
    return report;
  }
  report.valuation = p_valuation(diff, p);
  report.pass = report.valuation >= (long)(a + 1);
  return report;
}

KlInterpolation kl_interpolate(std::uint64_t p, unsigned u, unsigned kmax) {
  if (p < 3 || !is_prime(p))
    throw domain_violation("kl_interpolate: p must be an odd prime");
  if (u % 2 == 0)
    throw domain_violation(
        "kl_interpolate: even branch vanishes identically (zeta_{p,u} = 0)");
  if (u >= p - 1) u %= (unsigned)(p - 1);

  // Arguments s_k = 1 - n_k must sit in the residue class u mod (p-1),
  // so n_k = 1 - u mod (p-1); with u odd these n_k are even and the
  // Bernoulli values are nonzero.
  unsigned n0 = (unsigned)(((long)1 - (long)u) % (long)(p - 1));
  n0 = (unsigned)((n0 + (p - 1)) % (p - 1));
  if (n0 < 2) n0 += (unsigned)(p - 1);

  KlInterpolation out;
  unsigned long pk = 1;
  for (unsigned k = 0; k <= kmax; ++k) {
    const unsigned nk = n0 + (unsigned)((p - 1) * pk);
    out.exponents.push_back(nk);
    out.values.push_back(euler_modified_value(p, nk));
    pk *= p;
  }

  out.cauchy = true;
  long prev = -(1L << 30);
  for (unsigned k = 0; k + 1 <= kmax; ++k) {
    const Rational diff = out.values[k + 1] - out.values[k];
    PAdicValuationReport step{p, diff, 0, false};
    if (diff == 0) {
      step.valuation = 1 << 30;
      step.pass = true;
    } else {
      step.valuation = p_valuation(diff, p);
      step.pass = step.valuation > prev;
    }
    if (!step.pass) out.cauchy = false;
    prev = step.valuation;
    out.steps.push_back(step);
  }
  return out;
}

}  // namespace zetalab
