#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/rational.hpp"

namespace zetalab {

struct PAdicValuationReport {
  std::uint64_t p;
  Rational value;
  long valuation;   // ord_p(value); meaningless when value == 0
  bool pass;
};

// Kummer congruence: for even m, n with m = n mod (p-1) p^a and
// m, n != 0 mod (p-1), the difference
//   (1 - p^{m-1}) B_m / m - (1 - p^{n-1}) B_n / n
// has p-adic valuation >= a + 1. Exact rational arithmetic throughout.
PAdicValuationReport kummer_check(std::uint64_t p, unsigned m, unsigned n,
                                  unsigned a);

// Interpolation sequence for the branch u (odd residue mod p-1): arguments
// s_k = 1 - n_k with s_k = u mod (p-1), realized as n_k = n0 + (p-1) p^k
// with n0 even. Values are the Euler-factor-modified
//   (1 - p^{n_k - 1}) zeta(1 - n_k),
// and the reports carry the p-valuations of consecutive differences, which
// must strictly increase (the Cauchy property of the p-adic limit).
struct KlInterpolation {
  std::vector<unsigned> exponents;            // n_k
  std::vector<Rational> values;               // modified zeta(1 - n_k)
  std::vector<PAdicValuationReport> steps;    // consecutive differences
  bool cauchy;                                // valuations strictly increase
};

KlInterpolation kl_interpolate(std::uint64_t p, unsigned u, unsigned kmax);

}  // namespace zetalab
