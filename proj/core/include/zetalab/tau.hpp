#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/rational.hpp"

namespace zetalab {

// Ramanujan tau(1..N), exact, from the 24th power of the eta product
// q prod (1 - q^n)^{24}. Uses the sparse cube of Euler's product and three
// dense squarings in 128-bit integers (coefficient growth fits with a wide
// margin for desk-scale N), returned as exact big integers.
std::vector<Integer> ramanujan_tau(std::uint32_t N);

// Hecke check: tau(n) tau(m) = sum over d | gcd(n,m) of d^11 tau(nm/d^2),
// exercised for all coprime pairs with nm <= N. Returns the number of pairs
// verified; throws on any mismatch.
std::uint64_t tau_hecke_check(const std::vector<Integer>& tau);

// Deligne bound |tau(p)| <= 2 p^{11/2}, checked exactly as tau(p)^2 <= 4 p^11
// for every prime p <= N. Returns number of primes checked.
std::uint64_t tau_bound_check(const std::vector<Integer>& tau);

}  // namespace zetalab
