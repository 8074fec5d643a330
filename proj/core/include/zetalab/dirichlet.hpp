#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/special.hpp"

namespace zetalab {

// A Dirichlet character mod q, stored as its full value table on residues.
// Characters are built from the cyclic decomposition of (Z/q)^*, so the
// table always satisfies multiplicativity and the unit-modulus invariant.
struct DirichletCharacter {
  std::uint32_t modulus = 1;
  std::vector<Complex> values;  // indexed by n mod q
  int parity = 0;               // 0 even, 1 odd
  std::uint32_t conductor = 1;
  bool primitive = true;

  Complex operator()(std::uint64_t n) const { return values[n % modulus]; }
  bool is_trivial() const;    // principal character
  bool is_real() const;       // quadratic or principal
};

// index enumerates the character group; index 0 is the principal character.
std::uint32_t character_count(std::uint32_t q);  // = phi(q)
DirichletCharacter make_character(std::uint32_t q, std::uint32_t index);

// The conductor-3 character: values (0, 1, -1) on residues (0, 1, 2).
DirichletCharacter chi3();

// The odd character mod 4 (chi(3) = -1).
DirichletCharacter chi4();

// Pointwise product chi1 * conj(chi2) lifted to lcm of the moduli, then
// reduced to the primitive character inducing it.
DirichletCharacter product_character(const DirichletCharacter& chi1,
                                     const DirichletCharacter& chi2_conj);

struct GaussData {
  Complex tau;      // sum of chi(x) e^{2 pi i x / q}
  Complex epsilon;  // root number; |epsilon| = 1 for primitive chi
};

GaussData gauss_sum(const DirichletCharacter& chi);  // requires primitive chi

}  // namespace zetalab
