#include "zetalab/dirichlet.hpp"

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "zetalab/errors.hpp"

using namespace zetalab;

TEST_CASE("chi3 is the pinned table") {
  const DirichletCharacter chi = chi3();
  CHECK(chi.modulus == 3);
  CHECK(std::abs(chi.values[0]) == 0.0);
  CHECK(chi.values[1] == Complex(1.0, 0.0));
  CHECK(chi.values[2] == Complex(-1.0, 0.0));
  CHECK(chi.parity == 1);
  CHECK(chi.conductor == 3);
  CHECK(chi.primitive);
}

TEST_CASE("mod-4 odd character and mod-1 collapse") {
  const DirichletCharacter c4 = chi4();
  CHECK(c4.values[3] == Complex(-1.0, 0.0));
  CHECK(c4.parity == 1);
  const DirichletCharacter one = make_character(1, 0);
  CHECK(one.values[0] == Complex(1.0, 0.0));
  CHECK(one.is_trivial());
}

TEST_CASE("character invariants across moduli") {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 12u, 15u, 16u, 21u, 24u}) {
    const std::uint32_t n_chars = character_count(q);
    for (std::uint32_t idx = 0; idx < n_chars; ++idx) {
      const DirichletCharacter chi = make_character(q, idx);
      // zero exactly off the units
      for (std::uint32_t n = 0; n < q; ++n) {
        if (std::gcd(n, q) != 1) {
          CHECK(std::abs(chi.values[n]) == 0.0);
        } else {
          CHECK(std::abs(std::abs(chi.values[n]) - 1.0) < 1e-12);
        }
      }
      // multiplicativity
      for (std::uint32_t a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        for (std::uint32_t b = a; b < q; ++b) {
          if (std::gcd(b, q) != 1) continue;
          CHECK(std::abs(chi(a * b) - chi(a) * chi(b)) < 1e-11);
        }
      }
      // parity matches chi(-1)
      const Complex want = (chi.parity == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
      CHECK(std::abs(chi.values[q - 1] - want) < 1e-11);
    }
  }
}

TEST_CASE("orthogonality validates the tables") {
  for (std::uint32_t q : {5u, 8u, 12u, 15u}) {
    const std::uint32_t n_chars = character_count(q);
    std::vector<DirichletCharacter> chars;
    for (std::uint32_t idx = 0; idx < n_chars; ++idx)
      chars.push_back(make_character(q, idx));
    for (std::uint32_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      for (std::uint32_t b = 1; b < q; ++b) {
        if (std::gcd(b, q) != 1) continue;
        Complex sum(0.0, 0.0);
        for (const auto& chi : chars) sum += chi(a) * std::conj(chi(b));
        const double want = (a == b) ? (double)n_chars : 0.0;
        CHECK(std::abs(sum - Complex(want, 0.0)) <= 1e-12 * n_chars);
      }
    }
  }
}

TEST_CASE("gauss sums and root numbers") {
  const GaussData g4 = gauss_sum(chi4());
  CHECK(std::abs(g4.tau - Complex(0.0, 2.0)) < 1e-12);
  CHECK(std::abs(g4.epsilon - Complex(1.0, 0.0)) < 1e-12);

  const GaussData g3 = gauss_sum(chi3());
  CHECK(std::abs(g3.epsilon - Complex(1.0, 0.0)) < 1e-12);

  for (std::uint32_t idx = 1; idx < character_count(5); ++idx) {
    const GaussData g = gauss_sum(make_character(5, idx));
    CHECK(std::abs(std::abs(g.epsilon) - 1.0) < 1e-12);
  }

  // Non-primitive characters are rejected.
  for (std::uint32_t idx = 0; idx < character_count(6); ++idx) {
    const DirichletCharacter chi = make_character(6, idx);
    if (!chi.primitive) CHECK_THROWS_AS((void)gauss_sum(chi), domain_violation);
  }
  CHECK_THROWS_AS((void)make_character(5, 4), domain_violation);
}

TEST_CASE("product characters reduce to the inducing primitive") {
  const DirichletCharacter c3 = chi3();
  const DirichletCharacter trivial = make_character(1, 0);
  // chi3 * conj(chi3) is the trivial character.
  CHECK(product_character(c3, c3).modulus == 1);
  // chi3 * conj(1) is chi3 itself.
  const DirichletCharacter p = product_character(c3, trivial);
  CHECK(p.modulus == 3);
  CHECK(std::abs(p.values[2] - Complex(-1.0, 0.0)) < 1e-12);
}
