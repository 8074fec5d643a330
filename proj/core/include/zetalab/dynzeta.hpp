#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "zetalab/rational.hpp"
#include "zetalab/series.hpp"

namespace zetalab {

// 0/1 transition matrix of a subshift of finite type.
struct TransitionMatrix {
  std::size_t size = 0;
  std::vector<std::uint8_t> entries;  // row major

  std::uint8_t at(std::size_t i, std::size_t j) const {
    return entries[i * size + j];
  }
  static TransitionMatrix from_rows(const std::vector<std::string>& rows);
  static TransitionMatrix load(const std::filesystem::path& path);
  static TransitionMatrix identity(std::size_t n);
  static TransitionMatrix full_shift(std::size_t n);
  static TransitionMatrix golden_mean();  // [[1,1],[1,0]]
};

// Exact periodic-point counts N_n = Tr A^n for n = 1..nmax.
std::vector<Integer> periodic_counts(const TransitionMatrix& A, unsigned nmax);

// det(I - tA) as an exact polynomial in t (cofactor expansion, independent
// of the trace route).
std::vector<Rational> char_det(const TransitionMatrix& A);

struct RationalityCheck {
  ExactSeries series_form;    // exp(sum Tr A^j / j t^j)
  ExactSeries rational_form;  // 1 / det(I - tA) expanded
  bool equal;
};

RationalityCheck zeta_rationality(const TransitionMatrix& A, unsigned order);

// The projective-line check over F_p: point counts p^k + 1, closed form
// 1/((1-t)(1-pt)), functional equation Z(1/(pt)) = p t^2 Z(t), and the
// inverse-root moduli {1, p}.
struct WeilP1 {
  ExactSeries zeta_series;         // from the point counts
  ExactSeries closed_form;         // expanded 1/((1-t)(1-pt))
  bool series_matches_closed_form;
  bool functional_equation_holds;  // with E = 2, sign +
  unsigned betti[3];               // degrees of P0, P1, P2
  Integer inverse_root_moduli[2];  // of P0 and P2: {1, p}
};

WeilP1 weil_p1(std::uint64_t p, unsigned order);

}  // namespace zetalab
