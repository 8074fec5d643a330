#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "zetalab/lfun.hpp"

namespace zetalab {

// Critical-line zeros of one family, positive ordinates only; the four-fold
// symmetric set {rho, 1-rho, conj rho, 1-conj rho} is the consumer's
// interpretation rule.
struct ZeroSet {
  Family family = Family::zeta_family();
  std::vector<double> ordinates;      // strictly increasing, > 0
  double certified_height = 0.0;
  double refinement_tolerance = 0.0;

  std::size_t count_below(double T) const;
};

struct ZeroCount {
  std::uint64_t count;     // argument-principle count for 0 < Im rho < T
  double main_term;        // Riemann-von Mangoldt main term
};

// Zeros with 0 < ordinate < T by the argument variation of the completed
// function over the rectangle [-1, 2] x [0, T] (evaluated through the
// reflection/conjugation symmetries, so only the right edge and half the
// top edge are tracked).
ZeroCount count_zeros(double T, const Family& family);

// Sign-change scan of hardy_z refined by bisection, certified against
// count_zeros; the grid is halved on a count mismatch (up to 12 times).
ZeroSet find_zeros(double T, const Family& family, unsigned threads = 0);

// Cache format: UTF-8 CSV, header
//   family,ordinate,tolerance,certified_height,format=zetalab-zeros-v1
// followed by one metadata row with an empty ordinate column (so empty sets
// round-trip), then one row per ordinate at 17 significant digits.
void save_zeros(const ZeroSet& zs, const std::filesystem::path& path);
ZeroSet load_zeros(const std::filesystem::path& path);

}  // namespace zetalab
