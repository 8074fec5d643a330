#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "zetalab/dirichlet.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab {

enum class Normalization { kRaw, kDensity };

struct Histogram {
  std::vector<double> bin_edges;        // size counts.size() + 1, ascending
  std::vector<std::uint64_t> counts;
  std::uint64_t total_pairs = 0;
  Normalization normalization = Normalization::kRaw;

  std::size_t bins() const { return counts.size(); }
  double bin_width() const { return bin_edges[1] - bin_edges[0]; }
  double center(std::size_t i) const {
    return 0.5 * (bin_edges[i] + bin_edges[i + 1]);
  }
  // count / (total_pairs * width); integrates to at most 1.
  double density(std::size_t i) const;
  // index of the bin containing x, or npos
  std::size_t locate(double x) const;
};

void histogram_to_csv(const Histogram& h, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Pair correlation against the GUE density 1 - (sin pi x / pi x)^2.
//
// Differences are rescaled by the local mean zero spacing at the pair
// (factor log(mid/2pi)/2pi), the finite-height reading of the asymptotic
// window; with it the empirical density has unit plateau at desk heights.
// ---------------------------------------------------------------------------

enum class PairScaling {
  kLocalDensity,  // (gamma - gamma') log(mid/2pi) / 2pi
  kGlobalLogT,    // (gamma - gamma') log T / 2pi
};

struct PairCorrelation {
  Histogram histogram;            // raw pair counts per bin on [0, alpha_max)
  std::vector<double> density;    // counts / (N(T) * bin width)
  std::vector<double> gue;        // reference curve at bin centers
};

PairCorrelation pair_correlation(const ZeroSet& zeros, double T,
                                 double alpha_max, double bin_width,
                                 PairScaling scaling = PairScaling::kLocalDensity);

// ---------------------------------------------------------------------------
// Raw delta histograms (gamma_A - gamma_B, both signs, no normalization).
// ---------------------------------------------------------------------------

Histogram delta_histogram(const ZeroSet& zeros_a, const ZeroSet& zeros_b,
                          double range_lo, double range_hi, double bin_width);

struct DipReport {
  double location;
  double z_score;       // negative means deficit
  unsigned local_window;
};

// z-score of the bin containing `location` against `window` flanking bins on
// each side (center excluded). Throws on a degenerate (zero variance) flank.
DipReport dip_score(const Histogram& h, double location, unsigned window);

// Zeros of L(s, chi1 * conj chi2) up to T: the predicted dip locations for
// the (chi1, chi2) delta histogram.
std::vector<double> ene_dip_prediction(const DirichletCharacter& chi1,
                                       const DirichletCharacter& chi2, double T);

}  // namespace zetalab
