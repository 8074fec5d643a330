#include "zetalab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "zetalab/errors.hpp"

namespace zetalab {

double Histogram::density(std::size_t i) const {
  if (total_pairs == 0) return 0.0;
  return (double)counts[i] / ((double)total_pairs * bin_width());
}

std::size_t Histogram::locate(double x) const {
  if (x < bin_edges.front() || x >= bin_edges.back()) return (std::size_t)-1;
  const auto it = std::upper_bound(bin_edges.begin(), bin_edges.end(), x);
  return (std::size_t)(it - bin_edges.begin()) - 1;
}

void histogram_to_csv(const Histogram& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw format_error("histogram_to_csv: cannot open " + path.string());
  out << "bin_lo,bin_hi,count,density\n";
  char buf[128];
  for (std::size_t i = 0; i < h.bins(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%llu,%.17g\n", h.bin_edges[i],
                  h.bin_edges[i + 1], (unsigned long long)h.counts[i],
                  h.density(i));
    out << buf;
  }
}

PairCorrelation pair_correlation(const ZeroSet& zeros, double T,
                                 double alpha_max, double bin_width,
                                 PairScaling scaling) {
  if (zeros.certified_height < T)
    throw domain_violation("pair_correlation: zeros not certified to T");
  if (bin_width <= 0.0 || bin_width > 0.1)
    throw domain_violation("pair_correlation: bin width must be in (0, 0.1]");
  if (alpha_max <= 0.0 || alpha_max > 5.0)
    throw domain_violation("pair_correlation: alpha_max must be in (0, 5]");

  std::vector<double> gs;
  for (double g : zeros.ordinates) {
    if (g < T) gs.push_back(g);
  }
  const std::size_t n = gs.size();
  if (n < 500)
    throw domain_violation("pair_correlation: need at least 500 zeros");

  const std::size_t nbins = (std::size_t)std::ceil(alpha_max / bin_width - 1e-12);
  Histogram h;
  h.bin_edges.resize(nbins + 1);
  for (std::size_t i = 0; i <= nbins; ++i) h.bin_edges[i] = i * bin_width;
  h.counts.assign(nbins, 0);
  h.total_pairs = (std::uint64_t)n * (n - 1);
  h.normalization = Normalization::kRaw;

  const double global_scale = std::log(T) / (2.0 * kPi);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double delta = gs[j] - gs[i];
      const double scale =
          (scaling == PairScaling::kLocalDensity)
              ? std::log(0.5 * (gs[i] + gs[j]) / (2.0 * kPi)) / (2.0 * kPi)
              : global_scale;
      const double x = delta * scale;
      if (x >= alpha_max + bin_width) break;  // deltas only grow with j
      const std::size_t bin = h.locate(x);
      if (bin != (std::size_t)-1) ++h.counts[bin];
    }
  }

  PairCorrelation pc;
  pc.density.resize(nbins);
  pc.gue.resize(nbins);
  for (std::size_t i = 0; i < nbins; ++i) {
    pc.density[i] = (double)h.counts[i] / ((double)n * bin_width);
    const double x = h.center(i);
    const double sc = (x == 0.0) ? 1.0 : std::sin(kPi * x) / (kPi * x);
    pc.gue[i] = 1.0 - sc * sc;
  }
  pc.histogram = std::move(h);
  return pc;
}

Histogram delta_histogram(const ZeroSet& zeros_a, const ZeroSet& zeros_b,
                          double range_lo, double range_hi, double bin_width) {
  if (zeros_a.ordinates.empty() || zeros_b.ordinates.empty())
    throw domain_violation("delta_histogram: empty zero set");
  if (bin_width <= 0.0) throw domain_violation("delta_histogram: bin width <= 0");
  if (range_hi <= range_lo)
    throw domain_violation("delta_histogram: empty range");

  const std::vector<double>& a = zeros_a.ordinates;
  const std::vector<double>& b = zeros_b.ordinates;
  const bool same = (&zeros_a == &zeros_b) ||
                    (zeros_a.family.label() == zeros_b.family.label() &&
                     a.size() == b.size() && a == b);

  const std::size_t nbins =
      (std::size_t)std::ceil((range_hi - range_lo) / bin_width - 1e-12);
  Histogram h;
  h.bin_edges.resize(nbins + 1);
  for (std::size_t i = 0; i <= nbins; ++i)
    h.bin_edges[i] = range_lo + i * bin_width;
  h.counts.assign(nbins, 0);
  h.total_pairs =
      (std::uint64_t)a.size() * b.size() - (same ? (std::uint64_t)a.size() : 0);
  h.normalization = Normalization::kRaw;

  // delta = a_i - b_j lands in [lo, hi) iff b_j in (a_i - hi, a_i - lo].
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double lo_b = a[i] - h.bin_edges.back();
    const double hi_b = a[i] - range_lo;
    auto it = std::upper_bound(b.begin(), b.end(), lo_b);
    for (; it != b.end() && *it <= hi_b; ++it) {
      if (same && *it == a[i]) continue;
      const std::size_t bin = h.locate(a[i] - *it);
      if (bin != (std::size_t)-1) ++h.counts[bin];
    }
  }
  return h;
}

DipReport dip_score(const Histogram& h, double location, unsigned window) {
  if (window < 3) throw domain_violation("dip_score: window must be >= 3");
  const std::size_t c = h.locate(location);
  if (c == (std::size_t)-1)
    throw domain_violation("dip_score: location outside histogram range");
  if (c < window || c + window >= h.bins())
    throw domain_violation("dip_score: not enough flanking bins");

  double mean = 0.0;
  for (std::size_t i = c - window; i <= c + window; ++i) {
    if (i == c) continue;
    mean += (double)h.counts[i];
  }
  mean /= (double)(2 * window);
  double var = 0.0;
  for (std::size_t i = c - window; i <= c + window; ++i) {
    if (i == c) continue;
    const double d = (double)h.counts[i] - mean;
    var += d * d;
  }
  var /= (double)(2 * window - 1);
  if (var == 0.0)
    throw domain_violation("dip_score: degenerate flank (zero variance)");
  return DipReport{location, ((double)h.counts[c] - mean) / std::sqrt(var),
                   window};
}

std::vector<double> ene_dip_prediction(const DirichletCharacter& chi1,
                                       const DirichletCharacter& chi2, double T) {
  const DirichletCharacter prod = product_character(chi1, chi2);
  Family family = Family::zeta_family();
  if (prod.modulus > 1) {
    if (!prod.is_real())
      throw unsupported_family_error(
          "ene_dip_prediction: product character is not quadratic or trivial");
    family = Family::quadratic(prod);
  }
  return find_zeros(T, family).ordinates;
}

}  // namespace zetalab
