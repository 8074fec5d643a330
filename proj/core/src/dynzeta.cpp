#include "zetalab/dynzeta.hpp"

#include <fstream>

#include "zetalab/errors.hpp"
#include "zetalab/special.hpp"

namespace zetalab {

TransitionMatrix TransitionMatrix::from_rows(const std::vector<std::string>& rows) {
  TransitionMatrix A;
  A.size = rows.size();
  if (A.size == 0) throw format_error("TransitionMatrix: no rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != A.size)
      throw format_error("TransitionMatrix: matrix must be square", (long)i + 1);
    for (char c : rows[i]) {
      if (c != '0' && c != '1')
        throw format_error("TransitionMatrix: entries must be 0 or 1", (long)i + 1);
      A.entries.push_back(c == '1');
    }
  }
  return A;
}

TransitionMatrix TransitionMatrix::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw format_error("TransitionMatrix: cannot open " + path.string());
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  return from_rows(rows);
}

TransitionMatrix TransitionMatrix::identity(std::size_t n) {
  TransitionMatrix A;
  A.size = n;
  A.entries.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) A.entries[i * n + i] = 1;
  return A;
}

TransitionMatrix TransitionMatrix::full_shift(std::size_t n) {
  TransitionMatrix A;
  A.size = n;
  A.entries.assign(n * n, 1);
  return A;
}

TransitionMatrix TransitionMatrix::golden_mean() {
  return from_rows({"11", "10"});
}

std::vector<Integer> periodic_counts(const TransitionMatrix& A, unsigned nmax) {
  if (nmax < 1) throw domain_violation("periodic_counts: nmax must be >= 1");
  const std::size_t l = A.size;
  std::vector<Integer> base(l * l), power(l * l);
  for (std::size_t i = 0; i < l * l; ++i) base[i] = power[i] = (long)A.entries[i];

  std::vector<Integer> counts;
  counts.reserve(nmax);
  auto trace = [&](const std::vector<Integer>& m) {
    Integer t = 0;
    for (std::size_t i = 0; i < l; ++i) t += m[i * l + i];
    return t;
  };
  counts.push_back(trace(power));
  std::vector<Integer> next(l * l);
  for (unsigned n = 2; n <= nmax; ++n) {
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        Integer s = 0;
        for (std::size_t k = 0; k < l; ++k) s += power[i * l + k] * base[k * l + j];
        next[i * l + j] = s;
      }
    }
    power.swap(next);
    counts.push_back(trace(power));
  }
  return counts;
}

namespace {

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Determinant of a matrix of linear polynomials by cofactor expansion;
// fine for the handful-of-states matrices subshifts use.
Poly det_recursive(const std::vector<Poly>& m, std::vector<std::size_t> cols,
                   std::size_t row, std::size_t n) {
  if (cols.size() == 1) return m[row * n + cols[0]];
  Poly acc(1, Rational(0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Poly& pivot = m[row * n + cols[c]];
    bool zero = true;
    for (const auto& q : pivot)
      if (q != 0) zero = false;
    if (zero) continue;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != c) rest.push_back(cols[k]);
    Poly sub = det_recursive(m, rest, row + 1, n);
    Poly term = poly_mul(pivot, sub);
    if (c % 2 == 1)
      for (auto& q : term) q = -q;
    if (acc.size() < term.size()) acc.resize(term.size(), Rational(0));
    for (std::size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
  }
  return acc;
}

}  // namespace

std::vector<Rational> char_det(const TransitionMatrix& A) {
  const std::size_t l = A.size;
  std::vector<Poly> m(l * l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      Poly e = {Rational(i == j ? 1 : 0), Rational(-(long)A.at(i, j))};
      m[i * l + j] = e;  // (i==j) - t a_ij
    }
  }
  std::vector<std::size_t> cols(l);
  for (std::size_t i = 0; i < l; ++i) cols[i] = i;
  Poly det = det_recursive(m, cols, 0, l);
  det.resize(l + 1, Rational(0));
  return det;
}

RationalityCheck zeta_rationality(const TransitionMatrix& A, unsigned order) {
  if (order > 64) throw domain_violation("zeta_rationality: order capped at 64");
  const auto counts = periodic_counts(A, order == 0 ? 1 : order);

  std::vector<Rational> logc(order + 1, Rational(0));
  for (unsigned j = 1; j <= order; ++j)
    logc[j] = Rational(counts[j - 1]) / Rational((unsigned long)j);
  ExactSeries series = ExactSeries(std::move(logc)).exp();

  std::vector<Rational> det = char_det(A);
  det.resize(order + 1, Rational(0));
  ExactSeries rational = ExactSeries(std::move(det)).inverse();

  const bool equal = (series == rational);
  return RationalityCheck{std::move(series), std::move(rational), equal};
}

WeilP1 weil_p1(std::uint64_t p, unsigned order) {
  if (!is_prime(p)) throw domain_violation("weil_p1: p must be prime");
  if (order > 64) throw domain_violation("weil_p1: order capped at 64");

  // Point counts over F_{p^k}: N_k = p^k + 1.
  std::vector<Rational> logc(order + 1, Rational(0));
  Integer pk = 1;
  for (unsigned k = 1; k <= order; ++k) {
    pk *= (long)p;
    logc[k] = Rational(pk + 1) / Rational((unsigned long)k);
  }
  ExactSeries z = ExactSeries(std::move(logc)).exp();

  // 1/((1-t)(1-pt)) has coefficients (p^{n+1} - 1)/(p - 1).
  std::vector<Rational> closed(order + 1);
  Integer pn1 = (long)p;  // p^{n+1} at n = 0
  for (unsigned n = 0; n <= order; ++n) {
    closed[n] = Rational(pn1 - 1, Integer((long)p) - 1);
    closed[n].canonicalize();
    pn1 *= (long)p;
  }
  ExactSeries cf{std::move(closed)};

  // Functional equation as an identity of polynomials:
  // D(t) = (1-t)(1-pt) must equal p t^2 D(1/(pt)).
  const Rational d[3] = {Rational(1), Rational(-1 - (long)p),
                         Rational((long)p)};
  bool feq = true;
  for (unsigned k = 0; k <= 2; ++k) {
    // coefficient of t^{2-k} in p t^2 D(1/(pt)) is d_k p^{1-k}
    Rational lhs = d[2 - k];
    Rational rhs = d[k] * pow_rational(Rational((long)p), 1 - (long)k);
    if (lhs != rhs) feq = false;
  }

  WeilP1 out{std::move(z), std::move(cf), false, feq, {1, 0, 1},
             {Integer(1), Integer((long)p)}};
  out.series_matches_closed_form = (out.zeta_series == out.closed_form);
  return out;
}

}  // namespace zetalab
