#include "zetalab/series.hpp"

#include <algorithm>

#include "zetalab/errors.hpp"

namespace zetalab {

ExactSeries ExactSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1, Rational(0));
  v[0] = c;
  return ExactSeries(std::move(v));
}

ExactSeries ExactSeries::variable(std::size_t order) {
  std::vector<Rational> v(order + 1, Rational(0));
  if (order >= 1) v[1] = Rational(1);
  return ExactSeries(std::move(v));
}

ExactSeries ExactSeries::truncated(std::size_t order) const {
  std::vector<Rational> v(order + 1, Rational(0));
  for (std::size_t k = 0; k <= order && k < coeff_.size(); ++k) v[k] = coeff_[k];
  return ExactSeries(std::move(v));
}

ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = a[k] + b[k];
  return ExactSeries(std::move(v));
}

ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = a[k] - b[k];
  return ExactSeries(std::move(v));
}

ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      v[i + j] += a[i] * b[j];
    }
  }
  return ExactSeries(std::move(v));
}

bool operator==(const ExactSeries& a, const ExactSeries& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t k = 0; k <= a.order(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

ExactSeries ExactSeries::inverse() const {
  if (coeff_[0] == 0)
    throw domain_violation("ExactSeries::inverse: constant term is zero");
  const std::size_t n = order();
  std::vector<Rational> v(n + 1, Rational(0));
  v[0] = Rational(1) / coeff_[0];
  for (std::size_t k = 1; k <= n; ++k) {
    Rational s(0);
    for (std::size_t j = 1; j <= k; ++j) s += coeff_[j] * v[k - j];
    v[k] = -s / coeff_[0];
  }
  return ExactSeries(std::move(v));
}

ExactSeries ExactSeries::exp() const {
  if (coeff_[0] != 0)
    throw domain_violation("ExactSeries::exp: constant term must be zero");
  const std::size_t n = order();
  std::vector<Rational> h(n + 1, Rational(0));
  h[0] = Rational(1);
  // n h_n = sum_{k=1..n} k u_k h_{n-k}
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s(0);
    for (std::size_t k = 1; k <= m; ++k) {
      if (coeff_[k] == 0) continue;
      s += Rational((unsigned long)k) * coeff_[k] * h[m - k];
    }
    h[m] = s / Rational((unsigned long)m);
  }
  return ExactSeries(std::move(h));
}

ExactSeries ExactSeries::log() const {
  if (coeff_[0] != 1)
    throw domain_violation("ExactSeries::log: constant term must be 1");
  const std::size_t n = order();
  std::vector<Rational> g(n + 1, Rational(0));
  // n g_n = n f_n - sum_{k=1..n-1} k g_k f_{n-k}
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s = Rational((unsigned long)m) * coeff_[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (g[k] == 0 || coeff_[m - k] == 0) continue;
      s -= Rational((unsigned long)k) * g[k] * coeff_[m - k];
    }
    g[m] = s / Rational((unsigned long)m);
  }
  return ExactSeries(std::move(g));
}

}  // namespace zetalab
