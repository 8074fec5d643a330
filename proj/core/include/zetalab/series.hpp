#pragma once

#include <cstddef>
#include <vector>

#include "zetalab/rational.hpp"

namespace zetalab {

// Truncated power series with exact rational coefficients. All operations
// are exact up to the truncation order; exp and log use the term-by-term
// recurrences from f' = u' f and g' = f'/f.
class ExactSeries {
 public:
  ExactSeries() : coeff_(1, Rational(0)) {}
  explicit ExactSeries(std::vector<Rational> coeff) : coeff_(std::move(coeff)) {
    if (coeff_.empty()) coeff_.assign(1, Rational(0));
  }
  static ExactSeries constant(const Rational& c, std::size_t order);
  static ExactSeries variable(std::size_t order);  // t, truncated

  std::size_t order() const { return coeff_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeff_[k]; }
  Rational& operator[](std::size_t k) { return coeff_[k]; }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  ExactSeries truncated(std::size_t order) const;

  friend ExactSeries operator+(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator-(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b);
  friend bool operator==(const ExactSeries& a, const ExactSeries& b);

  ExactSeries inverse() const;  // requires nonzero constant term
  ExactSeries exp() const;      // requires zero constant term
  ExactSeries log() const;      // requires constant term 1

 private:
  std::vector<Rational> coeff_;
};

}  // namespace zetalab
