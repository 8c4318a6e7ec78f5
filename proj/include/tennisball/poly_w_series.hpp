#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tennisball/series.hpp"

namespace tennis {

/// Polynomial in w whose coefficients are truncated series in z. All
/// coefficients share one truncation order; leading coefficients that are
/// zero to that order are dropped.
class PolyWSeries {
 public:
  /// coeffs[i] multiplies w^i. Every coefficient is truncated to `order`,
  /// which must not exceed any coefficient's own order.
  PolyWSeries(std::vector<SeriesZ> coeffs, std::size_t order);

  std::size_t order() const noexcept { return order_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const SeriesZ& coeff(std::size_t i) const { return coeffs_.at(i); }
  /// Zero series for i beyond the degree.
  SeriesZ coeff_or_zero(std::size_t i) const;

  bool is_monic() const;
  SeriesZ eval(const Rational& w0) const;
  std::string to_string() const;

  friend PolyWSeries operator+(const PolyWSeries& a, const PolyWSeries& b);
  friend PolyWSeries operator-(const PolyWSeries& a, const PolyWSeries& b);
  friend PolyWSeries operator*(const PolyWSeries& a, const PolyWSeries& b);
  friend bool operator==(const PolyWSeries& a, const PolyWSeries& b) = default;

 private:
  std::vector<SeriesZ> coeffs_;
  std::size_t order_;
};

/// Substitutes the scalar w0 for w.
SeriesZ polyw_eval(const PolyWSeries& g, const Rational& w0);

}  // namespace tennis
