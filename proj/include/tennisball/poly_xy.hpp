#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tennisball/bigint.hpp"

namespace tennis {

/// Dense bivariate polynomial in x, y with arbitrary-precision integer
/// coefficients.
///
/// Storage is a row-major table indexed by (x-degree, y-degree). The table is
/// always trimmed to the smallest rectangle holding every nonzero
/// coefficient, so two polynomials are equal iff their tables are equal. The
/// zero polynomial is the empty table and has degree -1 in both variables.
class PolyXY {
 public:
  PolyXY() = default;

  /// rows[i][j] is the coefficient of x^i y^j. Rows may be ragged.
  static PolyXY from_rows(const std::vector<std::vector<BigInt>>& rows);
  static PolyXY constant(const BigInt& c);
  static PolyXY monomial(const BigInt& c, std::size_t deg_x, std::size_t deg_y);
  static PolyXY one() { return constant(1); }
  static PolyXY x() { return monomial(1, 1, 0); }
  static PolyXY y() { return monomial(1, 0, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree_x() const noexcept { return static_cast<int>(rows_) - 1; }
  int degree_y() const noexcept { return static_cast<int>(cols_) - 1; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// Coefficient of x^i y^j; zero outside the stored table.
  BigInt coeff(std::size_t i, std::size_t j) const;
  BigInt eval(const BigInt& x, const BigInt& y) const;

  /// x^k * (*this)
  PolyXY shifted_x(std::size_t k) const;
  PolyXY scaled(const BigInt& c) const;

  std::vector<std::vector<BigInt>> to_rows() const;
  /// Human-readable form, e.g. "x^2 + 2*x + y^2 + 2*y".
  std::string to_string() const;

  bool all_coefficients_nonnegative() const;

  friend PolyXY operator+(const PolyXY& a, const PolyXY& b);
  friend PolyXY operator-(const PolyXY& a, const PolyXY& b);
  friend PolyXY operator*(const PolyXY& a, const PolyXY& b);
  friend PolyXY operator-(const PolyXY& a);
  friend bool operator==(const PolyXY& a, const PolyXY& b);

 private:
  PolyXY(std::size_t rows, std::size_t cols, std::vector<BigInt> coeffs);

  const BigInt& at(std::size_t i, std::size_t j) const {
    return coeffs_[i * cols_ + j];
  }
  void canonicalize();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> coeffs_;
};

PolyXY poly_add(const PolyXY& a, const PolyXY& b);
PolyXY poly_mul(const PolyXY& a, const PolyXY& b);

/// Substitutes x = 1; the result depends on y only.
PolyXY eval_x1(const PolyXY& a);

/// Exact quotient a / (x - 1). Throws ErrorKind::Internal if (x - 1) does not
/// divide a.
PolyXY exact_div_x_minus_1(const PolyXY& a);

}  // namespace tennis
