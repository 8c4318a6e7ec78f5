#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tennisball/bigint.hpp"

namespace tennis {

/// Truncated power series in z with exact rational coefficients.
///
/// Coefficients of z^0 .. z^order are known; everything above `order` is
/// unknown (not zero). Binary operations on operands of different orders
/// silently take the smaller order.
class SeriesZ {
 public:
  /// Missing coefficients up to `order` are zero; extra ones are dropped.
  SeriesZ(std::vector<Rational> coeffs, std::size_t order);

  static SeriesZ zero(std::size_t order) { return SeriesZ({}, order); }
  static SeriesZ constant(const Rational& c, std::size_t order) {
    return SeriesZ({c}, order);
  }
  static SeriesZ one(std::size_t order) { return constant(1, order); }
  /// Exact polynomial, known to the requested order.
  static SeriesZ from_integers(const std::vector<BigInt>& coeffs,
                               std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  SeriesZ truncated(std::size_t order) const;
  /// Multiplies by z^s; the known range grows by s.
  SeriesZ times_z_pow(std::size_t s) const;
  /// Divides by z^s. The first s coefficients must be zero; the known range
  /// shrinks by s. Throws ErrorKind::Internal otherwise.
  SeriesZ div_z_pow(std::size_t s) const;
  SeriesZ scaled(const Rational& c) const;
  /// f(-z)
  SeriesZ negated_argument() const;

  bool is_zero() const;
  bool equal_to_order(const SeriesZ& other, std::size_t order) const;
  bool all_integral() const;
  /// Throws ErrorKind::Internal on a non-integral coefficient.
  std::vector<BigInt> to_integers() const;
  std::string to_string() const;

  friend SeriesZ operator+(const SeriesZ& a, const SeriesZ& b);
  friend SeriesZ operator-(const SeriesZ& a, const SeriesZ& b);
  friend SeriesZ operator*(const SeriesZ& a, const SeriesZ& b);
  friend SeriesZ operator-(const SeriesZ& a);
  /// Structural equality: same order and same known coefficients.
  friend bool operator==(const SeriesZ& a, const SeriesZ& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

SeriesZ series_add(const SeriesZ& a, const SeriesZ& b);
SeriesZ series_mul(const SeriesZ& a, const SeriesZ& b);
/// Multiplicative inverse; throws ErrorKind::Precondition when the constant
/// term is zero. The order is preserved.
SeriesZ series_inverse(const SeriesZ& a);

}  // namespace tennis
