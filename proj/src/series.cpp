#include "tennisball/series.hpp"

#include <algorithm>
#include <sstream>

#include "tennisball/error.hpp"

namespace tennis {

SeriesZ::SeriesZ(std::vector<Rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
  // gmpxx leaves a constructed num/den pair unreduced.
  for (auto& c : coeffs_) c.canonicalize();
}

SeriesZ SeriesZ::from_integers(const std::vector<BigInt>& coeffs,
                               std::size_t order) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (const auto& c : coeffs) q.emplace_back(c);
  return SeriesZ(std::move(q), order);
}

const Rational& SeriesZ::operator[](std::size_t i) const {
  if (i > order()) {
    throw_error(ErrorKind::Precondition,
                "coefficient z^" + std::to_string(i) +
                    " is beyond the known order " + std::to_string(order()));
  }
  return coeffs_[i];
}

SeriesZ SeriesZ::truncated(std::size_t order) const {
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + static_cast<long>(
                                                std::min(order, this->order()) + 1));
  return SeriesZ(std::move(c), std::min(order, this->order()));
}

SeriesZ SeriesZ::times_z_pow(std::size_t s) const {
  std::vector<Rational> c(s);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return SeriesZ(std::move(c), order() + s);
}

SeriesZ SeriesZ::div_z_pow(std::size_t s) const {
  if (s > order()) {
    throw_error(ErrorKind::Precondition, "division by z^" + std::to_string(s) +
                                             " exceeds the known order");
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (sgn(coeffs_[i]) != 0) {
      throw_error(ErrorKind::Internal,
                  "series not divisible by z^" + std::to_string(s) + ": " +
                      to_string());
    }
  }
  return SeriesZ(std::vector<Rational>(coeffs_.begin() + static_cast<long>(s),
                                       coeffs_.end()),
                 order() - s);
}

SeriesZ SeriesZ::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (auto& v : out) v *= c;
  return SeriesZ(std::move(out), order());
}

SeriesZ SeriesZ::negated_argument() const {
  std::vector<Rational> out(coeffs_);
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return SeriesZ(std::move(out), order());
}

bool SeriesZ::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

bool SeriesZ::equal_to_order(const SeriesZ& other, std::size_t order) const {
  if (order > this->order() || order > other.order()) {
    throw_error(ErrorKind::Precondition,
                "comparison beyond the known order of an operand");
  }
  for (std::size_t i = 0; i <= order; ++i)
    if (coeffs_[i] != other.coeffs_[i]) return false;
  return true;
}

bool SeriesZ::all_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& q) { return is_integral(q); });
}

std::vector<BigInt> SeriesZ::to_integers() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& q : coeffs_) out.push_back(to_integer(q));
  return out;
}

std::string SeriesZ::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << " + ";
    os << coeffs_[i].get_str();
    if (i) os << "*z^" << i;
  }
  os << " + O(z^" << order() + 1 << ")";
  return os.str();
}

SeriesZ operator+(const SeriesZ& a, const SeriesZ& b) {
  const std::size_t ord = std::min(a.order(), b.order());
  std::vector<Rational> c(ord + 1);
  for (std::size_t i = 0; i <= ord; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return SeriesZ(std::move(c), ord);
}

SeriesZ operator-(const SeriesZ& a, const SeriesZ& b) {
  const std::size_t ord = std::min(a.order(), b.order());
  std::vector<Rational> c(ord + 1);
  for (std::size_t i = 0; i <= ord; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return SeriesZ(std::move(c), ord);
}

SeriesZ operator-(const SeriesZ& a) { return a.scaled(-1); }

SeriesZ operator*(const SeriesZ& a, const SeriesZ& b) {
  const std::size_t ord = std::min(a.order(), b.order());
  std::vector<Rational> c(ord + 1);
  for (std::size_t i = 0; i <= ord; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= ord; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return SeriesZ(std::move(c), ord);
}

SeriesZ series_add(const SeriesZ& a, const SeriesZ& b) { return a + b; }
SeriesZ series_mul(const SeriesZ& a, const SeriesZ& b) { return a * b; }

SeriesZ series_inverse(const SeriesZ& a) {
  if (sgn(a[0]) == 0) {
    throw_error(ErrorKind::Precondition,
                "series with zero constant term is not invertible");
  }
  const std::size_t ord = a.order();
  std::vector<Rational> inv(ord + 1);
  const Rational c0_inv = 1 / a[0];
  inv[0] = c0_inv;
  for (std::size_t m = 1; m <= ord; ++m) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= m; ++i) acc += a[i] * inv[m - i];
    inv[m] = -acc * c0_inv;
  }
  return SeriesZ(std::move(inv), ord);
}

}  // namespace tennis
