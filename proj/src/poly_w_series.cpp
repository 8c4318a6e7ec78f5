#include "tennisball/poly_w_series.hpp"

#include <algorithm>
#include <sstream>

#include "tennisball/error.hpp"

namespace tennis {

PolyWSeries::PolyWSeries(std::vector<SeriesZ> coeffs, std::size_t order)
    : order_(order) {
  coeffs_.reserve(coeffs.size());
  for (auto& c : coeffs) {
    if (c.order() < order) {
      throw_error(ErrorKind::Precondition,
                  "coefficient series is known only to order " +
                      std::to_string(c.order()));
    }
    coeffs_.push_back(c.truncated(order));
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SeriesZ PolyWSeries::coeff_or_zero(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : SeriesZ::zero(order_);
}

bool PolyWSeries::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == SeriesZ::one(order_);
}

SeriesZ PolyWSeries::eval(const Rational& w0) const {
  SeriesZ acc = SeriesZ::zero(order_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc.scaled(w0) + coeffs_[i];
  return acc;
}

std::string PolyWSeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    os << "(" << coeffs_[i].to_string() << ")";
    if (i) os << "*w^" << i << " + ";
  }
  return os.str();
}

PolyWSeries operator+(const PolyWSeries& a, const PolyWSeries& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  const std::size_t ord = std::min(a.order_, b.order_);
  std::vector<SeriesZ> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    c.push_back(a.coeff_or_zero(i).truncated(ord) + b.coeff_or_zero(i).truncated(ord));
  return PolyWSeries(std::move(c), ord);
}

PolyWSeries operator-(const PolyWSeries& a, const PolyWSeries& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  const std::size_t ord = std::min(a.order_, b.order_);
  std::vector<SeriesZ> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    c.push_back(a.coeff_or_zero(i).truncated(ord) - b.coeff_or_zero(i).truncated(ord));
  return PolyWSeries(std::move(c), ord);
}

PolyWSeries operator*(const PolyWSeries& a, const PolyWSeries& b) {
  const std::size_t ord = std::min(a.order_, b.order_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return PolyWSeries({}, ord);
  std::vector<SeriesZ> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                         SeriesZ::zero(ord));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return PolyWSeries(std::move(c), ord);
}

SeriesZ polyw_eval(const PolyWSeries& g, const Rational& w0) { return g.eval(w0); }

}  // namespace tennis
