#include "tennisball/poly_xy.hpp"

#include <algorithm>
#include <sstream>

#include "tennisball/error.hpp"

namespace tennis {

PolyXY::PolyXY(std::size_t rows, std::size_t cols, std::vector<BigInt> coeffs)
    : rows_(rows), cols_(cols), coeffs_(std::move(coeffs)) {
  canonicalize();
}

void PolyXY::canonicalize() {
  std::size_t max_row = 0;
  std::size_t max_col = 0;
  bool any = false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(at(i, j)) != 0) {
        any = true;
        max_row = std::max(max_row, i + 1);
        max_col = std::max(max_col, j + 1);
      }
    }
  }
  if (!any) {
    rows_ = cols_ = 0;
    coeffs_.clear();
    return;
  }
  if (max_row == rows_ && max_col == cols_) return;
  std::vector<BigInt> trimmed(max_row * max_col);
  for (std::size_t i = 0; i < max_row; ++i)
    for (std::size_t j = 0; j < max_col; ++j)
      trimmed[i * max_col + j] = at(i, j);
  rows_ = max_row;
  cols_ = max_col;
  coeffs_ = std::move(trimmed);
}

PolyXY PolyXY::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  std::vector<BigInt> c(rows.size() * cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) c[i * cols + j] = rows[i][j];
  return PolyXY(rows.size(), cols, std::move(c));
}

PolyXY PolyXY::constant(const BigInt& c) { return monomial(c, 0, 0); }

PolyXY PolyXY::monomial(const BigInt& c, std::size_t deg_x, std::size_t deg_y) {
  std::vector<BigInt> t((deg_x + 1) * (deg_y + 1));
  t[deg_x * (deg_y + 1) + deg_y] = c;
  return PolyXY(deg_x + 1, deg_y + 1, std::move(t));
}

BigInt PolyXY::coeff(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) return 0;
  return at(i, j);
}

BigInt PolyXY::eval(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  for (std::size_t i = rows_; i-- > 0;) {
    BigInt row = 0;
    for (std::size_t j = cols_; j-- > 0;) row = row * y + at(i, j);
    total = total * x + row;
  }
  return total;
}

PolyXY PolyXY::shifted_x(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> t((rows_ + k) * cols_);
  std::copy(coeffs_.begin(), coeffs_.end(), t.begin() + static_cast<long>(k * cols_));
  return PolyXY(rows_ + k, cols_, std::move(t));
}

PolyXY PolyXY::scaled(const BigInt& c) const {
  std::vector<BigInt> t(coeffs_);
  for (auto& v : t) v *= c;
  return PolyXY(rows_, cols_, std::move(t));
}

std::vector<std::vector<BigInt>> PolyXY::to_rows() const {
  std::vector<std::vector<BigInt>> out(rows_, std::vector<BigInt>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j);
  return out;
}

namespace {

void append_power(std::ostringstream& os, char var, std::size_t e) {
  if (e == 0) return;
  os << var;
  if (e > 1) os << '^' << e;
}

}  // namespace

std::string PolyXY::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = rows_; i-- > 0;) {
    for (std::size_t j = cols_; j-- > 0;) {
      const BigInt& c = at(i, j);
      if (sgn(c) == 0) continue;
      BigInt mag = abs(c);
      if (first) {
        if (sgn(c) < 0) os << '-';
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit = (mag == 1);
      if (!unit || (i == 0 && j == 0)) {
        os << mag.get_str();
        if (i != 0 || j != 0) os << '*';
      }
      append_power(os, 'x', i);
      if (i != 0 && j != 0) os << '*';
      append_power(os, 'y', j);
    }
  }
  return os.str();
}

bool PolyXY::all_coefficients_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigInt& v) { return sgn(v) >= 0; });
}

namespace {

PolyXY add_scaled(const PolyXY& a, const PolyXY& b, int sign) {
  const std::size_t rows = std::max(a.rows(), b.rows());
  const std::size_t cols = std::max(a.cols(), b.cols());
  std::vector<std::vector<BigInt>> t(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t[i][j] = a.coeff(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (sign > 0)
        t[i][j] += b.coeff(i, j);
      else
        t[i][j] -= b.coeff(i, j);
    }
  return PolyXY::from_rows(t);
}

}  // namespace

PolyXY operator+(const PolyXY& a, const PolyXY& b) { return add_scaled(a, b, 1); }
PolyXY operator-(const PolyXY& a, const PolyXY& b) { return add_scaled(a, b, -1); }
PolyXY operator-(const PolyXY& a) { return a.scaled(-1); }

PolyXY operator*(const PolyXY& a, const PolyXY& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t rows = a.rows_ + b.rows_ - 1;
  const std::size_t cols = a.cols_ + b.cols_ - 1;
  std::vector<BigInt> t(rows * cols);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const BigInt& ca = a.at(i, j);
      if (sgn(ca) == 0) continue;
      for (std::size_t p = 0; p < b.rows_; ++p)
        for (std::size_t q = 0; q < b.cols_; ++q)
          t[(i + p) * cols + (j + q)] += ca * b.at(p, q);
    }
  return PolyXY(rows, cols, std::move(t));
}

bool operator==(const PolyXY& a, const PolyXY& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeffs_ == b.coeffs_;
}

PolyXY poly_add(const PolyXY& a, const PolyXY& b) { return a + b; }
PolyXY poly_mul(const PolyXY& a, const PolyXY& b) { return a * b; }

PolyXY eval_x1(const PolyXY& a) {
  std::vector<std::vector<BigInt>> row(1, std::vector<BigInt>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) row[0][j] += a.coeff(i, j);
  return PolyXY::from_rows(row);
}

PolyXY exact_div_x_minus_1(const PolyXY& a) {
  if (a.is_zero()) return {};
  // Synthetic division by (x - 1), one y-column at a time.
  const std::size_t n = a.rows();
  std::vector<std::vector<BigInt>> q(n > 1 ? n - 1 : 0,
                                     std::vector<BigInt>(a.cols()));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    BigInt carry = 0;
    for (std::size_t i = n; i-- > 1;) {
      carry += a.coeff(i, j);
      q[i - 1][j] = carry;
    }
    carry += a.coeff(0, j);
    if (sgn(carry) != 0) {
      throw_error(ErrorKind::Internal,
                  "polynomial not divisible by (x - 1): " + a.to_string());
    }
  }
  return PolyXY::from_rows(q);
}

}  // namespace tennis
