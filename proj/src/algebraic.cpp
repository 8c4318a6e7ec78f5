#include "tennisball/algebraic.hpp"

#include <sstream>

#include "tennisball/error.hpp"
#include "tennisball/pattern.hpp"
#include "tennisball/poly_xy.hpp"
#include "tennisball/tutte.hpp"

namespace tennis {

namespace {

// Dense univariate polynomial in w with rational coefficients, index = degree.
using PolyQ = std::vector<Rational>;

void trim(PolyQ& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

PolyQ mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

void sub_in_place(PolyQ& a, const PolyQ& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
}

// (w - 1)^l
PolyQ w_minus_one_pow(unsigned l) {
  PolyQ p(l + 1);
  for (unsigned i = 0; i <= l; ++i) {
    Rational c(binomial(l, i));
    p[i] = ((l - i) % 2 == 0) ? c : Rational(-c);
  }
  return p;
}

// Quotient and remainder of a by the monic divisor d.
std::pair<PolyQ, PolyQ> divmod_monic(PolyQ a, const PolyQ& d) {
  const std::size_t dd = d.size() - 1;
  if (a.size() <= dd) return {{}, a};
  PolyQ q(a.size() - dd);
  for (std::size_t i = a.size(); i-- > dd;) {
    const Rational c = a[i];
    if (sgn(c) == 0) continue;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) a[i - dd + j] -= c * d[j];
  }
  a.resize(dd);
  trim(a);
  trim(q);
  return {q, a};
}

// Reassembles per-z-order polynomials in w into a PolyWSeries.
PolyWSeries assemble(const std::vector<PolyQ>& by_order, std::size_t degree,
                     std::size_t order) {
  std::vector<SeriesZ> coeffs;
  for (std::size_t i = 0; i <= degree; ++i) {
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 0; m <= order; ++m)
      if (i < by_order[m].size()) c[m] = by_order[m][i];
    coeffs.emplace_back(std::move(c), order);
  }
  return PolyWSeries(std::move(coeffs), order);
}

bool all_integral(const PolyWSeries& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeff(static_cast<std::size_t>(i)).all_integral()) return false;
  return true;
}

void require_positive(unsigned k, unsigned l) {
  if (k == 0 || l == 0) {
    throw_error(ErrorKind::InvalidArgument, "k and l must be positive integers");
  }
}

}  // namespace

PolyWSeries defining_polynomial(unsigned k, unsigned l, std::size_t order) {
  require_positive(k, l);
  std::vector<PolyQ> by_order(order + 1);
  by_order[0] = w_minus_one_pow(l);
  if (order >= 1) {
    by_order[1].assign(k + l + 1, Rational(0));
    by_order[1][k + l] = -1;
  }
  return assemble(by_order, k + l, order);
}

HenselFactorization hensel_factor(unsigned k, unsigned l, std::size_t order) {
  require_positive(k, l);
  const PolyQ g0 = w_minus_one_pow(l);
  std::vector<PolyQ> g(order + 1), h(order + 1);
  g[0] = g0;
  h[0] = {Rational(1)};
  // f only has z^0 and z^1 terms; at z^m (m >= 1) the defect is
  //   f_m - sum_{0<i<m} g_i h_{m-i}  =  g_m * h_0 + g_0 * h_m.
  // Dividing by g_0 splits it: the quotient is h_m, the remainder g_m.
  for (std::size_t m = 1; m <= order; ++m) {
    PolyQ defect;
    if (m == 1) {
      defect.assign(k + l + 1, Rational(0));
      defect[k + l] = -1;
    }
    for (std::size_t i = 1; i < m; ++i) sub_in_place(defect, mul(g[i], h[m - i]));
    auto [q, r] = divmod_monic(std::move(defect), g0);
    h[m] = std::move(q);
    g[m] = std::move(r);
  }
  HenselFactorization out{assemble(g, l, order), assemble(h, k, order), k, l, order, true};
  out.integral = all_integral(out.g) && all_integral(out.h);
  return out;
}

SeriesZ q_series_algebraic(unsigned k, unsigned l, std::size_t order) {
  const HenselFactorization f = hensel_factor(k, l, order + 1);
  const SeriesZ at_one = polyw_eval(f.g, 1);
  if (sgn(at_one[0]) != 0) {
    throw_error(ErrorKind::Internal, "g(1, 0) is nonzero: " + at_one.to_string());
  }
  SeriesZ q = (-at_one).div_z_pow(1);
  for (std::size_t n = 0; n <= q.order(); ++n) {
    if (!is_integral(q[n]) || sgn(q[n]) < 0) {
      throw_error(ErrorKind::Internal,
                  "coefficient q_" + std::to_string(n) + " = " + q[n].get_str() +
                      " is not a nonnegative integer");
    }
  }
  return q;
}

SeriesZ generalized_catalan_series(unsigned p, std::size_t order) {
  if (p < 2) throw_error(ErrorKind::InvalidArgument, "generalized Catalan needs p >= 2");
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    c[n] = Rational(binomial(p * n, n), BigInt(static_cast<unsigned long>((p - 1) * n + 1)));
    c[n].canonicalize();
  }
  return SeriesZ(std::move(c), order);
}

SeriesZ odd_catalan_construction(std::size_t order) {
  const SeriesZ g = generalized_catalan_series(2, order);
  const SeriesZ odd = (g - g.negated_argument()).scaled(Rational(1, 2));
  const SeriesZ z_odd = odd.times_z_pow(1).truncated(order);
  return series_inverse(SeriesZ::one(order) - z_odd);
}

std::vector<BigInt> odd_catalan_counts(std::size_t n_max) {
  const SeriesZ s = odd_catalan_construction(2 * n_max + 2);
  std::vector<BigInt> out;
  for (std::size_t i = 1; i <= s.order(); i += 2) {
    if (sgn(s[i]) != 0) {
      throw_error(ErrorKind::Internal, "odd coefficient z^" + std::to_string(i) + " is nonzero");
    }
  }
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(to_integer(s[2 * n + 2]));
  return out;
}

namespace {

// Series in z whose coefficients are integer polynomials in x and y.
using SeriesXY = std::vector<PolyXY>;

SeriesXY mul_truncated(const SeriesXY& a, const SeriesXY& b, std::size_t order) {
  SeriesXY c(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

BigInt integer_coeff(const PolyWSeries& p, std::size_t i, std::size_t m) {
  return to_integer(p.coeff_or_zero(i)[m]);
}

PolyXY y_pow_times_y_minus_one_pow(std::size_t a, std::size_t b) {
  PolyXY p = PolyXY::monomial(1, 0, a);
  const PolyXY y_minus_one = PolyXY::y() - PolyXY::one();
  for (std::size_t i = 0; i < b; ++i) p = p * y_minus_one;
  return p;
}

struct IdentitySides {
  SeriesXY a;    // sum A_n z^n
  SeriesXY e;    // z x^(k+l) - (x-1)^l
  SeriesXY d;    // sum_i g_i(z) y^i (y-1)^(l-i)
  SeriesXY num;  // -g(x, z)
};

IdentitySides build_sides(unsigned k, unsigned l, std::size_t order,
                          const HenselFactorization& f) {
  IdentitySides s;
  s.a = tutte_sequence(Pattern(k, l), order).polys;

  PolyXY x_minus_one_pow = PolyXY::one();
  for (unsigned i = 0; i < l; ++i) x_minus_one_pow = x_minus_one_pow * (PolyXY::x() - PolyXY::one());
  s.e = {-x_minus_one_pow, PolyXY::monomial(1, k + l, 0)};

  std::vector<PolyXY> basis;
  for (unsigned i = 0; i <= l; ++i) basis.push_back(y_pow_times_y_minus_one_pow(i, l - i));
  s.d.resize(order + 1);
  s.num.resize(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    for (unsigned i = 0; i <= l; ++i) {
      const BigInt c = integer_coeff(f.g, i, m);
      if (sgn(c) == 0) continue;
      s.d[m] = s.d[m] + basis[i].scaled(c);
      s.num[m] = s.num[m] - PolyXY::monomial(c, i, 0);
    }
  }
  return s;
}

}  // namespace

IdentityCheck verify_bivariate_identity(unsigned k, unsigned l, std::size_t n_max) {
  const HenselFactorization f = hensel_factor(k, l, n_max);
  if (!f.integral) {
    return {false, "Hensel factor has non-integral coefficients", std::nullopt};
  }
  const IdentitySides s = build_sides(k, l, n_max, f);
  const SeriesXY lhs = mul_truncated(mul_truncated(s.a, s.e, n_max), s.d, n_max);
  for (std::size_t m = 0; m <= n_max; ++m) {
    if (lhs[m] == s.num[m]) continue;
    const PolyXY diff = lhs[m] - s.num[m];
    std::ostringstream os;
    for (std::size_t i = 0; i < diff.rows(); ++i)
      for (std::size_t j = 0; j < diff.cols(); ++j)
        if (sgn(diff.coeff(i, j)) != 0) {
          os << "mismatch at z^" << m << ", coefficient of x^" << i << " y^" << j
             << ": lhs " << lhs[m].coeff(i, j).get_str() << ", rhs "
             << s.num[m].coeff(i, j).get_str();
          return {false, os.str(), m};
        }
  }
  std::ostringstream os;
  os << "identity holds through z^" << n_max << " for (k,l) = (" << k << "," << l << ")";
  return {true, os.str(), std::nullopt};
}

SeriesZ bivariate_specialization(unsigned k, unsigned l, std::size_t order) {
  const std::size_t work = order + 1;
  const HenselFactorization f = hensel_factor(k, l, work);
  const IdentitySides s = build_sides(k, l, work, f);
  const SeriesXY den = mul_truncated(s.e, s.d, work);
  std::vector<BigInt> num11, den11;
  for (std::size_t m = 0; m <= work; ++m) {
    num11.push_back(s.num[m].eval(1, 1));
    den11.push_back(den[m].eval(1, 1));
  }
  SeriesZ num = SeriesZ::from_integers(num11, work);
  SeriesZ dz = SeriesZ::from_integers(den11, work);
  std::size_t v = 0;
  while (v <= work && sgn(dz[v]) == 0) ++v;
  if (v > work) throw_error(ErrorKind::Internal, "denominator vanishes at x = y = 1");
  num = num.div_z_pow(v);
  dz = dz.div_z_pow(v);
  return (num * series_inverse(dz)).truncated(order);
}

}  // namespace tennis
