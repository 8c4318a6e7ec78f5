#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tennisball/bigint.hpp"
#include "tennisball/poly_w_series.hpp"
#include "tennisball/series.hpp"

namespace tennis {

/// (w - 1)^l - z * w^(k+l), known exactly (reported to `order`).
PolyWSeries defining_polynomial(unsigned k, unsigned l, std::size_t order);

/// Factorisation f = g * h of f = (w-1)^l - z w^(k+l) over truncated series.
///
/// g is monic of degree l with g(w, 0) = (w-1)^l; its roots are the l
/// fractional power series solutions of f = 0, which are never formed
/// individually. h has degree k and h(w, 0) = 1.
struct HenselFactorization {
  PolyWSeries g;
  PolyWSeries h;
  unsigned k = 0;
  unsigned l = 0;
  std::size_t order = 0;
  /// False if any coefficient of g or h came out non-integral.
  bool integral = true;
};

HenselFactorization hensel_factor(unsigned k, unsigned l, std::size_t order);

/// Q(z) = -g(1, z) / z, i.e. the counting series for the single-block
/// pattern (k, l), coefficients q_0 .. q_order. Throws ErrorKind::Internal if
/// g(1, 0) != 0 or a coefficient is not a nonnegative integer.
SeriesZ q_series_algebraic(unsigned k, unsigned l, std::size_t order);

/// sum_n C(p n, n) / ((p - 1) n + 1) z^n, p >= 2.
SeriesZ generalized_catalan_series(unsigned p, std::size_t order);

/// 1 / (1 - z G_o(z)) where G_o is the odd part of the Catalan series.
SeriesZ odd_catalan_construction(std::size_t order);

/// Counts for pattern (2,2) read off odd_catalan_construction: odd
/// coefficients vanish and q_n is the coefficient of z^(2n+2).
std::vector<BigInt> odd_catalan_counts(std::size_t n_max);

struct IdentityCheck {
  bool holds = false;
  std::string detail;
  /// z-order of the first mismatch, if any.
  std::optional<std::size_t> failing_order;
};

/// Checks, up to z^n_max and coefficientwise in x and y,
///
///   (sum_n A_n(x,y) z^n) * (z x^(k+l) - (x-1)^l) * D(y,z) == -g(x,z)
///
/// where g is the Hensel factor and D(y,z) = sum_i g_i(z) y^i (y-1)^(l-i)
/// equals prod_j (y - w_j (y - 1)). A_n comes from the Tutte recursion.
IdentityCheck verify_bivariate_identity(unsigned k, unsigned l, std::size_t n_max);

/// The same quotient evaluated at x = y = 1, expanded as a series to
/// `order`. Reproduces Q(z).
SeriesZ bivariate_specialization(unsigned k, unsigned l, std::size_t order);

}  // namespace tennis
