#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tennisball/error.hpp"
#include "tennisball/poly_w_series.hpp"
#include "tennisball/poly_xy.hpp"
#include "tennisball/series.hpp"

using namespace tennis;

namespace {

PolyXY P(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<BigInt>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return PolyXY::from_rows(r);
}

SeriesZ S(const std::vector<long>& c, std::size_t order) {
  std::vector<Rational> q;
  for (long v : c) q.emplace_back(v);
  return SeriesZ(q, order);
}

const PolyXY X = PolyXY::x();
const PolyXY Y = PolyXY::y();
const PolyXY ONE = PolyXY::one();

PolyXY random_poly(std::mt19937& rng, int max_deg = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4);
  const int rows = deg(rng) + 1, cols = deg(rng) + 1;
  std::vector<std::vector<BigInt>> r(rows, std::vector<BigInt>(cols));
  for (auto& row : r)
    for (auto& c : row) c = coef(rng);
  return PolyXY::from_rows(r);
}

SeriesZ random_series(std::mt19937& rng, std::size_t order) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Rational> c(order + 1);
  for (auto& v : c) v = Rational(coef(rng), 1 + (coef(rng) + 5) % 3);
  return SeriesZ(c, order);
}

}  // namespace

TEST_SUITE("PolyXY") {
  TEST_CASE("addition") {
    CHECK((X + Y) + X == P({{0, 1}, {2}}));
    CHECK(poly_add(X + Y, PolyXY{}) == X + Y);
    // (x^2 + x + y) + (x^2 + 2x + 2y + y^2)
    const PolyXY a = X * X + X + Y;
    const PolyXY b = X * X + X.scaled(2) + Y.scaled(2) + Y * Y;
    CHECK(a + b == P({{0, 3, 1}, {3}, {2}}));
  }

  TEST_CASE("multiplication") {
    CHECK(X * X == PolyXY::monomial(1, 2, 0));
    CHECK(poly_mul(X * X, X + Y) == P({{}, {}, {0, 1}, {1}}));
    CHECK((X + Y) * (X - ONE) == X * X + X * Y - X - Y);
  }

  TEST_CASE("canonical form trims zero rows and columns") {
    const PolyXY p = P({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(p.rows() == 1);
    CHECK(p.cols() == 1);
    CHECK(p == ONE);
    CHECK((X - X).is_zero());
    CHECK((X - X).degree_x() == -1);
    CHECK(PolyXY{} == P({}));
  }

  TEST_CASE("eval_x1") {
    const PolyXY t = X * X + X.scaled(2) + Y.scaled(2) + Y * Y;
    CHECK(eval_x1(t) == P({{3, 2, 1}}));
    CHECK(eval_x1(PolyXY::constant(7)) == PolyXY::constant(7));
    CHECK(eval_x1(PolyXY::monomial(1, 5, 0)) == ONE);
  }

  TEST_CASE("exact division by x - 1") {
    CHECK(exact_div_x_minus_1(X * X - ONE) == X + ONE);
    CHECK(exact_div_x_minus_1(X - ONE) == ONE);
    // x^3 + x^2 y - x - y = (x - 1)(x^2 + x + x y + y), confirmed by multiplying back.
    const PolyXY a = X * X * X + X * X * Y - X - Y;
    const PolyXY q = exact_div_x_minus_1(a);
    CHECK(q == X * X + X + X * Y + Y);
    CHECK(q * (X - ONE) == a);
  }

  TEST_CASE("exact division rejects non-multiples") {
    CHECK_THROWS_AS(exact_div_x_minus_1(X), Error);
    try {
      exact_div_x_minus_1(X * X + Y);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Internal);
    }
  }

  TEST_CASE("to_string") {
    CHECK((X * X + X.scaled(2) + Y.scaled(2) + Y * Y).to_string() == "x^2 + 2*x + y^2 + 2*y");
    CHECK(PolyXY{}.to_string() == "0");
    CHECK((X * Y - ONE).to_string() == "x*y - 1");
  }

  TEST_CASE("eval") {
    CHECK((X * X + X.scaled(2) + Y.scaled(2) + Y * Y).eval(1, 1) == 6);
    CHECK((X * Y - ONE).eval(3, -2) == -7);
  }

  TEST_CASE("property: division round trip") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
      const PolyXY p = random_poly(rng);
      CHECK(exact_div_x_minus_1(poly_mul(p, X - ONE)) == p);
    }
  }

  TEST_CASE("property: ring axioms") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
      const PolyXY a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      // Canonical: the last row and column each hold a nonzero entry.
      const PolyXY r = a * b + c;
      if (!r.is_zero()) {
        bool row_nz = false, col_nz = false;
        for (std::size_t j = 0; j < r.cols(); ++j) row_nz |= sgn(r.coeff(r.rows() - 1, j)) != 0;
        for (std::size_t i = 0; i < r.rows(); ++i) col_nz |= sgn(r.coeff(i, r.cols() - 1)) != 0;
        CHECK(row_nz);
        CHECK(col_nz);
      }
    }
  }
}

TEST_SUITE("SeriesZ") {
  TEST_CASE("arithmetic") {
    CHECK(series_mul(S({1, 1}, 3), S({1, -1}, 3)) == S({1, 0, -1}, 3));
    CHECK(series_inverse(S({1, -1}, 5)) == S({1, 1, 1, 1, 1, 1}, 5));
    CHECK(series_add(S({1, 2}, 2), S({0, 1, 1}, 4)).order() == 2);
  }

  TEST_CASE("orders take the minimum") {
    const SeriesZ a = S({1, 2, 3}, 6), b = S({1}, 2);
    CHECK((a * b).order() == 2);
    CHECK((a - b).order() == 2);
    CHECK(series_inverse(a).order() == 6);
  }

  TEST_CASE("inverse of zero constant term") {
    CHECK_THROWS_AS(series_inverse(S({0, 1}, 3)), Error);
  }

  TEST_CASE("coefficients beyond the order are not readable") {
    const SeriesZ a = S({1, 2}, 1);
    CHECK(a[1] == 2);
    CHECK_THROWS_AS(a[2], Error);
    CHECK_THROWS_AS(a.equal_to_order(S({1, 2, 3}, 2), 2), Error);
  }

  TEST_CASE("shifts") {
    const SeriesZ a = S({0, 0, 3, 4}, 3);
    CHECK(a.div_z_pow(2) == S({3, 4}, 1));
    CHECK_THROWS_AS(a.div_z_pow(3), Error);
    CHECK(S({1, 2}, 1).times_z_pow(2) == S({0, 0, 1, 2}, 3));
    CHECK(S({1, 2, 3}, 2).negated_argument() == S({1, -2, 3}, 2));
  }

  TEST_CASE("integrality") {
    CHECK(S({1, 2}, 1).all_integral());
    SeriesZ h({Rational(1, 2)}, 0);
    CHECK_FALSE(h.all_integral());
    CHECK_THROWS_AS(h.to_integers(), Error);
  }

  TEST_CASE("unreduced rationals compare equal") {
    CHECK(SeriesZ({Rational(2, 2), Rational(-4, 6)}, 1) == SeriesZ({Rational(1), Rational(-2, 3)}, 1));
  }

  TEST_CASE("property: a * inverse(a) == 1") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
      SeriesZ a = random_series(rng, 8);
      if (sgn(a[0]) == 0) a = a + SeriesZ::one(8);
      CHECK((a * series_inverse(a)).equal_to_order(SeriesZ::one(8), 8));
    }
  }

  TEST_CASE("property: ring axioms") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
      const SeriesZ a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_SUITE("PolyWSeries") {
  TEST_CASE("linear case evaluates at w = 1") {
    // g = w - (1 + z)
    const PolyWSeries g({S({-1, -1}, 3), SeriesZ::one(3)}, 3);
    CHECK(g.is_monic());
    CHECK(polyw_eval(g, 1) == S({0, -1}, 3));
  }

  TEST_CASE("(w - 1)^2 vanishes at 1") {
    const PolyWSeries g({S({1}, 2), S({-2}, 2), S({1}, 2)}, 2);
    CHECK(polyw_eval(g, 1).is_zero());
    CHECK(polyw_eval(g, 3) == S({4}, 2));
  }

  TEST_CASE("product and degree") {
    const PolyWSeries a({S({-1}, 2), SeriesZ::one(2)}, 2);  // w - 1
    const PolyWSeries sq = a * a;
    CHECK(sq.degree() == 2);
    CHECK(sq == PolyWSeries({S({1}, 2), S({-2}, 2), S({1}, 2)}, 2));
    CHECK((sq - sq).degree() == -1);
  }

  TEST_CASE("common order") {
    CHECK_THROWS_AS(PolyWSeries({S({1}, 1)}, 3), Error);
    const PolyWSeries p({S({1, 2, 3}, 4), S({1}, 2)}, 2);
    CHECK(p.order() == 2);
    CHECK(p.coeff(0).order() == 2);
  }
}
