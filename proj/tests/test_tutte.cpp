#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tennisball/error.hpp"
#include "tennisball/oracle.hpp"
#include "tennisball/tutte.hpp"

using namespace tennis;

namespace {

const PolyXY X = PolyXY::x();
const PolyXY Y = PolyXY::y();
const PolyXY ONE = PolyXY::one();

std::vector<BigInt> ints(std::initializer_list<const char*> values) {
  std::vector<BigInt> out;
  for (const char* v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("phi") {
  CHECK(phi(ONE) == Y);
  CHECK(phi(X) == X + Y);
  CHECK(phi(phi(X * X)) == X * X + X.scaled(2) + Y.scaled(2) + Y * Y);
}

TEST_CASE("phi does not commute with evaluation at (1,1)") {
  CHECK(phi(X).eval(1, 1) == 2);
  CHECK(X.eval(1, 1) == 1);
}

TEST_CASE("tutte_step") {
  CHECK(tutte_step(ONE, Step::N) == X);
  CHECK(tutte_step(X, Step::E) == X + Y);
  PolyXY t = ONE;
  for (int i = 0; i < 5; ++i) t = tutte_step(t, Step::N);
  CHECK(t == PolyXY::monomial(1, 5, 0));
}

TEST_CASE("tutte_of_path") {
  CHECK(tutte_of_path(LatticePath::parse("NE")) == X + Y);
  CHECK(tutte_of_path(LatticePath{}) == ONE);
  const PolyXY t = tutte_of_path(LatticePath::parse("NNEE"));
  CHECK(t == tutte_bruteforce(LatticePath::parse("NNEE")));
  CHECK(t == X * X + X.scaled(2) + Y.scaled(2) + Y * Y);
  CHECK(t.eval(1, 1) == 6);
}

TEST_CASE("advance_block") {
  CHECK(advance_block(ONE, 1, 1) == tutte_of_path(LatticePath::parse("NE")));
  CHECK(advance_block(ONE, 2, 2) == X * X + X.scaled(2) + Y.scaled(2) + Y * Y);
}

TEST_CASE("Pattern validation") {
  CHECK_THROWS_AS(Pattern(2, 0), Error);
  CHECK_THROWS_AS(Pattern(std::vector<Block>{}), Error);
  CHECK_THROWS_AS(Pattern::parse("2,2,1"), Error);
  CHECK_THROWS_AS(Pattern::parse("2,x"), Error);
  CHECK_THROWS_AS(Pattern::parse(""), Error);
  CHECK_THROWS_AS(Pattern::parse("2,2,"), Error);
  CHECK_THROWS_AS(Pattern::parse("0,1"), Error);
  const Pattern p = Pattern::parse("2,2,1,1");
  CHECK(p.block_count() == 2);
  CHECK(p.total_k() == 3);
  CHECK(p.total_l() == 3);
  CHECK(p.boundary(2).to_string() == "NNEENENNEENE");
  CHECK(p.to_string() == "2,2,1,1");
}

TEST_CASE("tutte_sequence counts") {
  // (2,2): exhaustive enumeration of paths below (N^2E^2)^n gives 6362 at n = 4.
  CHECK(count_series(Pattern(2, 2), 4) == ints({"1", "6", "53", "554", "6362"}));
  CHECK(count_series(Pattern(3, 3), 5) ==
        ints({"1", "20", "662", "26780", "1205961", "58050204"}));
  CHECK(count_series(Pattern::parse("2,2,1,1"), 5) ==
        ints({"1", "16", "503", "19904", "885500", "42298944"}));
  CHECK(count_series(Pattern(4, 2), 5) ==
        ints({"1", "15", "360", "10463", "337269", "11599668"}));
  CHECK(count_series(Pattern(1, 1), 4) == ints({"1", "2", "5", "14", "42"}));
  CHECK(count_series(Pattern(1, 2), 4) == ints({"1", "3", "12", "55", "273"}));
}

TEST_CASE("tutte_sequence invariants") {
  const TutteSequence seq = tutte_sequence(Pattern::parse("2,1,1,3"), 4);
  REQUIRE(seq.polys.size() == 5);
  CHECK(seq.polys[0] == ONE);
  for (std::size_t n = 0; n < seq.polys.size(); ++n) {
    CHECK(seq.counts[n] == seq.polys[n].eval(1, 1));
    CHECK(seq.polys[n].all_coefficients_nonnegative());
  }
  CHECK(count_series(Pattern(3, 2), 0) == ints({"1"}));
}

TEST_CASE("property: recursion matches brute-force Tutte polynomial") {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned l = 1; l <= 3; ++l) {
      const Pattern pat(k, l);
      const TutteSequence seq = tutte_sequence(pat, 3);
      for (std::size_t n = 0; n <= 3; ++n) {
        CAPTURE(k);
        CAPTURE(l);
        CAPTURE(n);
        CHECK(seq.polys[n] == tutte_bruteforce(pat.boundary(n)));
      }
    }
}

TEST_CASE("property: multi-block recursion matches brute force and step-by-step") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<unsigned> part(1, 2), blocks(2, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Block> b(blocks(rng));
    for (auto& blk : b) blk = {part(rng), part(rng)};
    const Pattern pat(b);
    const std::size_t n_max = pat.period() <= 6 ? 2 : 1;
    const TutteSequence seq = tutte_sequence(pat, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      CAPTURE(pat.to_string());
      CAPTURE(n);
      CHECK(seq.polys[n] == tutte_of_path(pat.boundary(n)));
      CHECK(seq.polys[n] == tutte_bruteforce(pat.boundary(n)));
    }
  }
}

TEST_CASE("property: pattern (1,l) gives Fuss-Catalan numbers") {
  // q_n = C((l+1)(n+1), n+1) / (l(n+1) + 1), checked against enumeration.
  for (unsigned l = 1; l <= 4; ++l) {
    const auto q = count_series(Pattern(1, l), 6);
    for (unsigned n = 0; n <= 6; ++n) {
      const unsigned m = n + 1;
      BigInt expect = binomial((l + 1) * m, m);
      CHECK(expect % (l * m + 1) == 0);
      expect /= (l * m + 1);
      CAPTURE(l);
      CAPTURE(n);
      CHECK(q[n] == expect);
      if ((l + 1) * n <= 12) CHECK(count_below_dp(Pattern(1, l).boundary(n)) == expect);
    }
  }
}
