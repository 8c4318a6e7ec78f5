#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tennisball/engines.hpp"
#include "tennisball/error.hpp"
#include "tennisball/verify.hpp"

using namespace tennis;

namespace {

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.passed) s += c.name + ": " + c.detail + "\n";
  return s;
}

}  // namespace

TEST_CASE("verify_engines over a small grid") {
  const Report r = verify_engines(3, 3, 4);
  CAPTURE(failures(r));
  CHECK(r.passed());
  // engines + incremental + bruteforce for 9 pairs, symmetry for the 3 with k < l.
  CHECK(r.checks.size() == 9 * 3 + 3);
}

TEST_CASE("brute-force check respects the cap") {
  Caps caps;
  caps.max_bruteforce_steps = 4;
  const Report r = verify_engines(2, 2, 3, caps);
  CHECK(r.passed());
  bool noted = false;
  for (const auto& c : r.checks)
    if (c.name == "bruteforce (2,2)") noted = c.detail.find("cap") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("verify_bivariate") {
  for (auto [k, l] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 2}, {3, 1}}) {
    const Report r = verify_bivariate(k, l, 4);
    CAPTURE(failures(r));
    CHECK(r.passed());
    CHECK(r.checks.size() == 2);
  }
}

TEST_CASE("verify_game") {
  const Report r = verify_game(GameSpec{{{3, 1}, {2, 1}}, 2});
  CAPTURE(failures(r));
  CHECK(r.passed());
  CHECK(r.checks.size() == 2);

  // Over the cap: reported as failed checks, not thrown.
  const Report big = verify_game(GameSpec{{{4, 2}}, 6});
  CHECK_FALSE(big.passed());
  CHECK(big.checks[0].detail.find("error") != std::string::npos);
}

TEST_CASE("verify_oracle") {
  const Report r = verify_oracle(10);
  CHECK(r.passed());
  CHECK(r.checks.size() == 11);
  CHECK(r.checks.back().detail == "1024 paths");
}

TEST_CASE("Report::append") {
  Report a = verify_oracle(1);
  const std::size_t before = a.checks.size();
  a.append(Report{{CheckResult{"x", false, "d"}}});
  CHECK(a.checks.size() == before + 1);
  CHECK_FALSE(a.passed());
}

TEST_CASE("series_by_engine") {
  const Pattern p(2, 2);
  const Caps caps;
  const auto rec = series_by_engine(p, 3, Engine::Recursion, caps);
  CHECK(series_by_engine(p, 3, Engine::Algebraic, caps) == rec);
  CHECK(series_by_engine(p, 3, Engine::Bruteforce, caps) == rec);
  CHECK(series_by_engine(p, 3, Engine::Game, caps) == rec);
  CHECK_THROWS_AS(series_by_engine(Pattern::parse("2,2,1,1"), 3, Engine::Algebraic, caps), Error);
  try {
    series_by_engine(p, 5, Engine::Bruteforce, caps);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK(parse_engine("game") == Engine::Game);
  CHECK(engine_name(Engine::Algebraic) == std::string("algebraic"));
  CHECK_FALSE(parse_engine("magic").has_value());
}
