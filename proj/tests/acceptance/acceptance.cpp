// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tennisball/algebraic.hpp"
#include "tennisball/engines.hpp"
#include "tennisball/error.hpp"
#include "tennisball/game.hpp"
#include "tennisball/oracle.hpp"
#include "tennisball/tutte.hpp"

using namespace tennis;

namespace {

using Seq = std::vector<BigInt>;

Seq ints(std::initializer_list<const char*> values) {
  Seq out;
  for (const char* v : values) out.emplace_back(v);
  return out;
}

std::string join(const Seq& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return s;
}

// Collects the first mismatch; later ones are dropped.
struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void expect_seq(const Seq& got, const Seq& want, const std::string& what) {
    expect(got == want, what + ": got " + join(got) + ", want " + join(want));
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;  // 0 means untimed
  std::function<Outcome()> body;
};

Seq prefix(const Seq& s, std::size_t n) { return Seq(s.begin(), s.begin() + static_cast<long>(n)); }

Outcome ac1() {
  Outcome o;
  const Seq want = ints({"1", "6", "53", "554", "6363"});
  o.expect_seq(count_series(Pattern(2, 2), 4), want, "recursion");
  o.expect_seq(q_series_algebraic(2, 2, 4).to_integers(), want, "algebraic");
  // Brute force fits the default cap up to n = 4 (16 steps).
  Seq bf;
  for (std::size_t n = 0; n <= 4; ++n) bf.push_back(count_below_dp(Pattern(2, 2).boundary(n)));
  Seq enumerated;
  for (std::size_t n = 0; n <= 4; ++n)
    enumerated.emplace_back(static_cast<unsigned long>(enumerate_below(Pattern(2, 2).boundary(n)).size()));
  o.expect_seq(enumerated, want, "brute-force enumeration");
  o.expect_seq(bf, want, "brute-force DP");
  Seq game;
  for (unsigned n = 0; n <= 3; ++n) game.push_back(game_count(GameSpec{{{4, 2}}, n}));
  o.expect_seq(game, prefix(want, 4), "game");
  return o;
}

Outcome two_engines(unsigned k, unsigned l, const Seq& want) {
  Outcome o;
  const std::size_t order = want.size() - 1;
  o.expect_seq(count_series(Pattern(k, l), order), want, "recursion");
  o.expect_seq(q_series_algebraic(k, l, order).to_integers(), want, "algebraic");
  return o;
}

Outcome ac4() {
  Outcome o;
  o.expect_seq(count_series(Pattern::parse("2,2,1,1"), 5),
               ints({"1", "16", "503", "19904", "885500", "42298944"}), "recursion");
  return o;
}

Outcome ac5() {
  Outcome o;
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned l = 1; l <= 4; ++l)
      o.expect_seq(q_series_algebraic(k, l, 6).to_integers(), count_series(Pattern(k, l), 6),
                   "(" + std::to_string(k) + "," + std::to_string(l) + ")");
  return o;
}

Outcome ac6() {
  Outcome o;
  for (std::size_t len = 0; len <= 12 && o.ok; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::vector<Step> s(len);
      for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> i) & 1 ? Step::E : Step::N;
      const LatticePath p(std::move(s));
      if (!(tutte_of_path(p) == tutte_bruteforce(p))) {
        o.expect(false, "path " + p.to_string());
        break;
      }
    }
  }
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned l = 1; l <= 3; ++l) {
      const TutteSequence seq = tutte_sequence(Pattern(k, l), 3);
      for (std::size_t n = 0; n <= 3; ++n)
        o.expect(seq.polys[n] == tutte_bruteforce(Pattern(k, l).boundary(n)),
                 "P_" + std::to_string(n) + " of (" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
  return o;
}

Outcome ac7() {
  Outcome o;
  Seq g42, g21;
  for (unsigned n = 0; n <= 3; ++n) g42.push_back(game_count(GameSpec{{{4, 2}}, n}));
  o.expect_seq(g42, ints({"1", "6", "53", "554"}), "game (4,2)");
  o.expect_seq(g42, count_series(Pattern(2, 2), 3), "game (4,2) vs paths");
  for (unsigned n = 0; n <= 4; ++n) g21.push_back(game_count(GameSpec{{{2, 1}}, n}));
  // C_{n+1} for n = 0..4.
  o.expect_seq(g21, ints({"1", "2", "5", "14", "42"}), "game (2,1)");
  return o;
}

Outcome ac8() {
  Outcome o;
  const PathStats s = path_stats(LatticePath::parse("EENNNEEEENNNNNEE"), Pattern(2, 2).boundary(4));
  o.expect(s == PathStats{3, 2}, "got i=" + std::to_string(s.i) + " e=" + std::to_string(s.e));
  return o;
}

Outcome ac9() {
  Outcome o;
  for (auto [k, l] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 2}, {3, 3}, {2, 1}, {4, 2}}) {
    const IdentityCheck c = verify_bivariate_identity(k, l, 5);
    o.expect(c.holds, "(" + std::to_string(k) + "," + std::to_string(l) + "): " + c.detail);
    o.expect_seq(bivariate_specialization(k, l, 5).to_integers(), count_series(Pattern(k, l), 5),
                 "specialization (" + std::to_string(k) + "," + std::to_string(l) + ")");
  }
  o.expect_seq(bivariate_specialization(1, 1, 5).to_integers(),
               ints({"1", "2", "5", "14", "42", "132"}), "specialization (1,1)");
  return o;
}

Outcome ac10() {
  Outcome o;
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned l = 1; l <= 4; ++l) {
      const std::string kl = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      o.expect_seq(count_series(Pattern(k, l), 6), count_series(Pattern(l, k), 6), "recursion " + kl);
      o.expect_seq(q_series_algebraic(k, l, 6).to_integers(), q_series_algebraic(l, k, 6).to_integers(),
                   "algebraic " + kl);
    }
  return o;
}

Outcome ac11() {
  Outcome o;
  o.expect_seq(odd_catalan_counts(6), count_series(Pattern(2, 2), 6), "odd Catalan vs (2,2)");
  for (unsigned l = 2; l <= 3; ++l) {
    // q_n(1, l) = GC_{l+1}[n + 1] and q_n(1, l - 1) = GC_l[n + 1].
    const Seq upper = generalized_catalan_series(l + 1, 7).to_integers();
    const Seq lower = generalized_catalan_series(l, 7).to_integers();
    o.expect_seq(Seq(upper.begin() + 1, upper.end()), count_series(Pattern(1, l), 6),
                 "GC(" + std::to_string(l + 1) + ") vs (1," + std::to_string(l) + ")");
    o.expect_seq(Seq(lower.begin() + 1, lower.end()), count_series(Pattern(1, l - 1), 6),
                 "GC(" + std::to_string(l) + ") vs (1," + std::to_string(l - 1) + ")");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "pattern (2,2) through all engines", 1.0, ac1},
      {"AC2", "pattern (3,3) recursion and algebraic", 1.0,
       [] { return two_engines(3, 3, ints({"1", "20", "662", "26780", "1205961", "58050204"})); }},
      {"AC3", "pattern (4,2) recursion and algebraic", 1.0,
       [] { return two_engines(4, 2, ints({"1", "15", "360", "10463", "337269", "11599668"})); }},
      {"AC4", "pattern (2,2,1,1) recursion", 1.0, ac4},
      {"AC5", "engine equivalence k,l <= 4 to order 6", 10.0, ac5},
      {"AC6", "Tutte oracle equivalence", 60.0, ac6},
      {"AC7", "game equivalence", 30.0, ac7},
      {"AC8", "path statistics regression", 0.0, ac8},
      {"AC9", "bivariate identity to order 5", 10.0, ac9},
      {"AC10", "(k,l) / (l,k) symmetry", 0.0, ac10},
      {"AC11", "odd and generalized Catalan constructions", 0.0, ac11},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.detail = "over the time limit of " + std::to_string(c.limit_s) + " s";
    }
    std::printf("%s %-5s %-45s %8.3fs%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.ok ? "" : "  ", o.detail.c_str());
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
