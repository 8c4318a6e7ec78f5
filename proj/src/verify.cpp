#include "tennisball/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tennisball/algebraic.hpp"
#include "tennisball/error.hpp"
#include "tennisball/oracle.hpp"
#include "tennisball/tutte.hpp"

namespace tennis {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += ',';
    s += x.get_str();
  }
  return s;
}

std::string kl_name(const char* what, unsigned k, unsigned l) {
  return std::string(what) + " (" + std::to_string(k) + "," + std::to_string(l) + ")";
}

// Runs body, turning a library exception into a failed check.
template <typename F>
CheckResult guarded(std::string name, F&& body) {
  try {
    return body(std::move(name));
  } catch (const Error& e) {
    return {std::move(name), false, std::string("error: ") + e.what()};
  }
}

}  // namespace

Report verify_engines(unsigned kmax, unsigned lmax, std::size_t nmax, const Caps& caps) {
  Report report;
  for (unsigned k = 1; k <= kmax; ++k) {
    for (unsigned l = 1; l <= lmax; ++l) {
      const Pattern pat(k, l);
      const TutteSequence seq = tutte_sequence(pat, nmax);

      report.checks.push_back(guarded(kl_name("engines", k, l), [&](std::string name) {
        const auto alg = q_series_algebraic(k, l, nmax).to_integers();
        if (alg == seq.counts) return CheckResult{name, true, join(seq.counts)};
        return CheckResult{name, false,
                           "recursion " + join(seq.counts) + " vs algebraic " + join(alg)};
      }));

      if (k < l) {
        report.checks.push_back(guarded(kl_name("symmetry", k, l), [&](std::string name) {
          const auto swapped = count_series(Pattern(l, k), nmax);
          const auto swapped_alg = q_series_algebraic(l, k, nmax).to_integers();
          if (swapped == seq.counts && swapped_alg == seq.counts)
            return CheckResult{name, true, join(seq.counts)};
          return CheckResult{name, false,
                             "(k,l) " + join(seq.counts) + " vs (l,k) recursion " +
                                 join(swapped) + ", algebraic " + join(swapped_alg)};
        }));
      }

      report.checks.push_back(guarded(kl_name("incremental", k, l), [&](std::string name) {
        for (std::size_t n = 0; n <= nmax; ++n) {
          const PolyXY direct = tutte_of_path(pat.boundary(n));
          if (!(direct == seq.polys[n])) {
            return CheckResult{name, false,
                               "n=" + std::to_string(n) + ": step-by-step " +
                                   direct.to_string() + " vs blockwise " +
                                   seq.polys[n].to_string()};
          }
        }
        return CheckResult{name, true, "n<=" + std::to_string(nmax)};
      }));

      report.checks.push_back(guarded(kl_name("bruteforce", k, l), [&](std::string name) {
        std::size_t checked = 0;
        for (std::size_t n = 0; n <= nmax; ++n) {
          const LatticePath p = pat.boundary(n);
          if (p.size() > caps.max_bruteforce_steps) break;
          const PolyXY bf = tutte_bruteforce(p);
          if (!(bf == seq.polys[n])) {
            return CheckResult{name, false,
                               "n=" + std::to_string(n) + ": brute force " + bf.to_string() +
                                   " vs recursion " + seq.polys[n].to_string()};
          }
          ++checked;
        }
        std::string detail = "n<=" + std::to_string(checked ? checked - 1 : 0);
        if (checked <= nmax) detail += " (larger n beyond the brute-force cap)";
        return CheckResult{name, true, detail};
      }));
    }
  }
  return report;
}

Report verify_bivariate(unsigned k, unsigned l, std::size_t order) {
  Report report;
  report.checks.push_back(guarded(kl_name("bivariate identity", k, l), [&](std::string name) {
    const IdentityCheck c = verify_bivariate_identity(k, l, order);
    return CheckResult{name, c.holds, c.detail};
  }));
  report.checks.push_back(guarded(kl_name("bivariate at x=y=1", k, l), [&](std::string name) {
    const auto spec = bivariate_specialization(k, l, order).to_integers();
    const auto rec = count_series(Pattern(k, l), order);
    if (spec == rec) return CheckResult{name, true, join(rec)};
    return CheckResult{name, false, "specialization " + join(spec) + " vs recursion " + join(rec)};
  }));
  return report;
}

Report verify_game(const GameSpec& spec, const Caps& caps) {
  Report report;
  report.checks.push_back(guarded("game count", [&](std::string name) {
    const BigInt game = game_count(spec, caps);
    const BigInt paths = count_series(pattern_for_game(spec), spec.turns).back();
    std::string detail = game.get_str() + " = " + paths.get_str();
    if (game == paths) return CheckResult{name, true, detail};
    return CheckResult{name, false, game.get_str() + " != " + paths.get_str()};
  }));
  report.checks.push_back(guarded("game bijection", [&](std::string name) {
    const LatticePath boundary = pattern_for_game(spec).boundary(spec.turns);
    std::set<LatticePath> mapped;
    for (const auto& set : game_outside_sets(spec, caps)) {
      LatticePath p = ball_set_to_path(set, spec);
      if (!below(p, boundary)) {
        return CheckResult{name, false,
                           "reachable set maps to " + p.to_string() + ", above " +
                               boundary.to_string()};
      }
      mapped.insert(std::move(p));
    }
    const auto all = enumerate_below(boundary);
    if (mapped.size() != all.size()) {
      for (const auto& p : all)
        if (!mapped.count(p))
          return CheckResult{name, false, "path " + p.to_string() + " has no reachable set"};
    }
    return CheckResult{name, true, std::to_string(all.size()) + " sets <-> paths"};
  }));
  return report;
}

Report verify_oracle(std::size_t max_steps) {
  Report report;
  for (std::size_t len = 0; len <= max_steps; ++len) {
    report.checks.push_back(guarded("oracle paths of length " + std::to_string(len),
                                    [&](std::string name) {
      const std::size_t total = std::size_t{1} << len;
      for (std::size_t bits = 0; bits < total; ++bits) {
        std::vector<Step> steps(len);
        for (std::size_t i = 0; i < len; ++i) steps[i] = (bits >> i) & 1 ? Step::E : Step::N;
        const LatticePath p(std::move(steps));
        const PolyXY bf = tutte_bruteforce(p);
        const PolyXY inc = tutte_of_path(p);
        if (!(bf == inc)) {
          return CheckResult{name, false,
                             p.to_string() + ": brute force " + bf.to_string() +
                                 " vs step-by-step " + inc.to_string()};
        }
        if (bf.eval(1, 1) != count_below_dp(p)) {
          return CheckResult{name, false, p.to_string() + ": DP count disagrees"};
        }
      }
      return CheckResult{name, true, std::to_string(total) + " paths"};
    }));
  }
  return report;
}

}  // namespace tennis
