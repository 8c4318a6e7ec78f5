#include "tennisball/tennisball.h"

#include <algorithm>
#include <new>
#include <string>
#include <vector>

#include "tennisball/engines.hpp"
#include "tennisball/error.hpp"
#include "tennisball/game.hpp"
#include "tennisball/oracle.hpp"
#include "tennisball/pattern.hpp"
#include "tennisball/tutte.hpp"
#include "tennisball/verify.hpp"

struct tb_pattern {
  tennis::Pattern value;
};

struct tb_intseq {
  std::vector<std::string> values;
};

struct tb_poly {
  tennis::PolyXY value;
  std::vector<std::string> table;  // row-major decimal coefficients
  std::string text;
  std::string at_one;
};

struct tb_game {
  std::string count;
  std::vector<tennis::BallSet> sets;
};

struct tb_report {
  tennis::Report value;
};

namespace {

thread_local std::string g_last_error;

tb_status fail(tb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

tb_status status_for(tennis::ErrorKind kind) {
  switch (kind) {
    case tennis::ErrorKind::InvalidArgument:
    case tennis::ErrorKind::Precondition:
      return TB_ERR_USAGE;
    case tennis::ErrorKind::CapExceeded:
      return TB_ERR_CAP;
    case tennis::ErrorKind::Internal:
      return TB_ERR_VERIFICATION;
  }
  return TB_ERR_VERIFICATION;
}

// Runs body and converts exceptions into status codes.
template <typename F>
tb_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const tennis::Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TB_ERR_CAP, "out of memory");
  } catch (const std::exception& e) {
    return fail(TB_ERR_VERIFICATION, e.what());
  }
}

tennis::Caps to_caps(const tb_caps* caps) {
  if (!caps) return {};
  return {caps->max_bruteforce_steps, caps->max_game_balls};
}

tennis::Engine to_engine(tb_engine e) {
  switch (e) {
    case TB_ENGINE_RECURSION:
      return tennis::Engine::Recursion;
    case TB_ENGINE_ALGEBRAIC:
      return tennis::Engine::Algebraic;
    case TB_ENGINE_BRUTEFORCE:
      return tennis::Engine::Bruteforce;
    case TB_ENGINE_GAME:
      return tennis::Engine::Game;
  }
  tennis::throw_error(tennis::ErrorKind::InvalidArgument, "unknown engine");
}

tennis::GameSpec to_game(const unsigned* rounds, size_t count, unsigned turns) {
  if (!rounds || count == 0 || count % 2 != 0) {
    tennis::throw_error(tennis::ErrorKind::InvalidArgument,
                        "rounds need an even, nonzero number of entries (s1,t1,...)");
  }
  tennis::GameSpec spec;
  spec.turns = turns;
  for (size_t i = 0; i < count; i += 2) spec.rounds.push_back({rounds[i], rounds[i + 1]});
  spec.validate();
  return spec;
}

tb_poly* make_poly(tennis::PolyXY p) {
  auto* out = new tb_poly{std::move(p), {}, {}, {}};
  const auto& v = out->value;
  out->table.reserve(v.rows() * v.cols());
  for (size_t i = 0; i < v.rows(); ++i)
    for (size_t j = 0; j < v.cols(); ++j) out->table.push_back(v.coeff(i, j).get_str());
  out->text = v.to_string();
  out->at_one = v.eval(1, 1).get_str();
  return out;
}

tb_status null_arg(const char* what) {
  return fail(TB_ERR_USAGE, std::string("null argument: ") + what);
}

}  // namespace

extern "C" {

TB_API const char* tb_version(void) { return "0.1.0"; }

TB_API const char* tb_last_error(void) { return g_last_error.c_str(); }

TB_API const char* tb_status_string(tb_status status) {
  switch (status) {
    case TB_OK:
      return "ok";
    case TB_ERR_USAGE:
      return "usage error";
    case TB_ERR_VERIFICATION:
      return "verification failure";
    case TB_ERR_CAP:
      return "resource cap exceeded";
  }
  return "unknown status";
}

TB_API tb_caps tb_caps_default(void) {
  const tennis::Caps c;
  return {c.max_bruteforce_steps, c.max_game_balls};
}

TB_API tb_caps tb_caps_unlimited(void) {
  const tennis::Caps c = tennis::Caps::unlimited();
  return {c.max_bruteforce_steps, c.max_game_balls};
}

TB_API tb_status tb_engine_parse(const char* name, tb_engine* out) {
  if (!name || !out) return null_arg("engine name");
  const auto e = tennis::parse_engine(name);
  if (!e) {
    return fail(TB_ERR_USAGE, std::string("unknown engine \"") + name +
                                  "\" (expected recursion, algebraic, bruteforce or game)");
  }
  *out = static_cast<tb_engine>(static_cast<int>(*e));
  return TB_OK;
}

TB_API tb_status tb_pattern_parse(const char* text, tb_pattern** out) {
  if (!text || !out) return null_arg("pattern");
  return guarded([&] {
    *out = new tb_pattern{tennis::Pattern::parse(text)};
    return TB_OK;
  });
}

TB_API tb_status tb_pattern_create(const unsigned* values, size_t count, tb_pattern** out) {
  if (!out || (!values && count)) return null_arg("pattern values");
  return guarded([&] {
    *out = new tb_pattern{tennis::Pattern::from_flat({values, count})};
    return TB_OK;
  });
}

TB_API void tb_pattern_destroy(tb_pattern* pattern) { delete pattern; }

TB_API size_t tb_pattern_block_count(const tb_pattern* pattern) {
  return pattern ? pattern->value.block_count() : 0;
}

TB_API tb_status tb_pattern_block(const tb_pattern* pattern, size_t index, unsigned* k,
                                  unsigned* l) {
  if (!pattern || !k || !l) return null_arg("pattern block");
  if (index >= pattern->value.block_count()) return fail(TB_ERR_USAGE, "block index out of range");
  *k = pattern->value.blocks()[index].k;
  *l = pattern->value.blocks()[index].l;
  return TB_OK;
}

TB_API tb_status tb_series(const tb_pattern* pattern, size_t order, tb_engine engine,
                           const tb_caps* caps, tb_intseq** out) {
  if (!pattern || !out) return null_arg("series");
  return guarded([&] {
    const auto values =
        tennis::series_by_engine(pattern->value, order, to_engine(engine), to_caps(caps));
    *out = new tb_intseq{tennis::to_decimal(values)};
    return TB_OK;
  });
}

TB_API size_t tb_intseq_size(const tb_intseq* seq) { return seq ? seq->values.size() : 0; }

TB_API const char* tb_intseq_get(const tb_intseq* seq, size_t index) {
  if (!seq || index >= seq->values.size()) return nullptr;
  return seq->values[index].c_str();
}

TB_API void tb_intseq_destroy(tb_intseq* seq) { delete seq; }

TB_API tb_status tb_tutte(const tb_pattern* pattern, size_t n, tb_poly** out) {
  if (!pattern || !out) return null_arg("tutte");
  return guarded([&] {
    *out = make_poly(tennis::tutte_sequence(pattern->value, n).polys.back());
    return TB_OK;
  });
}

TB_API tb_status tb_tutte_path(const char* steps, tb_poly** out) {
  if (!steps || !out) return null_arg("path");
  return guarded([&] {
    *out = make_poly(tennis::tutte_of_path(tennis::LatticePath::parse(steps)));
    return TB_OK;
  });
}

TB_API tb_status tb_tutte_bruteforce(const char* steps, const tb_caps* caps, tb_poly** out) {
  if (!steps || !out) return null_arg("path");
  return guarded([&] {
    const auto path = tennis::LatticePath::parse(steps);
    const auto c = to_caps(caps);
    if (path.size() > c.max_bruteforce_steps) {
      return fail(TB_ERR_CAP, "path of " + std::to_string(path.size()) +
                                  " steps exceeds the brute-force cap of " +
                                  std::to_string(c.max_bruteforce_steps));
    }
    *out = make_poly(tennis::tutte_bruteforce(path));
    return TB_OK;
  });
}

TB_API size_t tb_poly_rows(const tb_poly* poly) { return poly ? poly->value.rows() : 0; }
TB_API size_t tb_poly_cols(const tb_poly* poly) { return poly ? poly->value.cols() : 0; }

TB_API const char* tb_poly_coeff(const tb_poly* poly, size_t i, size_t j) {
  if (!poly) return nullptr;
  if (i >= poly->value.rows() || j >= poly->value.cols()) return "0";
  return poly->table[i * poly->value.cols() + j].c_str();
}

TB_API const char* tb_poly_to_string(const tb_poly* poly) {
  return poly ? poly->text.c_str() : nullptr;
}

TB_API const char* tb_poly_value_at_one(const tb_poly* poly) {
  return poly ? poly->at_one.c_str() : nullptr;
}

TB_API void tb_poly_destroy(tb_poly* poly) { delete poly; }

TB_API tb_status tb_game_run(const unsigned* rounds, size_t count, unsigned turns,
                             const tb_caps* caps, int keep_sets, tb_game** out) {
  if (!out) return null_arg("game");
  return guarded([&] {
    const auto spec = to_game(rounds, count, turns);
    auto sets = tennis::game_outside_sets(spec, to_caps(caps));
    auto* g = new tb_game{std::to_string(sets.size()), {}};
    if (keep_sets) g->sets = std::move(sets);
    *out = g;
    return TB_OK;
  });
}

TB_API const char* tb_game_count(const tb_game* game) {
  return game ? game->count.c_str() : nullptr;
}

TB_API size_t tb_game_set_count(const tb_game* game) { return game ? game->sets.size() : 0; }

TB_API const unsigned* tb_game_set(const tb_game* game, size_t index, size_t* size) {
  if (!game || !size || index >= game->sets.size()) return nullptr;
  *size = game->sets[index].size();
  return game->sets[index].data();
}

TB_API void tb_game_destroy(tb_game* game) { delete game; }

TB_API tb_status tb_verify_engines(unsigned kmax, unsigned lmax, size_t nmax,
                                   const tb_caps* caps, tb_report** out) {
  if (!out) return null_arg("report");
  return guarded([&] {
    *out = new tb_report{tennis::verify_engines(kmax, lmax, nmax, to_caps(caps))};
    return TB_OK;
  });
}

TB_API tb_status tb_verify_bivariate(unsigned k, unsigned l, size_t order, tb_report** out) {
  if (!out) return null_arg("report");
  return guarded([&] {
    if (k == 0 || l == 0) return fail(TB_ERR_USAGE, "k and l must be positive");
    *out = new tb_report{tennis::verify_bivariate(k, l, order)};
    return TB_OK;
  });
}

TB_API tb_status tb_verify_game(const unsigned* rounds, size_t count, unsigned turns,
                                const tb_caps* caps, tb_report** out) {
  if (!out) return null_arg("report");
  return guarded([&] {
    const auto spec = to_game(rounds, count, turns);
    const auto c = to_caps(caps);
    if (spec.total_balls() > std::min(c.max_game_balls, tennis::Caps::kGameBallLimit)) {
      return fail(TB_ERR_CAP, "game with s*n = " + std::to_string(spec.total_balls()) +
                                  " exceeds the cap");
    }
    *out = new tb_report{tennis::verify_game(spec, c)};
    return TB_OK;
  });
}

TB_API tb_status tb_verify_oracle(size_t max_steps, tb_report** out) {
  if (!out) return null_arg("report");
  return guarded([&] {
    if (max_steps > 20) return fail(TB_ERR_CAP, "exhaustive oracle check is capped at 20 steps");
    *out = new tb_report{tennis::verify_oracle(max_steps)};
    return TB_OK;
  });
}

TB_API size_t tb_report_size(const tb_report* report) {
  return report ? report->value.checks.size() : 0;
}

TB_API int tb_report_passed(const tb_report* report) {
  return report && report->value.passed() ? 1 : 0;
}

TB_API tb_status tb_report_check(const tb_report* report, size_t index, const char** name,
                                 int* passed, const char** detail) {
  if (!report) return null_arg("report");
  if (index >= report->value.checks.size()) return fail(TB_ERR_USAGE, "check index out of range");
  const auto& c = report->value.checks[index];
  if (name) *name = c.name.c_str();
  if (passed) *passed = c.passed ? 1 : 0;
  if (detail) *detail = c.detail.c_str();
  return TB_OK;
}

TB_API void tb_report_destroy(tb_report* report) { delete report; }

}  // extern "C"
