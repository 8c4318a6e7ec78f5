#include "tennisball/game.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "tennisball/error.hpp"

namespace tennis {

unsigned GameSpec::balls_per_turn() const noexcept {
  unsigned s = 0;
  for (const auto& r : rounds) s += r.s;
  return s;
}

unsigned GameSpec::removed_per_turn() const noexcept {
  unsigned t = 0;
  for (const auto& r : rounds) t += r.t;
  return t;
}

void GameSpec::validate() const {
  if (rounds.empty()) throw_error(ErrorKind::InvalidArgument, "game has no rounds");
  for (const auto& r : rounds) {
    if (r.t == 0 || r.t >= r.s) {
      throw_error(ErrorKind::InvalidArgument,
                  "each round needs 1 <= t < s, got s=" + std::to_string(r.s) +
                      " t=" + std::to_string(r.t));
    }
  }
}

namespace {

using Mask = std::uint64_t;

// Calls f(mask | chosen) for every t-subset `chosen` of the bits in pool.
template <typename F>
void for_each_subset(Mask pool, unsigned t, Mask chosen, F&& f) {
  if (t == 0) {
    f(chosen);
    return;
  }
  if (static_cast<unsigned>(std::popcount(pool)) < t) return;
  const Mask low = pool & (~pool + 1);
  for_each_subset(pool & ~low, t - 1, chosen | low, f);
  for_each_subset(pool & ~low, t, chosen, f);
}

void check_caps(const GameSpec& spec, const Caps& caps) {
  const unsigned balls = spec.total_balls();
  const unsigned limit = std::min(caps.max_game_balls, Caps::kGameBallLimit);
  if (balls > limit) {
    throw_error(ErrorKind::CapExceeded,
                "game with s*n = " + std::to_string(balls) +
                    " balls exceeds the cap of " + std::to_string(limit));
  }
}

std::vector<Mask> reachable_masks(const GameSpec& spec, const Caps& caps) {
  spec.validate();
  check_caps(spec, caps);
  // Bit b-1 stands for ball b. A state is the outside-set; the basket is
  // every inserted ball not outside.
  std::unordered_set<Mask> states{0};
  unsigned inserted = 0;
  for (unsigned turn = 0; turn < spec.turns; ++turn) {
    for (const Round& r : spec.rounds) {
      inserted += r.s;
      const Mask in_play = inserted >= 64 ? ~Mask{0} : (Mask{1} << inserted) - 1;
      std::unordered_set<Mask> next;
      for (Mask outside : states) {
        for_each_subset(in_play & ~outside, r.t, outside,
                        [&](Mask m) { next.insert(m); });
      }
      states = std::move(next);
    }
  }
  std::vector<Mask> out(states.begin(), states.end());
  return out;
}

BallSet mask_to_set(Mask m) {
  BallSet s;
  while (m) {
    s.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
    m &= m - 1;
  }
  return s;
}

}  // namespace

std::vector<BallSet> game_outside_sets(const GameSpec& spec, const Caps& caps) {
  std::vector<BallSet> sets;
  for (Mask m : reachable_masks(spec, caps)) sets.push_back(mask_to_set(m));
  std::sort(sets.begin(), sets.end());
  return sets;
}

BigInt game_count(const GameSpec& spec, const Caps& caps) {
  return BigInt(static_cast<unsigned long>(reachable_masks(spec, caps).size()));
}

LatticePath ball_set_to_path(const BallSet& outside, const GameSpec& spec) {
  spec.validate();
  const unsigned total = spec.total_balls();
  const std::size_t expected = std::size_t{spec.removed_per_turn()} * spec.turns;
  if (outside.size() != expected) {
    throw_error(ErrorKind::InvalidArgument,
                "outside-set has " + std::to_string(outside.size()) +
                    " balls, expected t*n = " + std::to_string(expected));
  }
  std::vector<bool> is_out(total + 1, false);
  for (unsigned b : outside) {
    if (b < 1 || b > total || is_out[b]) {
      throw_error(ErrorKind::InvalidArgument,
                  "ball label " + std::to_string(b) + " is out of range 1.." +
                      std::to_string(total) + " or repeated");
    }
    is_out[b] = true;
  }
  std::vector<Step> steps(total);
  for (unsigned p = 1; p <= total; ++p) steps[p - 1] = is_out[total - p + 1] ? Step::N : Step::E;
  return LatticePath(std::move(steps));
}

Pattern pattern_for_game(const GameSpec& spec) {
  spec.validate();
  std::vector<Block> blocks;
  for (auto it = spec.rounds.rbegin(); it != spec.rounds.rend(); ++it)
    blocks.push_back({it->t, it->s - it->t});
  return Pattern(std::move(blocks));
}

GameSpec game_for_pattern(const Pattern& pattern, unsigned turns) {
  GameSpec spec;
  spec.turns = turns;
  const auto& b = pattern.blocks();
  for (auto it = b.rbegin(); it != b.rend(); ++it) spec.rounds.push_back({it->k + it->l, it->k});
  return spec;
}

}  // namespace tennis
