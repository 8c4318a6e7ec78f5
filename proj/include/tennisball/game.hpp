#pragma once

#include <cstddef>
#include <vector>

#include "tennisball/bigint.hpp"
#include "tennisball/caps.hpp"
#include "tennisball/lattice_path.hpp"
#include "tennisball/pattern.hpp"

namespace tennis {

/// One round of a turn: s balls go into the basket, then t are removed.
struct Round {
  unsigned s = 2;
  unsigned t = 1;

  friend bool operator==(const Round&, const Round&) = default;
};

/// The generalized tennis ball game: `turns` repetitions of the rounds.
struct GameSpec {
  std::vector<Round> rounds;
  unsigned turns = 0;

  unsigned balls_per_turn() const noexcept;
  unsigned removed_per_turn() const noexcept;
  unsigned total_balls() const noexcept { return balls_per_turn() * turns; }
  /// Throws ErrorKind::InvalidArgument unless rounds is nonempty and every
  /// round has 1 <= t < s.
  void validate() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

/// Ball labels are 1-based; each set is sorted ascending.
using BallSet = std::vector<unsigned>;

/// Every outside-set reachable after all turns, sorted lexicographically.
/// Throws ErrorKind::CapExceeded when s*n exceeds caps.max_game_balls.
std::vector<BallSet> game_outside_sets(const GameSpec& spec, const Caps& caps = {});

BigInt game_count(const GameSpec& spec, const Caps& caps = {});

/// Path of length s*n whose position p (1-based) is N iff ball s*n - p + 1
/// is outside. Throws ErrorKind::InvalidArgument on a wrong set size or a
/// label out of range.
LatticePath ball_set_to_path(const BallSet& outside, const GameSpec& spec);

/// Pattern whose boundary P_n characterises reachable outside-sets under
/// ball_set_to_path. Rounds map to blocks (k, l) = (t, s - t) in reverse
/// order, since the bijection reads labels backwards.
Pattern pattern_for_game(const GameSpec& spec);

/// Inverse of pattern_for_game.
GameSpec game_for_pattern(const Pattern& pattern, unsigned turns);

}  // namespace tennis
