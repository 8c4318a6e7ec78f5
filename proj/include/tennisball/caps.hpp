#pragma once

namespace tennis {

/// Desk-scale limits on the exponential engines.
struct Caps {
  /// Longest boundary path the enumeration engine will walk.
  unsigned max_bruteforce_steps = 16;
  /// Largest s*n the ball-game simulation will attempt.
  unsigned max_game_balls = 20;

  /// Hard ceiling regardless of caps: outside-sets are 64-bit masks.
  static constexpr unsigned kGameBallLimit = 64;

  static Caps unlimited() { return Caps{~0u, kGameBallLimit}; }
};

}  // namespace tennis
