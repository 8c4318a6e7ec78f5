#include "tennisball/engines.hpp"

#include "tennisball/algebraic.hpp"
#include "tennisball/error.hpp"
#include "tennisball/game.hpp"
#include "tennisball/oracle.hpp"
#include "tennisball/tutte.hpp"

namespace tennis {

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "recursion") return Engine::Recursion;
  if (name == "algebraic") return Engine::Algebraic;
  if (name == "bruteforce") return Engine::Bruteforce;
  if (name == "game") return Engine::Game;
  return std::nullopt;
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Recursion:
      return "recursion";
    case Engine::Algebraic:
      return "algebraic";
    case Engine::Bruteforce:
      return "bruteforce";
    case Engine::Game:
      return "game";
  }
  return "unknown";
}

std::vector<BigInt> series_by_engine(const Pattern& pattern, std::size_t order,
                                     Engine engine, const Caps& caps) {
  switch (engine) {
    case Engine::Recursion:
      return count_series(pattern, order);

    case Engine::Algebraic: {
      if (pattern.block_count() != 1) {
        throw_error(ErrorKind::InvalidArgument,
                    "the algebraic engine needs a single-block pattern, got " +
                        pattern.to_string());
      }
      const Block b = pattern.blocks().front();
      return q_series_algebraic(b.k, b.l, order).to_integers();
    }

    case Engine::Bruteforce: {
      const std::size_t steps = std::size_t{pattern.period()} * order;
      if (steps > caps.max_bruteforce_steps) {
        throw_error(ErrorKind::CapExceeded,
                    "brute force needs a " + std::to_string(steps) +
                        "-step boundary, cap is " +
                        std::to_string(caps.max_bruteforce_steps));
      }
      std::vector<BigInt> out;
      for (std::size_t n = 0; n <= order; ++n)
        out.emplace_back(static_cast<unsigned long>(enumerate_below(pattern.boundary(n)).size()));
      return out;
    }

    case Engine::Game: {
      std::vector<BigInt> out;
      for (std::size_t n = 0; n <= order; ++n)
        out.push_back(game_count(game_for_pattern(pattern, static_cast<unsigned>(n)), caps));
      return out;
    }
  }
  throw_error(ErrorKind::InvalidArgument, "unknown engine");
}

}  // namespace tennis
