#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tennisball/bigint.hpp"
#include "tennisball/caps.hpp"
#include "tennisball/pattern.hpp"

namespace tennis {

enum class Engine {
  Recursion,   // blockwise phi-recursion on Tutte polynomials
  Algebraic,   // Hensel factor of (w-1)^l - z w^(k+l); single block only
  Bruteforce,  // enumerate every path below P_n
  Game,        // simulate the ball game
};

std::optional<Engine> parse_engine(std::string_view name);
std::string_view engine_name(Engine e);

/// q_0 .. q_order from the chosen engine.
///
/// Throws ErrorKind::InvalidArgument for an algebraic request on a
/// multi-block pattern, and ErrorKind::CapExceeded when the brute-force or
/// game engine would exceed its cap.
std::vector<BigInt> series_by_engine(const Pattern& pattern, std::size_t order,
                                     Engine engine, const Caps& caps = {});

}  // namespace tennis
