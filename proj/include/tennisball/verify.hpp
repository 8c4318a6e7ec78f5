#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tennisball/caps.hpp"
#include "tennisball/game.hpp"

namespace tennis {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample on failure
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  void append(const Report& other);
};

/// For every (k, l) in [1..kmax] x [1..lmax]: recursion vs algebraic series,
/// (k,l)/(l,k) symmetry, blockwise vs step-by-step Tutte polynomials, and
/// the brute-force Tutte polynomial wherever P_n fits in the caps.
Report verify_engines(unsigned kmax, unsigned lmax, std::size_t nmax, const Caps& caps = {});

/// Bivariate generating-function identity to z^order plus its x = y = 1
/// specialization against the recursion counts.
Report verify_bivariate(unsigned k, unsigned l, std::size_t order);

/// Game count against the path count, and the outside-set <-> path
/// bijection.
Report verify_game(const GameSpec& spec, const Caps& caps = {});

/// Exhaustive over every boundary path of at most max_steps steps:
/// incremental vs brute-force Tutte polynomial and DP vs enumeration counts.
Report verify_oracle(std::size_t max_steps);

}  // namespace tennis
