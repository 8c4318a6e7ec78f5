#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tennisball/lattice_path.hpp"

namespace tennis {

/// One N^k E^l block of a staircase boundary.
struct Block {
  unsigned k = 1;
  unsigned l = 1;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Staircase boundary (N^{k_1} E^{l_1} ... N^{k_r} E^{l_r})^n.
/// Every block has k >= 1 and l >= 1 and there is at least one block.
class Pattern {
 public:
  explicit Pattern(std::vector<Block> blocks);
  Pattern(unsigned k, unsigned l) : Pattern(std::vector<Block>{{k, l}}) {}

  /// "k1,l1,k2,l2,..." (flat comma list of positive integers, even length).
  static Pattern parse(std::string_view text);
  static Pattern from_flat(std::span<const unsigned> values);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  unsigned total_k() const noexcept;
  unsigned total_l() const noexcept;
  /// Number of steps in one period.
  unsigned period() const noexcept { return total_k() + total_l(); }

  /// The boundary path P_n.
  LatticePath boundary(std::size_t n) const;
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Block> blocks_;
};

}  // namespace tennis
