#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tennis {

enum class Step : unsigned char { N, E };

/// Sequence of unit steps N = (0,1) and E = (1,0) starting at the origin.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses a string over {'N','E'}; throws ErrorKind::InvalidArgument on any
  /// other character.
  static LatticePath parse(std::string_view text);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  std::size_t count_n() const noexcept;
  std::size_t count_e() const noexcept { return size() - count_n(); }

  /// Abscissa of each N step, in order: entry j is the number of E steps
  /// preceding the (j+1)-th N step.
  std::vector<std::size_t> n_step_abscissae() const;

  /// Number of E steps before the first N step.
  std::size_t leading_e() const noexcept;

  LatticePath repeated(std::size_t times) const;
  void append(Step s) { steps_.push_back(s); }
  void append(Step s, std::size_t times) { steps_.insert(steps_.end(), times, s); }

  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

}  // namespace tennis
