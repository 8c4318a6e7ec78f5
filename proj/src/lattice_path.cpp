#include "tennisball/lattice_path.hpp"

#include <algorithm>

#include "tennisball/error.hpp"

namespace tennis {

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'N':
      case 'n':
        steps.push_back(Step::N);
        break;
      case 'E':
      case 'e':
        steps.push_back(Step::E);
        break;
      default:
        throw_error(ErrorKind::InvalidArgument,
                    std::string("invalid step '") + c + "' in path \"" +
                        std::string(text) + "\"");
    }
  }
  return LatticePath(std::move(steps));
}

std::size_t LatticePath::count_n() const noexcept {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::N));
}

std::vector<std::size_t> LatticePath::n_step_abscissae() const {
  std::vector<std::size_t> out;
  std::size_t x = 0;
  for (Step s : steps_) {
    if (s == Step::E)
      ++x;
    else
      out.push_back(x);
  }
  return out;
}

std::size_t LatticePath::leading_e() const noexcept {
  auto it = std::find(steps_.begin(), steps_.end(), Step::N);
  return static_cast<std::size_t>(it - steps_.begin());
}

LatticePath LatticePath::repeated(std::size_t times) const {
  std::vector<Step> out;
  out.reserve(steps_.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), steps_.begin(), steps_.end());
  return LatticePath(std::move(out));
}

std::string LatticePath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s.push_back(st == Step::N ? 'N' : 'E');
  return s;
}

}  // namespace tennis
