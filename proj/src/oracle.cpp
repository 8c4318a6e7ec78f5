#include "tennisball/oracle.hpp"

#include <map>

#include "tennisball/error.hpp"

namespace tennis {

namespace {

void require_same_endpoints(const LatticePath& pi, const LatticePath& boundary) {
  if (pi.count_n() != boundary.count_n() || pi.count_e() != boundary.count_e()) {
    throw_error(ErrorKind::Precondition,
                "paths " + pi.to_string() + " and " + boundary.to_string() +
                    " have different endpoints");
  }
}

struct Enumerator {
  const std::vector<std::size_t>& bound;
  std::size_t width;
  std::vector<LatticePath>& out;
  std::vector<Step> current;

  void walk(std::size_t placed_n, std::size_t x) {
    if (placed_n == bound.size() && x == width) {
      out.emplace_back(current);
      return;
    }
    if (placed_n < bound.size() && x >= bound[placed_n]) {
      current.push_back(Step::N);
      walk(placed_n + 1, x);
      current.pop_back();
    }
    if (x < width) {
      current.push_back(Step::E);
      walk(placed_n, x + 1);
      current.pop_back();
    }
  }
};

}  // namespace

bool below(const LatticePath& pi, const LatticePath& boundary) {
  require_same_endpoints(pi, boundary);
  const auto a = pi.n_step_abscissae();
  const auto b = boundary.n_step_abscissae();
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] < b[j]) return false;
  return true;
}

std::vector<LatticePath> enumerate_below(const LatticePath& boundary) {
  std::vector<LatticePath> out;
  const auto bound = boundary.n_step_abscissae();
  Enumerator en{bound, boundary.count_e(), out, {}};
  en.current.reserve(boundary.size());
  en.walk(0, 0);
  return out;
}

BigInt count_below_dp(const LatticePath& boundary) {
  const auto bound = boundary.n_step_abscissae();
  const std::size_t width = boundary.count_e();
  if (bound.empty()) return 1;
  // ways[x]: placements of the first j N steps with the j-th at abscissa x.
  std::vector<BigInt> ways(width + 1);
  for (std::size_t x = bound[0]; x <= width; ++x) ways[x] = 1;
  for (std::size_t j = 1; j < bound.size(); ++j) {
    BigInt prefix = 0;
    for (std::size_t x = 0; x <= width; ++x) {
      prefix += ways[x];
      ways[x] = x >= bound[j] ? prefix : BigInt(0);
    }
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

PathStats path_stats(const LatticePath& pi, const LatticePath& boundary) {
  if (!below(pi, boundary)) {
    throw_error(ErrorKind::Precondition,
                pi.to_string() + " goes above " + boundary.to_string());
  }
  const auto a = pi.n_step_abscissae();
  const auto b = boundary.n_step_abscissae();
  PathStats st;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] == b[j]) ++st.i;
  st.e = pi.leading_e();
  return st;
}

PolyXY tutte_bruteforce(const LatticePath& boundary) {
  std::map<std::pair<std::size_t, std::size_t>, BigInt> tally;
  std::size_t max_i = 0, max_e = 0;
  for (const auto& pi : enumerate_below(boundary)) {
    const PathStats st = path_stats(pi, boundary);
    tally[{st.i, st.e}] += 1;
    max_i = std::max(max_i, st.i);
    max_e = std::max(max_e, st.e);
  }
  std::vector<std::vector<BigInt>> rows(max_i + 1, std::vector<BigInt>(max_e + 1));
  for (const auto& [key, count] : tally) rows[key.first][key.second] = count;
  return PolyXY::from_rows(rows);
}

}  // namespace tennis
