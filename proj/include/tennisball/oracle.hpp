#pragma once

#include <cstddef>
#include <vector>

#include "tennisball/bigint.hpp"
#include "tennisball/lattice_path.hpp"
#include "tennisball/poly_xy.hpp"

namespace tennis {

// Brute-force ground truth for paths weakly below a boundary. "Below" is
// N-step dominance: the j-th N step of pi sits at an abscissa no smaller than
// the j-th N step of P.

/// Throws ErrorKind::Precondition if the endpoints differ.
bool below(const LatticePath& pi, const LatticePath& boundary);

/// Every path with the boundary's endpoints that is weakly below it, in
/// lexicographic order with N < E.
std::vector<LatticePath> enumerate_below(const LatticePath& boundary);

/// Same count as enumerate_below(boundary).size(), via a column DP.
BigInt count_below_dp(const LatticePath& boundary);

struct PathStats {
  std::size_t i = 0;  // N edges shared with the boundary
  std::size_t e = 0;  // E steps before the first N step

  friend bool operator==(const PathStats&, const PathStats&) = default;
};

/// Throws ErrorKind::Precondition unless below(pi, boundary).
PathStats path_stats(const LatticePath& pi, const LatticePath& boundary);

/// Sum of x^i(pi) y^e(pi) over all pi weakly below the boundary.
PolyXY tutte_bruteforce(const LatticePath& boundary);

}  // namespace tennis
