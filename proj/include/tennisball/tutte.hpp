#pragma once

#include <cstddef>
#include <vector>

#include "tennisball/bigint.hpp"
#include "tennisball/lattice_path.hpp"
#include "tennisball/pattern.hpp"
#include "tennisball/poly_xy.hpp"

namespace tennis {

/// Free-extension operator on Tutte polynomials of lattice path matroids:
///
///   phi(a) = y * a(1,y) + x * (a - a(1,y)) / (x - 1)
///
/// This is the polynomial form of x/(x-1) * a + (y - x/(x-1)) * a(1,y).
PolyXY phi(const PolyXY& a);

/// Tutte polynomial of M[PN] (N) or M[PE] (E) given that of M[P].
PolyXY tutte_step(const PolyXY& t, Step step);

/// Tutte polynomial of M[P], built one step at a time from t(empty) = 1.
PolyXY tutte_of_path(const LatticePath& path);

/// phi^l(x^k * a): appends the block N^k E^l.
PolyXY advance_block(const PolyXY& a, unsigned k, unsigned l);

/// A_n = t(M[P_n]; x, y) for n = 0..n_max, and q_n = A_n(1,1).
struct TutteSequence {
  Pattern pattern;
  std::vector<PolyXY> polys;
  std::vector<BigInt> counts;
};

TutteSequence tutte_sequence(const Pattern& pattern, std::size_t n_max);

/// q_0 .. q_{n_max}: number of paths weakly below P_n.
std::vector<BigInt> count_series(const Pattern& pattern, std::size_t n_max);

}  // namespace tennis
