#include "tennisball/tutte.hpp"

#include "tennisball/error.hpp"

namespace tennis {

PolyXY phi(const PolyXY& a) {
  const PolyXY at_one = eval_x1(a);
  return PolyXY::y() * at_one + exact_div_x_minus_1(a - at_one).shifted_x(1);
}

PolyXY tutte_step(const PolyXY& t, Step step) {
  return step == Step::N ? t.shifted_x(1) : phi(t);
}

PolyXY tutte_of_path(const LatticePath& path) {
  PolyXY t = PolyXY::one();
  for (Step s : path.steps()) t = tutte_step(t, s);
  return t;
}

PolyXY advance_block(const PolyXY& a, unsigned k, unsigned l) {
  PolyXY t = a.shifted_x(k);
  for (unsigned i = 0; i < l; ++i) t = phi(t);
  return t;
}

TutteSequence tutte_sequence(const Pattern& pattern, std::size_t n_max) {
  TutteSequence seq{pattern, {}, {}};
  seq.polys.reserve(n_max + 1);
  seq.counts.reserve(n_max + 1);
  seq.polys.push_back(PolyXY::one());
  for (std::size_t n = 0; n < n_max; ++n) {
    PolyXY a = seq.polys.back();
    for (const Block& b : pattern.blocks()) a = advance_block(a, b.k, b.l);
    if (!a.all_coefficients_nonnegative()) {
      throw_error(ErrorKind::Internal,
                  "negative Tutte coefficient at n=" + std::to_string(n + 1));
    }
    seq.polys.push_back(std::move(a));
  }
  for (const auto& p : seq.polys) seq.counts.push_back(p.eval(1, 1));
  return seq;
}

std::vector<BigInt> count_series(const Pattern& pattern, std::size_t n_max) {
  return tutte_sequence(pattern, n_max).counts;
}

}  // namespace tennis
