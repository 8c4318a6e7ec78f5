#include "tennisball/pattern.hpp"

#include <charconv>

#include "tennisball/error.hpp"

namespace tennis {

Pattern::Pattern(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw_error(ErrorKind::InvalidArgument, "pattern has no blocks");
  for (const auto& b : blocks_) {
    if (b.k == 0 || b.l == 0) {
      throw_error(ErrorKind::InvalidArgument,
                  "pattern blocks need k >= 1 and l >= 1, got (" +
                      std::to_string(b.k) + "," + std::to_string(b.l) + ")");
    }
  }
}

Pattern Pattern::parse(std::string_view text) {
  std::vector<unsigned> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    unsigned v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) {
      throw_error(ErrorKind::InvalidArgument,
                  "invalid pattern \"" + std::string(text) +
                      "\": expected comma-separated positive integers");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return from_flat(values);
}

Pattern Pattern::from_flat(std::span<const unsigned> values) {
  if (values.empty() || values.size() % 2 != 0) {
    throw_error(ErrorKind::InvalidArgument,
                "pattern needs an even, nonzero number of entries (k1,l1,...)");
  }
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < values.size(); i += 2)
    blocks.push_back({values[i], values[i + 1]});
  return Pattern(std::move(blocks));
}

unsigned Pattern::total_k() const noexcept {
  unsigned t = 0;
  for (const auto& b : blocks_) t += b.k;
  return t;
}

unsigned Pattern::total_l() const noexcept {
  unsigned t = 0;
  for (const auto& b : blocks_) t += b.l;
  return t;
}

LatticePath Pattern::boundary(std::size_t n) const {
  LatticePath one;
  for (const auto& b : blocks_) {
    one.append(Step::N, b.k);
    one.append(Step::E, b.l);
  }
  return one.repeated(n);
}

std::string Pattern::to_string() const {
  std::string s;
  for (const auto& b : blocks_) {
    if (!s.empty()) s += ',';
    s += std::to_string(b.k) + "," + std::to_string(b.l);
  }
  return s;
}

}  // namespace tennis
