#include "tennisball/bigint.hpp"

#include "tennisball/error.hpp"

namespace tennis {

BigInt to_integer(const Rational& q) {
  if (!is_integral(q)) {
    throw_error(ErrorKind::Internal,
                "expected an integer, got " + q.get_str());
  }
  return q.get_num();
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<std::string> to_decimal(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

}  // namespace tennis
