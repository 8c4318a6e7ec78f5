#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tennis {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Throws ErrorKind::Internal when q has a nontrivial denominator.
BigInt to_integer(const Rational& q);

BigInt binomial(unsigned long n, unsigned long k);

std::vector<std::string> to_decimal(const std::vector<BigInt>& values);

}  // namespace tennis
