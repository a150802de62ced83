#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace adjrep {

using Rational = mpq_class;
using Integer = mpz_class;

/// Always "num/den", e.g. "3/1", "-1/2", "0/1".
std::string to_fraction_string(const Rational& q);

/// Accepts "3", "-1/2", "6/4" (normalized). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// True when q has denominator 1.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace adjrep
