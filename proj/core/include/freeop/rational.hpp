#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace freeop {

/// Exact rational number. All arithmetic in the library is over Q.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

using RationalVector = std::vector<Rational>;

}  // namespace freeop
