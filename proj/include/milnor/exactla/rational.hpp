#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace milnor::exactla {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. Throws InputError when den == 0.
Rational make_rational(long num, long den);

/// Parses "p", "-p" or "p/q" (surrounding whitespace allowed). Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Largest integer <= q.
Integer floor(const Rational& q);

/// q - floor(q), always in [0, 1).
Rational frac(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace milnor::exactla
