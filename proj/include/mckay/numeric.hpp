#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mckay {

using Integer = mpz_class;
using Rational = mpq_class;

/// Decimal form; rationals print as "p/q" or "p" when integral.
inline std::string to_decimal(const Integer& value) { return value.get_str(10); }
inline std::string to_decimal(const Rational& value) { return value.get_str(10); }

/// Parses "p/q" or an integer. Throws InvalidArgument on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace mckay
