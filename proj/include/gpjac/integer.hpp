#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gpjac {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

/// Parses an optionally signed base-10 integer; throws std::invalid_argument otherwise.
Integer parse_integer(std::string_view text);

/// Exact quotient a / b. Throws InconsistencyError if b does not divide a.
Integer divide_exact(const Integer& a, const Integer& b, std::string_view context);

}  // namespace gpjac
