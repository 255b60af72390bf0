#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coalg {

/// Exact rational number. mpq_class keeps values in lowest terms with a
/// positive denominator after every arithmetic operation.
using Scalar = mpq_class;

Scalar make_scalar(long numerator, long denominator = 1);

/// Parses "3", "-7", "1/2", "-4/6" (reduced on read). Throws ParseError.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

inline int sign_of_parity(int parity) { return (parity & 1) ? -1 : 1; }

} // namespace coalg
