#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace deligne {

/// Exact rational number. Every computation in the library uses this type;
/// there is no floating point anywhere.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical fraction.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace deligne
