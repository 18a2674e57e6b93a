#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace llsem {

/// Exact scalar type. All semantic arithmetic goes through this; there is no
/// floating point anywhere in the library.
using Rational = mpq_class;

/// Formats as "p/q" with q >= 1 always present ("2/1", "0/1", "-3/4").
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace llsem
