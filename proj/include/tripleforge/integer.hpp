#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tripleforge {

// Every quantity in the library is an exact, arbitrary-precision integer.
using Integer = mpz_class;

// Parses a decimal string with no sign, whitespace or leading '+'.
// Throws std::invalid_argument on anything else.
Integer parse_integer(std::string_view text);

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

Integer gcd(const Integer& a, const Integer& b);

// base^exponent with exponent a machine word.
Integer pow(const Integer& base, unsigned long exponent);

inline bool is_odd(const Integer& value) { return mpz_odd_p(value.get_mpz_t()) != 0; }
inline bool is_even(const Integer& value) { return !is_odd(value); }

}  // namespace tripleforge
