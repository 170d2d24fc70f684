#pragma once

// Exact integer and rational arithmetic used throughout the library.
// Values are GMP-backed; nothing in the numeric core touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace commtuples {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Integer& v) { return static_cast<Sign>(sgn(v)); }
inline Sign sign_of(const Rational& v) { return static_cast<Sign>(sgn(v)); }

char sign_char(Sign s);
Sign sign_from_char(char c);
std::string sign_name(Sign s);

Integer factorial(std::uint64_t n);
Integer ipow(const Integer& base, std::uint64_t exponent);
Integer ipow(std::uint64_t base, std::uint64_t exponent);
Rational rpow(const Rational& base, std::uint64_t exponent);

/// Builds a canonical rational num/den.
Rational make_rational(const Integer& num, const Integer& den);

/// Least integer >= q.
Integer ceil(const Rational& q);

/// "7" for integers, "7/3" otherwise.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

bool is_integer(const Rational& v);

}  // namespace commtuples
