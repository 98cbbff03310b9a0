#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mulideal {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a" or "a/b". The result is canonical (b > 0, gcd = 1).
Rational parse_rational(std::string_view text);

// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// num/den in lowest terms; den must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

double to_double(const Rational& q);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace mulideal
