#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace monideal {

/// Exact rational number (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer ceil(const Rational& q);
Integer floor(const Rational& q);

/// ceil(num / den) for den > 0.
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

/// Converts an Integer that is known to fit; throws OverflowError otherwise.
std::int64_t to_int64(const Integer& z);

std::string to_string(const Rational& q);

} // namespace monideal
