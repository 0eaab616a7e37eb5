#ifndef GRAMCAL_RATIONAL_HPP
#define GRAMCAL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "gramcal/errors.hpp"

namespace gramcal {

// Exact arbitrary-precision rational scalar. GMP keeps values canonical
// (positive denominator, gcd(num, den) = 1), which equality relies on.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q", "-p/q" with decimal digits only.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

Rational rational_floor(const Rational& r);
Rational rational_ceil(const Rational& r);
Rational rational_pow(const Rational& base, unsigned exp);

}  // namespace gramcal

#endif
