#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace krasno {

using Rational = mpq_class;

/// Parses "p/q", integers and plain decimals ("-0.125", "3e-2") exactly.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise. parse_rational
/// round-trips it exactly.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

/// Best rational approximation of `x` with denominator at most `max_den`
/// (continued-fraction convergents and semiconvergents).
Rational rationalize(double x, std::int64_t max_den = 1'000'000'000);

/// round(x * 2^bits) / 2^bits, exact.
Rational snap_dyadic(double x, int bits = 30);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace krasno
