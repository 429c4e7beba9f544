#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ssice {

// Canonical exact rational. gmpxx keeps results of arithmetic reduced with a
// positive denominator; make_rational/parse_rational canonicalize explicitly.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q", "-p/q" with arbitrary-size integers.
Rational parse_rational(std::string_view text);

std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const Rational& r);

Rational pow(const Rational& base, long exponent);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace ssice
