#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hla {

/// Exact rational scalar. mpq_class keeps the canonical form the whole
/// library relies on: positive denominator, gcd(|num|, den) = 1, and
/// value equality coincides with structural equality.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

/// Canonical text form: "p/q", or just "p" when q = 1; sign on the numerator.
std::string rational_str(const Rational& r);

/// Parses "p" or "p/q". Accepts non-reduced input and canonicalizes it.
/// Throws ParseError on empty input, stray characters, or zero denominator.
Rational parse_rational(std::string_view s);

Vec zero_vec(std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rational& c);
bool is_zero(const Vec& v);

/// "(a,b,c)" with canonical entries and no spaces.
std::string vec_str(const Vec& v);

}  // namespace hla
