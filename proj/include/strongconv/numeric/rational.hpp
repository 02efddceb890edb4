#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strongconv::numeric {

/// Exact rational backed by GMP; always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// A point or direction in Q^d.
using Vector = std::vector<Rational>;

/// Parses "p", "p/q", or a finite decimal such as "-1.25" exactly.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Integer floor_integer(const Rational& value);
Integer ceil_integer(const Rational& value);

/// Best rational approximation of `value` with denominator `denominator`.
Rational round_to_denominator(double value, std::int64_t denominator);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(std::span<const Rational> a, const Rational& factor);
Vector negate(std::span<const Rational> a);
Vector zero_vector(std::size_t dim);
bool is_zero(std::span<const Rational> a);

/// Lexicographic comparison of equal-length vectors.
std::strong_ordering compare_lex(std::span<const Rational> a, std::span<const Rational> b);

struct LexLess {
  bool operator()(const Vector& a, const Vector& b) const { return compare_lex(a, b) < 0; }
};

/// Positive rescaling of `v` to a primitive integer vector (coprime entries).
/// Returns the factor used; `v` must be nonzero.
Rational primitive_scale_factor(std::span<const Rational> v);

std::string to_string(std::span<const Rational> v);

}  // namespace strongconv::numeric
