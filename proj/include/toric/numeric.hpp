#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& x);

/// gcd of the absolute values of the entries; 0 for the zero vector.
Integer content(const IntVector& v);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(IntMatrix m);

/// Exact rank over the rationals.
std::size_t rank(IntMatrix m);

RatVector to_rational(const IntVector& v);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const IntVector& v);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(const std::string& text);

/// Parses "p" or "p/q"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace toric
