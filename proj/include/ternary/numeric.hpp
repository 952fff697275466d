#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ternary {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;   // row-major, rows may be empty when cols == 0
using RatMatrix = std::vector<RatVector>;

/** Parse "p", "-p" or "p/q" into a canonical rational. Throws ValidationError. */
Rational parse_rational(const std::string& text);

/** Canonical string form: "3", "-3/2". */
std::string to_string(const Rational& q);

Integer gcd_of(const IntVector& v);

/** Divide by the gcd of the entries; zero vector is returned unchanged. */
IntVector make_primitive(IntVector v);

/** Scale a rational vector to the unique primitive integer vector with the same direction. */
IntVector primitive_direction(const RatVector& v);

RatVector to_rational(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

bool is_zero(const IntVector& v);

}  // namespace ternary
