#pragma once

// Exact scalar and vector types shared by every toric module.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Exact dot product; sizes must agree.
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

/// Divide by the content; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// Scale a rational vector by the lcm of its denominators, then make it primitive.
IntVector clear_denominators(const RatVector& v);

RatVector to_rational(const IntVector& v);
bool is_integral(const RatVector& v);
IntVector to_integer(const RatVector& v);  // requires is_integral

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& v, const Integer& s);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scaled(const RatVector& v, const Rational& s);

/// floor(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Integer factorial(unsigned n);

/// "3", "-1/2".
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

/// Parse "3", "-7/4"; throws InputError.
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace toric
