#ifndef GRAPHHOM_RATIONAL_HPP
#define GRAPHHOM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace graphhom {

// Exact scalar domain for all graph parameters. cpp_rational keeps the
// canonical form (reduced, positive denominator) after every operation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "n" (optional sign, arbitrary precision).
/// Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(const std::string& text);

/// Prints as "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double value);

double rational_to_double(const Rational& value);

/// Best rational approximation with denominator <= max_den within tol,
/// found by walking continued-fraction convergents. Empty when no
/// admissible fraction is that close.
std::optional<Rational> snap_to_rational(double value, const Integer& max_den,
                                         double tol);

Rational rational_pow(const Rational& base, long exponent);

}  // namespace graphhom

#endif
