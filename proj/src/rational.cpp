#include "graphhom/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphhom {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string rational_to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  if (value == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(value, &exp);
  // 53 bits of mantissa, shifted to an integer.
  Integer m(static_cast<long long>(std::ldexp(mant, 53)));
  exp -= 53;
  Rational r(m);
  if (exp >= 0) {
    r *= Rational(Integer(1) << exp);
  } else {
    r /= Rational(Integer(1) << (-exp));
  }
  return r;
}

double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

std::optional<Rational> snap_to_rational(double value, const Integer& max_den,
                                         double tol) {
  if (!std::isfinite(value)) return std::nullopt;
  // Continued-fraction convergents of |value|.
  const bool neg = value < 0;
  double x = std::fabs(value);
  Integer p_prev = 1, q_prev = 0;
  Integer p = Integer(static_cast<long long>(std::floor(x)));
  Integer q = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    Rational cand(neg ? -p : p, q);
    if (q <= max_den && std::fabs(rational_to_double(cand) - value) <= tol)
      return cand;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    if (x > 1e18) break;
    const double a_d = std::floor(x);
    frac = x - a_d;
    Integer a(static_cast<long long>(a_d));
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    if (q > max_den * 4) break;
  }
  return std::nullopt;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    return 1 / rational_pow(base, -exponent);
  }
  Rational acc(1), b = base;
  long e = exponent;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace graphhom
