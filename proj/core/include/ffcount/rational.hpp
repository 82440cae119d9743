#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffcount {

/// Exact integers and rationals used throughout the counting pipeline.
/// Rationals are kept in lowest terms with positive denominator by the
/// backing type; rendering is "p/q", or just "p" when the value is integral.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, int64_t e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int r{1};
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// base^e for integer base and possibly negative e, as an exact rational.
inline Rational rational_pow(const Int& base, int64_t e) {
  if (e >= 0) return Rational(int_pow(base, e));
  if (base == 0) throw std::domain_error("rational_pow: zero base, negative exponent");
  return Rational(Int{1}, int_pow(base, -e));
}

inline std::string to_string(const Int& v) { return v.str(); }

/// Canonical text form: "3/2" for non-integral values, "6" for integral ones.
inline std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline bool is_integral(const Rational& v) { return denominator(v) == 1; }

inline Int integral_part(const Rational& v) {
  if (!is_integral(v)) throw std::domain_error("integral_part: value is not an integer");
  return numerator(v);
}

}  // namespace ffcount
