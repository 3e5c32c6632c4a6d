#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace slopes {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (cpp_rational maintains both invariants).
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

// gcd on rationals: gcd(numerators) / lcm(denominators).  Used for content
// extraction; gcd_rat(0, x) == |x|.
inline Rational gcd_rat(const Rational& a, const Rational& b) {
  Integer gn = boost::multiprecision::gcd(num(a), num(b));
  Integer gd = boost::multiprecision::lcm(den(a), den(b));
  return Rational(gn, gd);
}

// Prints "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rational& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

// Parses "p" or "p/q" with q > 0 and gcd(p, q) = 1.  Rejects q = 0 and
// non-reduced input (the knot grammar requires reduced fractions).
std::optional<Rational> parse_reduced_fraction(const std::string& s);

}  // namespace slopes
