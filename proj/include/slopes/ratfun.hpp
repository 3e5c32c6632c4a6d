#pragma once

#include <string>
#include <vector>

#include "slopes/multipoly.hpp"

namespace slopes {

// Normalized rational function: gcd(num, den) is a unit and den is
// integer-primitive with positive leading coefficient.  Equality of rational
// functions is equality of normal forms.
class RatFun {
 public:
  RatFun() : num_(), den_(Rational(1)) {}
  RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
  RatFun(const MultiPoly& p) : num_(p), den_(Rational(1)) {}
  RatFun(const MultiPoly& numerator, const MultiPoly& denominator);
  static RatFun var(Var v, int exp = 1) { return RatFun(MultiPoly::var(v, exp)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& l, const RatFun& r);
  friend RatFun operator-(const RatFun& l, const RatFun& r);
  friend RatFun operator*(const RatFun& l, const RatFun& r);
  friend RatFun operator/(const RatFun& l, const RatFun& r);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  RatFun inverse() const;
  RatFun pow(int e) const;

  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  // Substitute a rational function for a variable.
  RatFun subst(Var v, const RatFun& value) const;

  std::string to_string() const;

 private:
  void normalize();
  MultiPoly num_, den_;
};

// True when pol, after stripping its monomial part and its rational content,
// is a product of powers of the given locus polynomials.  This is the
// "unit off the excluded locus" test for residual certificates.
bool is_unit_off_locus(const MultiPoly& pol, const std::vector<MultiPoly>& locus);
bool is_unit_off_locus(const RatFun& f, const std::vector<MultiPoly>& locus);

}  // namespace slopes
