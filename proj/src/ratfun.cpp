#include "slopes/ratfun.hpp"

#include <stdexcept>

namespace slopes {

RatFun::RatFun(const MultiPoly& numerator, const MultiPoly& denominator)
    : num_(numerator), den_(denominator) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(Rational(1));
    return;
  }
  MultiPoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *try_divide(num_, g);
    den_ = *try_divide(den_, g);
  }
  // Scale so the denominator is integer-primitive with positive leading
  // coefficient.
  Rational c = den_.rational_content();
  if (den_.leading_coeff() < 0) c = -c;
  Rational inv = Rational(1) / c;
  den_ = den_.scaled(inv);
  num_ = num_.scaled(inv);
}

RatFun RatFun::operator-() const {
  RatFun out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RatFun operator+(const RatFun& l, const RatFun& r) {
  return RatFun(l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_);
}

RatFun operator-(const RatFun& l, const RatFun& r) {
  return RatFun(l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_);
}

RatFun operator*(const RatFun& l, const RatFun& r) {
  return RatFun(l.num_ * r.num_, l.den_ * r.den_);
}

RatFun operator/(const RatFun& l, const RatFun& r) {
  if (r.is_zero()) throw std::invalid_argument("division by zero RatFun");
  return RatFun(l.num_ * r.den_, l.den_ * r.num_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun acc(Rational(1));
  RatFun base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

RatFun RatFun::subst(Var v, const RatFun& value) const {
  const int dn = num_.degree(v), dd = den_.degree(v);
  const int d = std::max(dn, dd);
  if (d <= 0) return *this;
  // Clear value's denominator: x -> vn/vd; multiply through by vd^d.
  RatFun out_num(Rational(0)), out_den(Rational(0));
  MultiPoly vn = value.num(), vd = value.den();
  for (int k = 0; k <= d; ++k) {
    MultiPoly scale = vn.pow(k) * vd.pow(d - k);
    MultiPoly cn = num_.coeff_of(v, k);
    if (!cn.is_zero()) out_num += RatFun(cn * scale);
    MultiPoly cd = den_.coeff_of(v, k);
    if (!cd.is_zero()) out_den += RatFun(cd * scale);
  }
  return out_num / out_den;
}

std::string RatFun::to_string() const {
  if (den_ == MultiPoly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool is_unit_off_locus(const MultiPoly& pol, const std::vector<MultiPoly>& locus) {
  if (pol.is_zero()) return false;
  // Strip the monomial part.
  Mono min_exp;
  min_exp.fill(1 << 20);
  for (const auto& [m, c] : pol.terms())
    for (int i = 0; i < kNumVars; ++i) min_exp[i] = std::min(min_exp[i], m[i]);
  MultiPoly stripped;
  for (const auto& [m, c] : pol.terms()) {
    Mono m2;
    for (int i = 0; i < kNumVars; ++i) m2[i] = m[i] - min_exp[i];
    stripped.add_term(m2, c);
  }
  MultiPoly rem = stripped.primitive_normalized();
  bool progress = true;
  while (!rem.is_constant() && progress) {
    progress = false;
    for (const auto& l : locus) {
      if (l.is_constant()) continue;
      if (auto q = try_divide(rem, l)) {
        rem = q->primitive_normalized();
        progress = true;
      }
    }
  }
  return rem.is_constant();
}

bool is_unit_off_locus(const RatFun& f, const std::vector<MultiPoly>& locus) {
  return is_unit_off_locus(f.num(), locus) && is_unit_off_locus(f.den(), locus);
}

}  // namespace slopes
