#include "slopes/sl2.hpp"

#include <stdexcept>

namespace slopes {

SymMat2::SymMat2() : e_(4) {
  e_[0] = RatFun(Rational(1));
  e_[3] = RatFun(Rational(1));
}

SymMat2::SymMat2(RatFun a00, RatFun a01, RatFun a10, RatFun a11) : e_(4) {
  e_[0] = std::move(a00);
  e_[1] = std::move(a01);
  e_[2] = std::move(a10);
  e_[3] = std::move(a11);
}

SymMat2 SymMat2::unimodular(RatFun a00, RatFun a01, RatFun a10, RatFun a11) {
  SymMat2 m(std::move(a00), std::move(a01), std::move(a10), std::move(a11));
  if (m.det() != RatFun(Rational(1)))
    throw std::invalid_argument("unimodular constructor: det != 1");
  return m;
}

RatFun SymMat2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

SymMat2 operator*(const SymMat2& l, const SymMat2& r) {
  return SymMat2(l.at(0, 0) * r.at(0, 0) + l.at(0, 1) * r.at(1, 0),
                 l.at(0, 0) * r.at(0, 1) + l.at(0, 1) * r.at(1, 1),
                 l.at(1, 0) * r.at(0, 0) + l.at(1, 1) * r.at(1, 0),
                 l.at(1, 0) * r.at(0, 1) + l.at(1, 1) * r.at(1, 1));
}

SymMat2 operator-(const SymMat2& l, const SymMat2& r) {
  return SymMat2(l.at(0, 0) - r.at(0, 0), l.at(0, 1) - r.at(0, 1),
                 l.at(1, 0) - r.at(1, 0), l.at(1, 1) - r.at(1, 1));
}

SymMat2 SymMat2::inverse() const {
  if (det() != RatFun(Rational(1)))
    throw std::logic_error("inverse requires det == 1");
  return SymMat2(at(1, 1), -at(0, 1), -at(1, 0), at(0, 0));
}

SymMat2 SymMat2::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  SymMat2 acc;
  SymMat2 base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

SymMat2 SymMat2::pow_naive(int e) const {
  if (e < 0) return inverse().pow_naive(-e);
  SymMat2 acc;
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool SymMat2::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

SymMat2 SymMat2::subst(Var v, const RatFun& value) const {
  return SymMat2(e_[0].subst(v, value), e_[1].subst(v, value),
                 e_[2].subst(v, value), e_[3].subst(v, value));
}

std::string SymMat2::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" +
         e_[2].to_string() + ", " + e_[3].to_string() + "]]";
}

void FreeWord::push(int g, int exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().first == g) {
    letters_.back().second += exp;
    if (letters_.back().second == 0) letters_.pop_back();
    return;
  }
  letters_.emplace_back(g, exp);
}

FreeWord FreeWord::gen(int g, int exp) {
  FreeWord w;
  w.push(g, exp);
  return w;
}

FreeWord operator*(const FreeWord& l, const FreeWord& r) {
  FreeWord out = l;
  for (const auto& [g, e] : r.letters_) out.push(g, e);
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push(it->first, -it->second);
  return out;
}

FreeWord FreeWord::pow(int e) const {
  FreeWord base = e < 0 ? inverse() : *this;
  int n = e < 0 ? -e : e;
  FreeWord out;
  for (int i = 0; i < n; ++i) out = out * base;
  return out;
}

SymMat2 FreeWord::eval(const std::map<int, SymMat2>& assignment) const {
  SymMat2 acc;
  for (const auto& [g, e] : letters_) {
    auto it = assignment.find(g);
    if (it == assignment.end())
      throw std::invalid_argument("missing generator in assignment");
    acc = acc * it->second.pow(e);
  }
  return acc;
}

std::string FreeWord::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : letters_) {
    out += names.at(static_cast<std::size_t>(g));
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::pair<FreeWord, FreeWord> twist_words(int k) {
  if (k < 0) throw std::invalid_argument("twist_words: k < 0");
  FreeWord w0 = FreeWord::gen(0), w1 = FreeWord::gen(1);
  FreeWord conj = (w0 * w1).pow(k);
  FreeWord odd = conj.inverse() * w1 * conj;
  FreeWord even = conj.inverse() * w1.inverse() * (w0 * w1).pow(k + 1);
  return {odd, even};
}

std::pair<FreeWord, FreeWord> relation_words(Relation rel) {
  FreeWord a = FreeWord::gen(gen::a), b = FreeWord::gen(gen::b),
           c = FreeWord::gen(gen::c), d = FreeWord::gen(gen::d),
           e = FreeWord::gen(gen::e), f = FreeWord::gen(gen::f),
           th = FreeWord::gen(gen::theta);
  switch (rel) {
    case Relation::R1:
      return {a * e, e * b};
    case Relation::R2:
      return {d, a * b.inverse() * c};
    case Relation::R3:
      return {f * a * f, b * f * a};
    case Relation::R4:
      return {d * (f * d).pow(2) * c, (f * d).pow(3)};
    case Relation::R5:
      return {th.inverse() * c * th, a * e * a.inverse()};
    case Relation::R6:
      return {th * e * c, e * c * th};
  }
  throw std::logic_error("unknown relation");
}

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::R1: return "R1";
    case Relation::R2: return "R2";
    case Relation::R3: return "R3";
    case Relation::R4: return "R4";
    case Relation::R5: return "R5";
    case Relation::R6: return "R6";
  }
  return "?";
}

SymMat2 relation_residual(Relation rel, const std::map<int, SymMat2>& assignment) {
  auto [lhs, rhs] = relation_words(rel);
  return lhs.eval(assignment) * rhs.eval(assignment).inverse() - SymMat2::identity();
}

std::vector<CheckLine> verify_diag_homomorphism() {
  std::vector<CheckLine> out;
  // Generic upper-triangular X = [[x, p], [0, 1/x]], Y = [[y, q], [0, 1/y]].
  RatFun xv = RatFun::var(Var::x), yv = RatFun::var(Var::y);
  RatFun pv = RatFun::var(Var::p), qv = RatFun::var(Var::q);
  RatFun zero(Rational(0));
  SymMat2 X(xv, pv, zero, xv.inverse());
  SymMat2 Y(yv, qv, zero, yv.inverse());
  auto diag = [&](const SymMat2& m) {
    return SymMat2(m.at(0, 0), zero, zero, m.at(1, 1));
  };
  SymMat2 res = diag(X * Y) - diag(X) * diag(Y);
  out.push_back({"delta(XY) = delta(X)delta(Y)", res.is_zero(),
                 "diagonal of a product of upper-triangular matrices"});
  return out;
}

std::vector<CheckLine> verify_trace_zero() {
  std::vector<CheckLine> out;
  RatFun al = RatFun::var(Var::a);
  RatFun wv = RatFun::var(Var::w), xv = RatFun::var(Var::x);
  RatFun yv = RatFun::var(Var::y), zv = RatFun::var(Var::z);
  RatFun zero(Rational(0));
  SymMat2 a(al, zero, zero, al.inverse());
  SymMat2 e(wv, xv, yv, zv);
  // R1 with b = a^{-1}: residual of ae - e a^{-1} directly (e need not be
  // unimodular for this certificate).
  SymMat2 res = a * e - e * a.inverse();
  MultiPoly force = MultiPoly::var(Var::a, 2) - MultiPoly(Rational(1));
  std::vector<MultiPoly> locus = {MultiPoly::var(Var::a)};
  RatFun q00 = res.at(0, 0) / (RatFun(force) * wv);
  RatFun q11 = res.at(1, 1) / (RatFun(force) * zv);
  out.push_back({"R1 upper-left residual = (a^2-1)w (up to unit)",
                 is_unit_off_locus(q00, locus), res.at(0, 0).to_string()});
  out.push_back({"R1 lower-right residual = (a^2-1)z (up to unit)",
                 is_unit_off_locus(q11, locus), res.at(1, 1).to_string()});
  // With w = z = 0 the trace of e vanishes; meridians are conjugate, so
  // chi(a) = chi(e) = 0.
  SymMat2 e0(zero, xv, yv, zero);
  out.push_back({"chi(a) = chi(e) = 0 once w = z = 0", e0.trace().is_zero(),
                 "antidiagonal e has trace 0; Wirtinger generators are conjugate"});
  return out;
}

}  // namespace slopes
