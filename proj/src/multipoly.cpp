#include "slopes/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slopes {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {"a", "z", "r", "T", "E", "b", "w",
                                        "x", "y", "p", "q", "s", "t"};
  return names[static_cast<int>(v)];
}

bool MonoLess::operator()(const Mono& lhs, const Mono& rhs) const {
  int dl = 0, dr = 0;
  for (int i = 0; i < kNumVars; ++i) {
    dl += lhs[i];
    dr += rhs[i];
  }
  if (dl != dr) return dl < dr;
  // lex on exponents, earlier variable dominates: larger exponent on an
  // earlier variable sorts later (so the leading term is at rbegin).
  for (int i = 0; i < kNumVars; ++i) {
    if (lhs[i] != rhs[i]) return lhs[i] < rhs[i];
  }
  return false;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_[Mono{}] = c;
}

MultiPoly MultiPoly::var(Var v, int exp) {
  MultiPoly p;
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Mono m{};
  m[static_cast<int>(v)] = exp;
  p.terms_[m] = 1;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Mono{};
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

int MultiPoly::degree(Var v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int td = 0;
    for (int e : m) td += e;
    d = std::max(d, td);
  }
  return d;
}

const Mono& MultiPoly::leading_mono() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
  const int vi = static_cast<int>(v);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m[vi] != k) continue;
    Mono m2 = m;
    m2[vi] = 0;
    out.terms_[m2] = c;
  }
  return out;
}

void MultiPoly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
  MultiPoly out;
  for (const auto& [ml, cl] : l.terms_) {
    for (const auto& [mr, cr] : r.terms_) {
      Mono m;
      for (int i = 0; i < kNumVars; ++i) m[i] = ml[i] + mr[i];
      out.add_term(m, cl * cr);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out;
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_[m] = coef * c;
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  MultiPoly acc(Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& value) const {
  const int vi = static_cast<int>(v);
  // Group by exponent of v, then Horner over descending exponents.
  std::map<int, MultiPoly> by_exp;
  for (const auto& [m, c] : terms_) {
    Mono m2 = m;
    int e = m2[vi];
    m2[vi] = 0;
    MultiPoly t;
    t.terms_[m2] = c;
    by_exp[e] += t;
  }
  MultiPoly out;
  int prev_exp = -1;
  for (auto it = by_exp.rbegin(); it != by_exp.rend(); ++it) {
    if (prev_exp >= 0) out *= value.pow(prev_exp - it->first);
    out += it->second;
    prev_exp = it->first;
  }
  if (prev_exp > 0) out *= value.pow(prev_exp);
  return out;
}

MultiPoly MultiPoly::halve_exponents(Var v) const {
  const int vi = static_cast<int>(v);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m[vi] % 2 != 0) throw std::logic_error("odd exponent in halve_exponents");
    Mono m2 = m;
    m2[vi] /= 2;
    out.terms_[m2] = c;
  }
  return out;
}

MultiPoly MultiPoly::rename(Var from, Var to) const {
  const int fi = static_cast<int>(from), ti = static_cast<int>(to);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m[ti] != 0 && fi != ti) throw std::logic_error("rename target occurs");
    Mono m2 = m;
    m2[ti] = m2[fi];
    if (fi != ti) m2[fi] = 0;
    out.terms_[m2] = c;
  }
  return out;
}

Rational MultiPoly::eval_const(const std::array<Rational, kNumVars>& point) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kNumVars; ++i) {
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

Rational MultiPoly::rational_content() const {
  Rational g = 0;
  for (const auto& [m, c] : terms_) g = gcd_rat(g, c);
  if (g < 0) g = -g;
  return g;
}

MultiPoly MultiPoly::primitive_normalized() const {
  if (terms_.empty()) return *this;
  Rational c = rational_content();
  if (leading_coeff() < 0) c = -c;
  return scaled(Rational(1) / c);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_vars = m != Mono{};
    if (!has_vars || ac != 1) {
      os << rat_to_string(ac);
      if (has_vars) os << "*";
    }
    bool fv = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      if (!fv) os << "*";
      fv = false;
      os << var_name(static_cast<Var>(i));
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) return std::nullopt;
  MultiPoly rem = f;
  MultiPoly quot;
  const Mono& gl = g.leading_mono();
  const Rational& gc = g.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& rl = rem.leading_mono();
    Mono qm;
    for (int i = 0; i < kNumVars; ++i) {
      qm[i] = rl[i] - gl[i];
      if (qm[i] < 0) return std::nullopt;
    }
    MultiPoly t;
    t.add_term(qm, rem.leading_coeff() / gc);
    quot += t;
    rem -= t * g;
  }
  return quot;
}

bool divides(const MultiPoly& g, const MultiPoly& f) {
  return try_divide(f, g).has_value();
}

MultiPoly prem(const MultiPoly& f, const MultiPoly& g, Var v) {
  if (g.is_zero()) throw std::invalid_argument("prem by zero");
  int dg = g.degree(v);
  MultiPoly lcg = g.coeff_of(v, dg);
  MultiPoly rem = f;
  int df = rem.degree(v);
  if (df < dg) {
    // Multiply by the full factor anyway so callers can rely on the
    // identity lc^(df-dg+1) f = q g + prem; with df < dg this is just f.
    return rem;
  }
  int steps = df - dg + 1;
  int done = 0;
  while (!rem.is_zero() && rem.degree(v) >= dg) {
    int dr = rem.degree(v);
    MultiPoly lcr = rem.coeff_of(v, dr);
    rem = rem * lcg - lcr * MultiPoly::var(v, dr - dg) * g;
    ++done;
  }
  // Pad remaining powers of lcg so the pseudo-division identity holds with
  // the standard exponent.
  for (; done < steps; ++done) rem = rem * lcg;
  return rem;
}

namespace {

// Content of f viewed as a polynomial in v: gcd of its v-coefficients.
MultiPoly content_wrt(const MultiPoly& f, Var v) {
  MultiPoly c;
  for (int k = 0; k <= f.degree(v); ++k) {
    MultiPoly ck = f.coeff_of(v, k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? ck.primitive_normalized() : poly_gcd(c, ck);
    if (c.is_constant()) return MultiPoly(Rational(1));
  }
  return c.is_zero() ? MultiPoly(Rational(1)) : c;
}

std::optional<Var> pick_main_var(const MultiPoly& f, const MultiPoly& g) {
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (f.depends_on(v) || g.depends_on(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return g.is_zero() ? g : g.primitive_normalized();
  if (g.is_zero()) return f.primitive_normalized();
  if (f.is_constant() || g.is_constant()) return MultiPoly(Rational(1));
  auto mv = pick_main_var(f, g);
  if (!mv) return MultiPoly(Rational(1));
  Var v = *mv;
  if (!f.depends_on(v)) return poly_gcd(content_wrt(g, v), f);
  if (!g.depends_on(v)) return poly_gcd(content_wrt(f, v), g);

  MultiPoly cf = content_wrt(f, v), cg = content_wrt(g, v);
  MultiPoly F = *try_divide(f, cf), G = *try_divide(g, cg);
  MultiPoly cont_gcd = poly_gcd(cf, cg);

  if (F.degree(v) < G.degree(v)) std::swap(F, G);
  // Subresultant PRS.
  MultiPoly sg(Rational(1)), sh(Rational(1));
  while (true) {
    int d = F.degree(v) - G.degree(v);
    MultiPoly R = prem(F, G, v);
    if (R.is_zero()) break;
    if (R.degree(v) == 0) {
      G = R;
      break;
    }
    MultiPoly divisor = sg * sh.pow(d);
    F = G;
    G = *try_divide(R, divisor);
    sg = F.coeff_of(v, F.degree(v));
    if (d == 0) {
      // sh unchanged
    } else if (d == 1) {
      sh = sg;
    } else {
      sh = *try_divide(sg.pow(d), sh.pow(d - 1));
    }
  }
  if (G.degree(v) == 0) return cont_gcd;
  MultiPoly pp = *try_divide(G, content_wrt(G, v));
  return (cont_gcd * pp).primitive_normalized();
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v) {
  int df = f.degree(v), dg = g.degree(v);
  if (df <= 0 || dg <= 0)
    throw std::invalid_argument("resultant: inputs must have positive degree");
  const int n = df + dg;
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  for (int row = 0; row < dg; ++row)
    for (int k = 0; k <= df; ++k) m[row][row + k] = f.coeff_of(v, df - k);
  for (int row = 0; row < df; ++row)
    for (int k = 0; k <= dg; ++k) m[dg + row][row + k] = g.coeff_of(v, dg - k);

  // Bareiss fraction-free elimination.
  MultiPoly prev(Rational(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return MultiPoly();  // singular: resultant 0
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MultiPoly numer = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = *try_divide(numer, prev);
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  MultiPoly out = m[n - 1][n - 1];
  return sign < 0 ? -out : out;
}

MultiPoly trace_power_poly(int n, Var v) {
  if (n < 0) throw std::invalid_argument("trace_power_poly: n < 0");
  MultiPoly p0(Rational(2));
  if (n == 0) return p0;
  MultiPoly p1 = MultiPoly::var(v);
  MultiPoly x = p1;
  for (int k = 1; k < n; ++k) {
    MultiPoly next = x * p1 - p0;
    p0 = p1;
    p1 = next;
  }
  return p1;
}

}  // namespace slopes
