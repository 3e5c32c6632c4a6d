#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopes/rational.hpp"

namespace slopes {

// Fixed symbol set.  Serialization order is graded lex with
// a < z < r < T < E < the auxiliary entry symbols.
enum class Var : int { a = 0, z, r, T, E, b, w, x, y, p, q, s, t };

inline constexpr int kNumVars = 13;

const char* var_name(Var v);

using Mono = std::array<int, kNumVars>;

// Graded lex: compare total degree first, then exponents in Var order.
struct MonoLess {
  bool operator()(const Mono& lhs, const Mono& rhs) const;
};

// Sparse multivariate polynomial over Rational.  No zero coefficients are
// stored; the zero polynomial has an empty term map.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}
  static MultiPoly var(Var v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term, valid only when is_constant().
  Rational constant_value() const;

  const std::map<Mono, Rational, MonoLess>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int degree(Var v) const;          // -1 for the zero polynomial
  int total_degree() const;         // -1 for the zero polynomial
  bool depends_on(Var v) const { return degree(v) > 0; }

  // Leading term in graded lex.
  const Mono& leading_mono() const;
  const Rational& leading_coeff() const;

  // Coefficient of v^k, a polynomial in the remaining variables.
  MultiPoly coeff_of(Var v, int k) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly l, const MultiPoly& r) { return l += r; }
  friend MultiPoly operator-(MultiPoly l, const MultiPoly& r) { return l -= r; }
  friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(int e) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Substitute a polynomial for a variable.
  MultiPoly subst(Var v, const MultiPoly& value) const;
  // Halve every exponent of v (requires all of them even); used to rewrite
  // polynomials in alpha^2 as polynomials in a fresh variable.
  MultiPoly halve_exponents(Var v) const;
  // Rename a variable (the target must not occur).
  MultiPoly rename(Var from, Var to) const;
  Rational eval_const(const std::array<Rational, kNumVars>& point) const;

  // gcd of all coefficients (a positive rational; 0 for the zero poly).
  Rational rational_content() const;
  // Divides by rational_content and fixes the leading coefficient sign, so
  // the result has integer coprime coefficients and positive leading term.
  MultiPoly primitive_normalized() const;

  void add_term(const Mono& m, const Rational& c);
  std::string to_string() const;

 private:
  std::map<Mono, Rational, MonoLess> terms_;
};

// Exact division: returns f / g when g divides f, nullopt otherwise.
std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g);
bool divides(const MultiPoly& g, const MultiPoly& f);

// Pseudo-remainder of f by g with respect to v:
// lc_v(g)^(deg f - deg g + 1) * f  =  q*g + prem.  Requires deg_v(g) >= 0
// and g nonzero.
MultiPoly prem(const MultiPoly& f, const MultiPoly& g, Var v);

// Polynomial gcd over Q (subresultant PRS); result is primitive-normalized.
// gcd of two constants is 1 (units); gcd(0, g) = normalized g.
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

// Sylvester resultant of f and g with respect to v, computed fraction-free
// (Bareiss).  Both inputs must have positive degree in v.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v);

// Trace power polynomial P_n in the given variable:
// P_0 = 2, P_1 = x, P_{n+1} = x P_n - P_{n-1}; Tr(M^n) = P_n(Tr M) for
// unimodular 2x2 M.
MultiPoly trace_power_poly(int n, Var v);

}  // namespace slopes
