#pragma once

#include <map>
#include <string>
#include <vector>

#include "slopes/ratfun.hpp"

namespace slopes {

// 2x2 matrix over the rational-function field.
class SymMat2 {
 public:
  SymMat2();  // identity
  SymMat2(RatFun a00, RatFun a01, RatFun a10, RatFun a11);
  // Construction that checks det == 1.
  static SymMat2 unimodular(RatFun a00, RatFun a01, RatFun a10, RatFun a11);
  static SymMat2 identity() { return SymMat2(); }

  const RatFun& at(int i, int j) const { return e_[2 * i + j]; }
  RatFun det() const;
  RatFun trace() const { return at(0, 0) + at(1, 1); }

  friend SymMat2 operator*(const SymMat2& l, const SymMat2& r);
  friend SymMat2 operator-(const SymMat2& l, const SymMat2& r);
  // Adjugate inverse; requires det == 1.
  SymMat2 inverse() const;
  SymMat2 pow(int e) const;         // repeated squaring; negative via inverse
  SymMat2 pow_naive(int e) const;   // reference for tests

  bool operator==(const SymMat2& o) const { return e_ == o.e_; }
  bool is_zero() const;
  bool is_identity() const { return *this == SymMat2(); }

  SymMat2 subst(Var v, const RatFun& value) const;
  std::string to_string() const;

 private:
  std::vector<RatFun> e_;
};

// Reduced word in free-group generators; letters are (generator id, exponent)
// with nonzero exponents and no adjacent equal generators.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord gen(int g, int exp = 1);

  const std::vector<std::pair<int, int>>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  friend FreeWord operator*(const FreeWord& l, const FreeWord& r);
  FreeWord inverse() const;
  FreeWord pow(int e) const;
  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return !(*this == o); }

  SymMat2 eval(const std::map<int, SymMat2>& assignment) const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void push(int g, int exp);
  std::vector<std::pair<int, int>> letters_;
};

// Closed forms of the twist-region Wirtinger generators:
// w_{2k+1} = (w0 w1)^{-k} w1 (w0 w1)^k,
// w_{2k+2} = (w0 w1)^{-k} w1^{-1} (w0 w1)^{k+1}.
std::pair<FreeWord, FreeWord> twist_words(int k);

// Wirtinger relation set R1-R6 over generators a,b,c,d,e,f and Theta.
// Relations are stored as (left, right) words; the residual of a relation is
// left * right^{-1} - identity under a generator assignment.
enum class Relation { R1, R2, R3, R4, R5, R6 };
std::pair<FreeWord, FreeWord> relation_words(Relation rel);
const char* relation_name(Relation rel);

// Generator ids used by relation_words.
namespace gen {
inline constexpr int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, theta = 6;
}

SymMat2 relation_residual(Relation rel, const std::map<int, SymMat2>& assignment);

// Small report structure shared by the lemma-level symbolic checks.
struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Diagonal-restriction homomorphism check: delta(XY) = delta(X)delta(Y) for
// generic upper-triangular X, Y.
std::vector<CheckLine> verify_diag_homomorphism();

// Trace-zero lemma: with a = diag(alpha, 1/alpha), b = a^{-1}, generic e,
// the R1 residual entries force w = z = 0 when alpha^2 != 1.
std::vector<CheckLine> verify_trace_zero();

}  // namespace slopes
