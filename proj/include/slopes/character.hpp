#pragma once

#include <string>
#include <vector>

#include "slopes/sl2.hpp"

namespace slopes {

// Laurent sequence p_n: p_1 = x, p_n = x^(3-2n) + x^2 p_{n-1}; equals the
// upper-right entry of (AB)^n for A = diag(x, 1/x) and B upper-triangular
// with the same diagonal and 1 in the corner.
RatFun pn_sequence(int n);

struct FinitenessWitness {
  std::string source;
  std::string polynomial;  // canonical text of a nonzero defining polynomial
  int degree = 0;
};

struct LambdaEntry {
  std::string source;
  // Explicit trace value ("0", "2", "-2", "(2^(1/2)+2^(-1/2))", ...) or a
  // defining polynomial in alpha whose roots contribute alpha + 1/alpha.
  std::string value;
  bool explicit_value = false;
};

struct CaseReport {
  std::string case_id;
  std::vector<CheckLine> identities;
  std::vector<std::string> forcings;
  std::vector<FinitenessWitness> finiteness;
  std::vector<LambdaEntry> lambda;
  std::vector<std::string> discrepancies;

  bool ok() const {
    for (const auto& line : identities)
      if (!line.ok) return false;
    return true;
  }
};

// Case 1 (rho|_H abelian): Subcase A commutation contradiction; Subcase B
// elimination for beta = alpha and forced r = -1 for beta = 1/alpha.
CaseReport verify_case1();

// Case 2 (rho|_Gamma2 reducible): Subcase A p_n equation with finiteness
// from Lemma poly; Subcase B inconsistency chain.
CaseReport verify_case2(int n);

// Case 3 shared algebra: printed e, Theta, r(alpha, z) satisfy R1, R5, R6;
// the beta = alpha branch for c admits no unimodular Theta at all; the
// generic f chain forces the printed constraint (alpha-t)(alpha^2 t-t-alpha).
CaseReport verify_case3_common();

// Case 3 Subcase A (t = alpha): printed f, R4 quadratic, z^2, Tr(ec),
// Tr(Theta^2), pole-separation finiteness for Tr(Theta^2) = P_2n(Tr(ec)).
CaseReport verify_case3_subA(int n);

// Case 3 Subcase B (t = alpha/(alpha^2-1)): printed f, the quartic, the
// T/E displays, elimination to Q(E,T), the degree theorem, and fiber
// finiteness including the T^2 = E^2 = 4 analysis.
CaseReport verify_case3_subB(int n);

struct LambdaSet {
  std::vector<LambdaEntry> entries;
};

struct Certificate {
  int n = 0;
  std::vector<CaseReport> cases;
  LambdaSet lambda;
  std::vector<std::string> discrepancies;
  bool ok = false;
};

LambdaSet lambda_report(int n);
Certificate not_strongly_detected_report(int n);

// Pieces of the Subcase B elimination, exposed for testing.
struct QPolynomial {
  MultiPoly core;              // Q(E,T) after content/extraneous removal
  std::vector<int> e_degrees;  // deg_E of the coefficient of T^(2i), i=0..5
};
QPolynomial compute_q_polynomial();

}  // namespace slopes
