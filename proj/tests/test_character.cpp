#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <iostream>

#include "slopes/character.hpp"

using namespace slopes;

namespace {

RatFun rf(Var v, int e = 1) { return RatFun::var(v, e); }

MultiPoly upoly(Var v, std::initializer_list<std::pair<long, int>> terms) {
  MultiPoly out;
  for (const auto& [c, e] : terms) {
    Mono m{};
    m[static_cast<int>(v)] = e;
    out.add_term(m, Rational(c));
  }
  return out;
}

void require_ok(const CaseReport& rep) {
  for (const auto& line : rep.identities) {
    INFO(rep.case_id << ": " << line.name);
    CHECK(line.ok);
  }
  CHECK(rep.ok());
}

bool lambda_has(const LambdaSet& set, const std::string& value) {
  for (const auto& entry : set.entries)
    if (entry.value == value) return true;
  return false;
}

}  // namespace

TEST_CASE("p_n sequence: closed recursion, matrix origin, degree, non-degeneracy") {
  // p_n is the upper-right entry of (AB)^n for A = diag(x, 1/x) and
  // B = [[x, 1], [0, 1/x]].
  RatFun x = rf(Var::x);
  SymMat2 A(x, RatFun(Rational(0)), RatFun(Rational(0)), x.inverse());
  SymMat2 B(x, RatFun(Rational(1)), RatFun(Rational(0)), x.inverse());
  for (int n = 1; n <= 30; ++n) {
    CAPTURE(n);
    RatFun pn = pn_sequence(n);
    SymMat2 m = (A * B).pow(n);
    CHECK(m.at(0, 1) == pn);
    CHECK(m.at(0, 0) == x.pow(2 * n));
    CHECK(m.at(1, 0).is_zero());
    // x^(2n-3) p_n is a polynomial of degree 4(n-1).
    RatFun cleared = pn * x.pow(2 * n - 3);
    CHECK(cleared.den().is_constant());
    CHECK(cleared.num().degree(Var::x) == 4 * (n - 1));
    // p_n never equals 1/((1-x^2) x^(2n-1)) as a rational function.
    RatFun rhs = (RatFun(Rational(1)) - x.pow(2)).inverse() * x.pow(1 - 2 * n);
    CHECK(pn != rhs);
  }
  CHECK(pn_sequence(1) == x);
  CHECK(pn_sequence(2) == x.pow(-1) + x.pow(3));
  CHECK_THROWS(pn_sequence(0));
}

TEST_CASE("Case 1 report: all identities certified") {
  CaseReport rep = verify_case1();
  require_ok(rep);
  // The elimination in Subcase B yields the printed degree-8 polynomial.
  MultiPoly cyc = upoly(Var::a, {{1, 8}, {1, 6}, {1, 4}, {1, 2}, {1, 0}});
  bool found = false;
  for (const auto& w : rep.finiteness)
    found = found || (w.polynomial == cyc.to_string() && w.degree == 8);
  CHECK(found);
}

TEST_CASE("Case 2 report: identities for several twist parameters") {
  for (int n : {1, 2, 3, 5, 8}) {
    CAPTURE(n);
    CaseReport rep = verify_case2(n);
    require_ok(rep);
    CHECK(rep.finiteness.size() == 1);
    CHECK(rep.finiteness.front().degree == 4 * n);
    // Subcase B contributes a discrepancy note about the displayed residual.
    CHECK(rep.discrepancies.size() == 1);
  }
}

TEST_CASE("Case 3 common algebra: printed matrices and the f chain") {
  CaseReport rep = verify_case3_common();
  require_ok(rep);
  CHECK(rep.discrepancies.size() == 2);
  // The printed sextic is retained in Lambda even though the derived
  // elimination empties the subcase.
  MultiPoly sextic = upoly(Var::a, {{1, 6}, {-1, 4}, {-1, 2}, {1, 0}});
  bool found = false;
  for (const auto& entry : rep.lambda)
    found = found || entry.value == sextic.to_string();
  CHECK(found);
}

TEST_CASE("Case 3 Subcase A: reports for n = 2..6") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CaseReport rep = verify_case3_subA(n);
    require_ok(rep);
    CHECK(rep.discrepancies.size() == 1);  // the Tr(ec) denominator typo
  }
}

TEST_CASE("Case 3 Subcase B: reports for n = 2..4") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    CaseReport rep = verify_case3_subB(n);
    require_ok(rep);
    CHECK(rep.discrepancies.size() == 1);  // (+-2, +-2) are in the image
  }
}

TEST_CASE("Q polynomial: shape, degrees, and composition degrees") {
  QPolynomial q = compute_q_polynomial();
  CHECK(q.core.degree(Var::T) == 10);
  CHECK(q.e_degrees == std::vector<int>{12, 11, 10, 8, 7, 4});
  for (int k = 1; k <= 10; k += 2) CHECK(q.core.coeff_of(Var::T, k).is_zero());
  CHECK(q.core.rational_content() == Rational(1));
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    MultiPoly pn = trace_power_poly(n, Var::E);
    MultiPoly qn = q.core.subst(Var::T, pn);
    CHECK(qn.degree(Var::E) == 4 + 10 * n);
    // Summand degrees 12, 11+2n, 10+4n, 8+6n, 7+8n, 4+10n; the top one wins.
    for (int i = 0; i <= 5; ++i) {
      MultiPoly part = q.core.coeff_of(Var::T, 2 * i) * pn.pow(2 * i);
      CHECK(part.degree(Var::E) == q.e_degrees[i] + 2 * i * n);
    }
  }
}

TEST_CASE("Lambda report: base values and the recorded polynomial sources") {
  LambdaSet lam = lambda_report(2);
  CHECK(lambda_has(lam, "0"));
  CHECK(lambda_has(lam, "2"));
  CHECK(lambda_has(lam, "-2"));
  CHECK(lambda_has(lam, upoly(Var::a, {{1, 8}, {1, 6}, {1, 4}, {1, 2}, {1, 0}})
                            .to_string()));
  CHECK(lambda_has(lam, upoly(Var::a, {{1, 6}, {-1, 4}, {-1, 2}, {1, 0}})
                            .to_string()));
  CHECK(lambda_has(lam, "2^(1/2) + 2^(-1/2) and its negative"));
  CHECK(lambda_has(lam, upoly(Var::a, {{16, 10}, {-48, 8}, {15, 6}, {36, 4},
                                       {-1, 2}, {-2, 0}})
                            .to_string()));
  // At least eight distinct finiteness-bearing entries beyond the base set.
  CHECK(lam.entries.size() >= 11);
}

TEST_CASE("Full certificate aggregates all cases and discrepancies") {
  Certificate cert = not_strongly_detected_report(2);
  CHECK(cert.ok);
  CHECK(cert.cases.size() == 5);
  CHECK(cert.discrepancies.size() >= 4);
  std::cout << "certificate n=2: " << cert.cases.size() << " cases, "
            << cert.lambda.entries.size() << " lambda entries, "
            << cert.discrepancies.size() << " recorded discrepancies\n";
  for (const auto& rep : cert.cases) {
    int bad = 0;
    for (const auto& line : rep.identities) bad += line.ok ? 0 : 1;
    std::cout << "  " << rep.case_id << ": " << rep.identities.size()
              << " identities, " << bad << " failing\n";
  }
}
