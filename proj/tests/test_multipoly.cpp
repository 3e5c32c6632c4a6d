#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slopes/multipoly.hpp"
#include "slopes/ratfun.hpp"

using namespace slopes;

namespace {

MultiPoly V(Var v, int e = 1) { return MultiPoly::var(v, e); }
MultiPoly C(long c) { return MultiPoly(c); }

MultiPoly random_poly(std::mt19937& rng, int max_terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> dg(0, max_deg);
  std::uniform_int_distribution<long> cf(-5, 5);
  std::uniform_int_distribution<int> vr(0, 2);
  MultiPoly p;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    Mono m{};
    m[vr(rng)] = dg(rng);
    m[vr(rng)] += dg(rng);
    p.add_term(m, Rational(cf(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("construction and canonical form") {
  MultiPoly z;
  CHECK(z.is_zero());
  CHECK(z.total_degree() == -1);
  MultiPoly p = V(Var::a, 2) - C(1);
  CHECK(p.term_count() == 2);
  CHECK(p.degree(Var::a) == 2);
  CHECK(p.degree(Var::z) == 0);
  CHECK((p - p).is_zero());
  CHECK(p + C(1) == V(Var::a, 2));
}

TEST_CASE("graded lex leading term") {
  // a*z^2 (degree 3) beats a^2 (degree 2); at equal degree a^2 beats a*z.
  MultiPoly p = V(Var::a) * V(Var::z, 2) + V(Var::a, 2);
  Mono lead = p.leading_mono();
  CHECK(lead[0] == 1);
  CHECK(lead[1] == 2);
  MultiPoly q = V(Var::a, 2) + V(Var::a) * V(Var::z);
  CHECK(q.leading_mono()[0] == 2);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20260826);
  for (int i = 0; i < 120; ++i) {
    MultiPoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("substitution and evaluation") {
  MultiPoly p = V(Var::a, 2) * V(Var::z) - C(3);
  CHECK(p.subst(Var::z, C(2)) == C(2) * V(Var::a, 2) - C(3));
  std::array<Rational, kNumVars> pt{};
  pt[0] = Rational(2);
  pt[1] = Rational(1, 2);
  CHECK(p.eval_const(pt) == Rational(-1));
  CHECK(V(Var::a, 4).halve_exponents(Var::a) == V(Var::a, 2));
  CHECK(p.rename(Var::z, Var::w) == V(Var::a, 2) * V(Var::w) - C(3));
}

TEST_CASE("content and normalization") {
  MultiPoly p = C(4) * V(Var::a) + C(6);
  CHECK(p.rational_content() == Rational(2));
  CHECK(p.primitive_normalized() == C(2) * V(Var::a) + C(3));
  MultiPoly q = -(C(2) * V(Var::a) + C(4));
  CHECK(q.primitive_normalized() == V(Var::a) + C(2));
  MultiPoly half = V(Var::a).scaled(Rational(1, 2)) + C(1);
  CHECK(half.primitive_normalized() == V(Var::a) + C(2));
}

TEST_CASE("try_divide") {
  MultiPoly f = (V(Var::a) + V(Var::z)) * (V(Var::a) - V(Var::z));
  auto q = try_divide(f, V(Var::a) + V(Var::z));
  REQUIRE(q.has_value());
  CHECK(*q == V(Var::a) - V(Var::z));
  CHECK(!try_divide(V(Var::a, 2) + C(1), V(Var::a) + C(1)));
  CHECK(divides(V(Var::z), V(Var::z, 3)));
}

TEST_CASE("poly_gcd") {
  MultiPoly a4m1 = V(Var::a, 4) - C(1);
  MultiPoly a2m1 = V(Var::a, 2) - C(1);
  CHECK(poly_gcd(a4m1, a2m1) == a2m1);
  // Multivariate: gcd((a+z)^2 (a-1), (a+z)(z-1)) = a+z.
  MultiPoly apz = V(Var::a) + V(Var::z);
  CHECK(poly_gcd(apz * apz * (V(Var::a) - C(1)), apz * (V(Var::z) - C(1))) ==
        apz);
  CHECK(poly_gcd(C(6), C(4)) == C(1));
  CHECK(poly_gcd(MultiPoly(), a2m1) == a2m1);
  // Random products share their planted common factor.
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    MultiPoly common = random_poly(rng) + V(Var::a) + C(1);
    MultiPoly f = common * (random_poly(rng) + C(1));
    MultiPoly g = common * (random_poly(rng) + V(Var::z) + C(2));
    CHECK(divides(common.primitive_normalized(), poly_gcd(f, g)));
  }
}

TEST_CASE("resultant basics") {
  MultiPoly x2m1 = V(Var::x, 2) - C(1);
  MultiPoly xm1 = V(Var::x) - C(1);
  CHECK(resultant(x2m1, xm1, Var::x).is_zero());
  CHECK(resultant(V(Var::x, 2) + C(1), xm1, Var::x) == C(2));
}

TEST_CASE("resultant vanishes iff common root, 200 random instances") {
  // Oracle: build both polynomials from explicit rational roots.
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> rn(-4, 4), rd(1, 3);
  std::uniform_int_distribution<int> deg(1, 3), coin(0, 1);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Rational> rf, rg;
    for (int i = 0, n = deg(rng); i < n; ++i)
      rf.push_back(Rational(rn(rng), rd(rng)));
    for (int i = 0, n = deg(rng); i < n; ++i)
      rg.push_back(Rational(rn(rng), rd(rng)));
    if (coin(rng)) rg[0] = rf[0];  // sometimes force a shared root
    auto build = [](const std::vector<Rational>& roots) {
      MultiPoly p = C(1);
      for (const auto& r : roots) {
        MultiPoly lin = MultiPoly::var(Var::x).scaled(Rational(den(r))) -
                        MultiPoly(Rational(num(r)));
        p *= lin;
      }
      return p;
    };
    bool share = false;
    for (const auto& u : rf)
      for (const auto& v : rg)
        if (u == v) share = true;
    MultiPoly res = resultant(build(rf), build(rg), Var::x);
    CHECK(res.is_zero() == share);
  }
}

TEST_CASE("bivariate resultant eliminates") {
  // Res_x(x - a, x^2 - z) = a^2 - z up to sign.
  MultiPoly f = V(Var::x) - V(Var::a);
  MultiPoly g = V(Var::x, 2) - V(Var::z);
  MultiPoly r = resultant(f, g, Var::x).primitive_normalized();
  CHECK(r == (V(Var::a, 2) - V(Var::z)).primitive_normalized());
}

TEST_CASE("prem identity") {
  std::mt19937 rng(99);
  for (int i = 0; i < 30; ++i) {
    MultiPoly f = random_poly(rng) + V(Var::a, 3);
    MultiPoly g = random_poly(rng) + V(Var::a, 2);
    if (f.is_zero() || g.is_zero()) continue;
    if (f.degree(Var::a) < g.degree(Var::a)) std::swap(f, g);
    if (g.degree(Var::a) < 1) continue;
    MultiPoly r = prem(f, g, Var::a);
    CHECK(r.degree(Var::a) < g.degree(Var::a));
    // lc(g)^(df-dg+1) f - r must be divisible by g.
    MultiPoly lc = g.coeff_of(Var::a, g.degree(Var::a));
    int e = f.degree(Var::a) - g.degree(Var::a) + 1;
    CHECK(divides(g, lc.pow(e) * f - r));
  }
}

TEST_CASE("trace power polynomials") {
  CHECK(trace_power_poly(0, Var::x) == C(2));
  CHECK(trace_power_poly(1, Var::x) == V(Var::x));
  CHECK(trace_power_poly(2, Var::x) == V(Var::x, 2) - C(2));
  CHECK(trace_power_poly(4, Var::x) ==
        V(Var::x, 4) - C(4) * V(Var::x, 2) + C(2));
  for (int n = 1; n <= 12; ++n) {
    MultiPoly p = trace_power_poly(n, Var::x);
    CHECK(p.degree(Var::x) == n);
    CHECK(p.coeff_of(Var::x, n) == C(1));  // monic
  }
}

TEST_CASE("ratfun normalization") {
  RatFun f(V(Var::a, 4) - C(1), V(Var::a, 2) - C(1));
  CHECK(f == RatFun(V(Var::a, 2) + C(1)));
  RatFun g(V(Var::z, 2), V(Var::z, 5));
  CHECK(g == RatFun(C(1), V(Var::z, 3)));
  RatFun h(-V(Var::a), C(-1));
  CHECK(h == RatFun(V(Var::a)));
  CHECK_THROWS(RatFun(C(1), MultiPoly()));
}

TEST_CASE("ratfun arithmetic") {
  RatFun a = RatFun::var(Var::a);
  RatFun one(Rational(1));
  RatFun s = a + one / a;
  CHECK(s == RatFun(V(Var::a, 2) + C(1), V(Var::a)));
  CHECK(s - s == RatFun());
  CHECK(a * a.inverse() == one);
  CHECK(a.pow(-2) == one / (a * a));
  RatFun t = (a - one) / (a + one);
  CHECK(t * (a + one) == a - one);
  // Substitution clears value denominators exactly.
  RatFun u = RatFun(V(Var::x, 2) + C(1), V(Var::x));
  CHECK(u.subst(Var::x, one / a) ==
        RatFun(V(Var::a, 2) + C(1), V(Var::a)));
}

TEST_CASE("is_unit_off_locus") {
  MultiPoly a2m1 = V(Var::a, 2) - C(1);
  std::vector<MultiPoly> locus{a2m1};
  CHECK(is_unit_off_locus(a2m1 * a2m1.scaled(Rational(3, 2)), locus));
  CHECK(is_unit_off_locus(V(Var::a, 5) * a2m1, locus));  // monomials are units
  CHECK(!is_unit_off_locus(a2m1 * (V(Var::a) + C(2)), locus));
  CHECK(is_unit_off_locus(C(7), locus));
  CHECK(!is_unit_off_locus(MultiPoly(), locus));
}
