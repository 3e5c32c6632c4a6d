#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "slopes/edgepath.hpp"

using namespace slopes;

namespace {

DiagramVertex T(long p, long q) { return DiagramVertex::tangle(Rational(p, q)); }
DiagramVertex Inf() { return DiagramVertex::infinity(); }

MontesinosKnot Kn(long n) {
  return *MontesinosKnot::parse("1/3,1/5,1/" + std::to_string(2 * n + 1) +
                                ",1/2");
}
MontesinosKnot KnTau(long n) {
  return *MontesinosKnot::parse("1/5,1/3,1/" + std::to_string(2 * n + 1) +
                                ",1/2");
}

Edgepath stair(long q_from, long q_to) {
  // [<1/q_to>, ..., <1/q_from>] with q_to <= q_from, leftmost-first.
  std::vector<DiagramVertex> vs;
  for (long q = q_to; q <= q_from; ++q) vs.push_back(T(1, q));
  return Edgepath::through(std::move(vs));
}

}  // namespace

TEST_CASE("knot grammar") {
  auto k = MontesinosKnot::parse("1/3,1/5,1/7,1/2");
  REQUIRE(k.has_value());
  CHECK(k->tangles == std::vector<Rational>{Rational(1, 3), Rational(1, 5),
                                            Rational(1, 7), Rational(1, 2)});
  CHECK(k->to_string() == "1/3,1/5,1/7,1/2");
  CHECK(!MontesinosKnot::parse("2/0,1/3"));
  CHECK(!MontesinosKnot::parse("1/3,1/5"));       // too few tangles
  CHECK(!MontesinosKnot::parse("2/4,1/3,1/2"));   // not reduced
  CHECK(!MontesinosKnot::parse("-1/3,1/5,1/2"));  // outside (0,1)
  CHECK(!MontesinosKnot::parse("1/3,,1/2"));
}

TEST_CASE("basic path dichotomy for 1/q") {
  auto p5 = basic_paths(Rational(1, 5));
  REQUIRE(p5.size() == 2);
  CHECK(p5[0].vertices == std::vector<DiagramVertex>{T(0, 1), T(1, 5)});
  CHECK(p5[1].vertices == std::vector<DiagramVertex>{T(1, 1), T(1, 2), T(1, 3),
                                                     T(1, 4), T(1, 5)});
  auto p2 = basic_paths(Rational(1, 2));
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].vertices == std::vector<DiagramVertex>{T(0, 1), T(1, 2)});
  CHECK(p2[1].vertices == std::vector<DiagramVertex>{T(1, 1), T(1, 2)});
  for (long q = 2; q <= 40; ++q) {
    auto paths = basic_paths(Rational(1, q));
    REQUIRE(paths.size() == 2);
    std::set<long> twists{twist_number(paths[0]), twist_number(paths[1])};
    CHECK(twists == std::set<long>{2, 2 - 2 * q});
  }
  CHECK_THROWS(basic_paths(Rational(2)));
}

TEST_CASE("twist numbers of the printed paths") {
  Edgepath s1 = stair(5, 1);
  s1.vertices.insert(s1.vertices.begin(), Inf());
  CHECK(twist_number(s1) == -8);
  CHECK(twist_number(Edgepath::through({T(0, 1), T(1, 5)})) == 2);
  CHECK(twist_number(Edgepath::through({T(0, 1), T(1, 1), T(1, 2), T(1, 3)})) ==
        -2);
}

TEST_CASE("fractional twist") {
  Edgepath p = Edgepath::through({T(0, 1), T(1, 5)});
  CHECK(twist_fractional(p) == Rational(2));
  p.final_fraction = Rational(1, 2);
  CHECK(twist_fractional(p) == Rational(1));
  CHECK(p.final_point() ==
        UV{Rational(2, 5), Rational(1, 10)});  // halfway down the edge
}

TEST_CASE("seifert twists are -(14+4n)") {
  for (long n = 2; n <= 10; ++n) {
    CHECK(seifert_system(Kn(n)).twist == Rational(-(14 + 4 * n)));
    CHECK(seifert_system(KnTau(n)).twist == Rational(-(14 + 4 * n)));
    CHECK(*reference_twist(Kn(n)) == Rational(-(14 + 4 * n)));
  }
  CHECK_THROWS(seifert_system(*MontesinosKnot::parse("2/5,1/3,1/2")));
  CHECK(!reference_twist(*MontesinosKnot::parse("2/5,1/3,1/2")));
}

TEST_CASE("type III twist multiset matches the printed list") {
  for (long n : {2L, 3L, 5L, 10L}) {
    auto systems = enumerate_systems(KnTau(n), SystemType::III);
    CHECK(systems.size() == 16);
    std::set<Rational> got;
    for (const auto& s : systems) got.insert(s.twist);
    std::set<Rational> want;
    for (long v : {-12L, -8L, -6L, -2L, 2L, 4L, 8L, 6 - 4 * n, 2 - 4 * n,
                   -4 * n, -4 - 4 * n, -8 - 4 * n, -10 - 4 * n, -14 - 4 * n})
      want.insert(Rational(v));
    CHECK(got == want);
  }
}

TEST_CASE("unique type III system with t=2 is Claim 1's delta") {
  for (long n : {2L, 4L}) {
    std::vector<EdgepathSystem> t2;
    for (const auto& s : enumerate_systems(KnTau(n), SystemType::III))
      if (s.twist == 2) t2.push_back(s);
    REQUIRE(t2.size() == 1);
    const auto& d = t2[0].paths;
    CHECK(d[0].vertices == std::vector<DiagramVertex>{Inf(), T(0, 1), T(1, 5)});
    CHECK(d[1].vertices ==
          std::vector<DiagramVertex>{Inf(), T(1, 1), T(1, 2), T(1, 3)});
    CHECK(d[2].vertices ==
          std::vector<DiagramVertex>{Inf(), T(0, 1), T(1, 2 * n + 1)});
    CHECK(d[3].vertices == std::vector<DiagramVertex>{Inf(), T(0, 1), T(1, 2)});
  }
}

TEST_CASE("type II classes and extension invariance") {
  for (long n : {2L, 3L}) {
    auto systems = enumerate_systems(Kn(n), SystemType::II);
    CHECK(systems.size() == 16);
    for (const auto& s : systems) {
      // Twist of the class = t(basic) + 2 * sum of final v of basic paths.
      Rational basic_twist(0), v_sum(0);
      for (const auto& b : s.basic) {
        basic_twist += twist_number(b);
        v_sum += b.final_point().second;
      }
      CHECK(s.twist == basic_twist + 2 * v_sum);
      // Canonical representatives end at <0>.
      for (const auto& p : s.paths)
        CHECK(p.final_point() == UV{Rational(0), Rational(0)});
    }
  }
}

TEST_CASE("gamma class carries slope 4(n+4)") {
  for (long n = 2; n <= 10; ++n) {
    Rational ref = *reference_twist(Kn(n));
    std::vector<EdgepathSystem> t2;
    for (const auto& s : enumerate_systems(Kn(n), SystemType::II))
      if (s.twist == 2) t2.push_back(s);
    REQUIRE(t2.size() == 1);
    CHECK(boundary_slope(t2[0], ref) == Rational(4 * (n + 4)));
    // The printed gamma: basic paths end 1, 0, 0, 1.
    const auto& g = t2[0];
    CHECK(g.basic[0].vertices ==
          std::vector<DiagramVertex>{T(1, 1), T(1, 2), T(1, 3)});
    CHECK(g.basic[1].vertices == std::vector<DiagramVertex>{T(0, 1), T(1, 5)});
    CHECK(g.basic[2].vertices ==
          std::vector<DiagramVertex>{T(0, 1), T(1, 2 * n + 1)});
    CHECK(g.basic[3].vertices ==
          std::vector<DiagramVertex>{T(1, 1), T(1, 2)});
    // The extension gamma'_0 = [<0>,<1>,<1/2>,<1/3>] has twist -2.
    CHECK(twist_number(g.paths[0]) == -2);
  }
}

TEST_CASE("slope differences are independent of the reference") {
  auto systems = enumerate_systems(Kn(2), SystemType::III);
  Rational d1 = boundary_slope(systems[0], Rational(0)) -
                boundary_slope(systems[1], Rational(0));
  Rational d2 = boundary_slope(systems[0], Rational(-22)) -
                boundary_slope(systems[1], Rational(-22));
  CHECK(d1 == d2);
}

TEST_CASE("type I: unique candidate has t=8") {
  for (long n : {2L, 3L}) {
    for (const auto& knot : {Kn(n), KnTau(n)}) {
      auto systems = enumerate_systems(knot, SystemType::I);
      REQUIRE(systems.size() == 1);
      CHECK(systems[0].twist == Rational(8));
      for (const auto& p : systems[0].paths) {
        CHECK(!p.constant);
        CHECK(p.vertices.front() == T(0, 1));
        CHECK(p.final_fraction == 1);
      }
      // In particular no type I system with t = 2.
      for (const auto& s : systems) CHECK(s.twist != Rational(2));
    }
  }
}
