#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopes/curve_geometry.hpp"

using namespace slopes;

namespace {
DiagramVertex T(long p, long q) { return DiagramVertex::tangle(Rational(p, q)); }
}  // namespace

TEST_CASE("uv_of_projective") {
  CHECK(uv_of_projective({1, 2, 1}) == UV{Rational(2, 3), Rational(1, 3)});
  CHECK(uv_of_projective({1, 0, 0}) == UV{Rational(0), Rational(0)});
  CHECK_THROWS(uv_of_projective({1, -1, 5}));
  // Circle coordinates [0, q, p] bypass the formula.
  CHECK(DiagramVertex::circle(Rational(1, 2)).uv() ==
        UV{Rational(1), Rational(1, 2)});
}

TEST_CASE("vertex uv coordinates") {
  CHECK(T(1, 3).uv() == UV{Rational(2, 3), Rational(1, 3)});
  CHECK(T(2, 1).uv() == UV{Rational(0), Rational(2)});
  CHECK(DiagramVertex::infinity().uv() == UV{Rational(-1), Rational(0)});
  // [1, q-1, p] agrees with the tangle vertex for assorted reduced p/q.
  for (long q = 1; q <= 9; ++q)
    for (long p = -9; p <= 9; ++p) {
      if (boost::multiprecision::gcd(Integer(p < 0 ? -p : p), Integer(q)) != 1)
        continue;
      CHECK(uv_of_projective({1, Rational(q - 1), Rational(p)}) ==
            T(p, q).uv());
      CHECK(T(p, q).uv().second == Rational(p, q));
    }
}

TEST_CASE("vertex text form") {
  CHECK(T(1, 3).to_string() == "1/3");
  CHECK(T(-2, 1).to_string() == "-2");
  CHECK(DiagramVertex::circle(Rational(1, 2)).to_string() == "1/2*");
  CHECK(DiagramVertex::infinity().to_string() == "inf");
  CHECK(parse_vertex("1/3") == T(1, 3));
  CHECK(parse_vertex("1/2*") == DiagramVertex::circle(Rational(1, 2)));
  CHECK(parse_vertex("inf") == DiagramVertex::infinity());
  CHECK(!parse_vertex("2/4"));
  CHECK(!parse_vertex(""));
  CHECK(!parse_vertex("*"));
}

TEST_CASE("edge_kind") {
  CHECK(edge_kind(T(1, 1), T(1, 2)) == EdgeKind::NonHorizontal);
  CHECK(edge_kind(T(1, 2), T(1, 4)) == EdgeKind::None);
  CHECK(edge_kind(T(1, 1), DiagramVertex::infinity()) == EdgeKind::Infinity);
  CHECK(edge_kind(T(1, 2), DiagramVertex::infinity()) == EdgeKind::None);
  CHECK(edge_kind(T(0, 1), T(1, 1)) == EdgeKind::Vertical);  // precedence
  CHECK(edge_kind(T(3, 1), T(2, 1)) == EdgeKind::Vertical);
  CHECK(edge_kind(T(0, 1), T(2, 1)) == EdgeKind::None);
  CHECK(edge_kind(DiagramVertex::circle(Rational(1, 2)), T(1, 2)) ==
        EdgeKind::Horizontal);
  CHECK(edge_kind(DiagramVertex::circle(Rational(1, 2)), T(1, 3)) ==
        EdgeKind::None);
  CHECK(edge_kind(T(1, 3), T(1, 3)) == EdgeKind::None);
  CHECK(edge_kind(T(2, 5), T(1, 2)) == EdgeKind::NonHorizontal);
}

TEST_CASE("r_value on the printed edges") {
  CHECK(r_value(T(1, 5), T(0, 1)) == -4);
  CHECK(r_value(T(1, 2), T(1, 1)) == 1);
  CHECK(r_value(T(1, 7), T(0, 1)) == -6);
  // -2n entries for n in [2, 10].
  for (long n = 2; n <= 10; ++n)
    CHECK(r_value(T(1, 2 * n + 1), T(0, 1)) == -2 * n);
  CHECK_THROWS(r_value(T(0, 1), T(1, 1)));  // vertical edge has no r-value
}

TEST_CASE("r_value sign flips with edge direction") {
  for (long q = 2; q <= 8; ++q)
    for (long p = 1; p < q; ++p) {
      if (boost::multiprecision::gcd(Integer(p), Integer(q)) != 1) continue;
      for (long s = 1; s < q; ++s)
        for (long r = 0; r <= s; ++r) {
          if (edge_kind(T(p, q), T(r, s)) != EdgeKind::NonHorizontal) continue;
          CHECK(r_value(T(p, q), T(r, s)) == -r_value(T(r, s), T(p, q)));
        }
    }
}

TEST_CASE("triangles_containing printed examples") {
  auto tri1 = triangles_containing(T(0, 1), T(1, 5), 7);
  REQUIRE(tri1.size() == 2);
  std::set<Triangle> want1;
  for (const auto& t : tri1) want1.insert(t);
  bool has14 = false, has16 = false;
  for (const auto& t : tri1)
    for (const auto& v : t) {
      if (v == T(1, 4)) has14 = true;
      if (v == T(1, 6)) has16 = true;
    }
  CHECK(has14);
  CHECK(has16);

  auto tri2 = triangles_containing(T(0, 1), DiagramVertex::infinity(), 7);
  REQUIRE(tri2.size() == 2);
  bool hasp1 = false, hasm1 = false;
  for (const auto& t : tri2)
    for (const auto& v : t) {
      if (v == T(1, 1)) hasp1 = true;
      if (v == T(-1, 1)) hasm1 = true;
    }
  CHECK(hasp1);
  CHECK(hasm1);

  CHECK(triangles_containing(DiagramVertex::circle(Rational(0)), T(0, 1), 7)
            .empty());
}

TEST_CASE("NonHorizontal edges lie in exactly two mediant cliques") {
  // Clique-search oracle over denominators <= 12: each Farey edge p/q -- r/s
  // has exactly the mediant child and the Farey parent as common neighbors.
  for (long q = 1; q <= 6; ++q)
    for (long p = 0; p <= q; ++p) {
      if (boost::multiprecision::gcd(Integer(p), Integer(q)) != 1) continue;
      for (long s = 1; s <= 6; ++s)
        for (long r = 0; r <= s; ++r) {
          if (boost::multiprecision::gcd(Integer(r), Integer(s)) != 1) continue;
          DiagramVertex x = T(p, q), y = T(r, s);
          if (x == y) continue;
          EdgeKind k = edge_kind(x, y);
          if (k != EdgeKind::NonHorizontal && k != EdgeKind::Vertical) continue;
          auto tris = triangles_containing(x, y, 12);
          CHECK(tris.size() == 2);
          DiagramVertex mediant = T(p + r, q + s);
          bool has_mediant = false;
          for (const auto& t : tris)
            for (const auto& v : t)
              if (v == mediant) has_mediant = true;
          CHECK(has_mediant);
        }
    }
}

TEST_CASE("edge_point") {
  CHECK(edge_point(T(0, 1), T(1, 2), 1, 2) == UV{Rational(1, 4), Rational(1, 4)});
  // Affine combination (k/m) v + ((m-k)/m) w.
  CHECK(edge_point(T(1, 1), T(1, 2), 1, 3) == UV{Rational(1, 3), Rational(2, 3)});
  CHECK_THROWS(edge_point(T(0, 1), T(1, 2), 0, 2));
  CHECK_THROWS(edge_point(T(0, 1), T(1, 2), 2, 2));
}
