#include "slopes/curve_geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopes {

UV uv_of_projective(const ProjectiveCurveSystem& s) {
  Rational ab = s.a + s.b;
  if (ab == 0)
    throw std::domain_error("circle coordinates degenerate: a + b = 0");
  return {s.b / ab, s.c / ab};
}

UV DiagramVertex::uv() const {
  switch (kind) {
    case Kind::Tangle: {
      Rational q(den(pq));
      return {(q - 1) / q, pq};
    }
    case Kind::Circle:
      return {Rational(1), pq};
    case Kind::Infinity:
      return {Rational(-1), Rational(0)};
  }
  throw std::logic_error("bad vertex kind");
}

std::string DiagramVertex::to_string() const {
  switch (kind) {
    case Kind::Tangle:
      return rat_to_string(pq);
    case Kind::Circle:
      return rat_to_string(pq) + "*";
    case Kind::Infinity:
      return "inf";
  }
  return "?";
}

EdgeKind edge_kind(const DiagramVertex& x, const DiagramVertex& y) {
  using K = DiagramVertex::Kind;
  if (x == y) return EdgeKind::None;
  if (x.kind == K::Infinity || y.kind == K::Infinity) {
    const DiagramVertex& other = x.kind == K::Infinity ? y : x;
    if (other.kind == K::Tangle && den(other.pq) == 1) return EdgeKind::Infinity;
    return EdgeKind::None;
  }
  if (x.kind == K::Circle || y.kind == K::Circle) {
    const DiagramVertex& circ = x.kind == K::Circle ? x : y;
    const DiagramVertex& other = x.kind == K::Circle ? y : x;
    if (other.kind == K::Tangle && other.pq == circ.pq) return EdgeKind::Horizontal;
    return EdgeKind::None;
  }
  // Both tangles.
  Integer p = num(x.pq), q = den(x.pq), r = num(y.pq), s = den(y.pq);
  if (q == 1 && s == 1) {
    Integer diff = p - r;
    if (diff == 1 || diff == -1) return EdgeKind::Vertical;
    return EdgeKind::None;
  }
  Integer det = p * s - q * r;
  if (det == 1 || det == -1) return EdgeKind::NonHorizontal;
  return EdgeKind::None;
}

int r_value(const DiagramVertex& tail, const DiagramVertex& head) {
  if (edge_kind(tail, head) != EdgeKind::NonHorizontal)
    throw std::domain_error("r-value undefined for non-NonHorizontal edge");
  auto [u1, v1] = tail.uv();
  auto [u2, v2] = head.uv();
  if (u1 == u2) throw std::domain_error("r-value undefined: vertical segment");
  // Extend the line through (u1,v1), (u2,v2) to u = 1.
  Rational v_at_1 = v1 + (v2 - v1) / (u2 - u1) * (Rational(1) - u1);
  Integer q = den(v_at_1);
  // Positive if the edge travels upwards (head above tail when traversed
  // leftward).
  int sign = v2 > v1 ? 1 : -1;
  return sign * static_cast<int>(q);
}

namespace {

bool clique_edge(const DiagramVertex& x, const DiagramVertex& y) {
  EdgeKind k = edge_kind(x, y);
  return k == EdgeKind::NonHorizontal || k == EdgeKind::Vertical ||
         k == EdgeKind::Infinity;
}

Triangle sorted_triangle(DiagramVertex a, DiagramVertex b, DiagramVertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

std::set<Triangle> triangles_containing(const DiagramVertex& x,
                                        const DiagramVertex& y,
                                        const Integer& denominator_bound) {
  std::set<Triangle> out;
  if (!clique_edge(x, y)) return out;
  // Candidate third vertices: tangles with bounded denominator in a p-range
  // wide enough to cover all neighbors of x and y, plus infinity.
  Rational lo = x.kind == DiagramVertex::Kind::Infinity ? Rational(0) : x.pq;
  Rational hi = lo;
  auto widen = [&](const DiagramVertex& v) {
    if (v.kind != DiagramVertex::Kind::Infinity) {
      lo = std::min(lo, v.pq);
      hi = std::max(hi, v.pq);
    }
  };
  widen(x);
  widen(y);
  Integer pmin = num(lo) * 2 / den(lo) - 2, pmax = num(hi) * 2 / den(hi) + 2;
  std::vector<DiagramVertex> candidates;
  candidates.push_back(DiagramVertex::infinity());
  for (Integer q = 1; q <= denominator_bound; ++q) {
    for (Integer p = pmin * q; p <= pmax * q; ++p) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      candidates.push_back(DiagramVertex::tangle(Rational(p, q)));
    }
  }
  for (const auto& w : candidates) {
    if (w == x || w == y) continue;
    if (clique_edge(x, w) && clique_edge(y, w))
      out.insert(sorted_triangle(x, y, w));
  }
  return out;
}

UV edge_point(const DiagramVertex& v, const DiagramVertex& w, long k, long m) {
  if (!(0 < k && k < m)) throw std::out_of_range("edge_point: need 0 < k < m");
  auto [uv1, vv1] = v.uv();
  auto [uv2, vv2] = w.uv();
  Rational t(k, m);
  return {t * uv1 + (1 - t) * uv2, t * vv1 + (1 - t) * vv2};
}

std::optional<DiagramVertex> parse_vertex(const std::string& s) {
  if (s == "inf") return DiagramVertex::infinity();
  bool circle = !s.empty() && s.back() == '*';
  std::string body = circle ? s.substr(0, s.size() - 1) : s;
  auto r = parse_reduced_fraction(body);
  if (!r) return std::nullopt;
  return circle ? DiagramVertex::circle(*r) : DiagramVertex::tangle(*r);
}

}  // namespace slopes
