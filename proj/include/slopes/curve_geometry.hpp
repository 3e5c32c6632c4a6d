#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slopes/rational.hpp"

namespace slopes {

// Projective weights [a, b, c] on the train track, up to positive scaling.
struct ProjectiveCurveSystem {
  Rational a, b, c;
};

using UV = std::pair<Rational, Rational>;

// uv-coordinates of [a,b,c]: (b/(a+b), c/(a+b)).  Requires a + b != 0; the
// circle coordinates [0, q, p] must go through the Circle vertex form.
UV uv_of_projective(const ProjectiveCurveSystem& s);

// Vertex of the diagram D: <p/q> tangle, <p/q>-circle, or <infinity>.
struct DiagramVertex {
  enum class Kind { Tangle, Circle, Infinity };
  Kind kind = Kind::Tangle;
  Rational pq;  // reduced; unused for Infinity

  static DiagramVertex tangle(const Rational& pq) { return {Kind::Tangle, pq}; }
  static DiagramVertex circle(const Rational& pq) { return {Kind::Circle, pq}; }
  static DiagramVertex infinity() { return {Kind::Infinity, 0}; }

  UV uv() const;
  bool operator==(const DiagramVertex& o) const {
    return kind == o.kind && (kind == Kind::Infinity || pq == o.pq);
  }
  bool operator<(const DiagramVertex& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == Kind::Infinity) return false;
    return pq < o.pq;
  }
  // Text form: "p/q", "p/q*" for circles, "inf".
  std::string to_string() const;
};

enum class EdgeKind { NonHorizontal, Horizontal, Vertical, Infinity, None };

// Adjacency rules of D.  Tangle pairs p/q, r/s with |ps - qr| = 1 are
// NonHorizontal, except consecutive integers which are Vertical.
EdgeKind edge_kind(const DiagramVertex& x, const DiagramVertex& y);

// Signed r-value of a leftward-directed NonHorizontal edge from `tail`
// (right) to `head` (left): the denominator of the v-coordinate where the
// extended edge meets u = 1, positive when the edge travels upwards.
int r_value(const DiagramVertex& tail, const DiagramVertex& head);

using Triangle = std::array<DiagramVertex, 3>;

// All 3-cliques of the edge relation (NonHorizontal | Vertical | Infinity)
// containing the edge {x, y}; the search is over vertices with denominator
// at most `denominator_bound`.
std::set<Triangle> triangles_containing(const DiagramVertex& x,
                                        const DiagramVertex& y,
                                        const Integer& denominator_bound);

// Subdivision point (k/m) v + ((m-k)/m) w on the edge [v, w]; 0 < k < m.
UV edge_point(const DiagramVertex& v, const DiagramVertex& w, long k, long m);

// Parse the canonical vertex text form.
std::optional<DiagramVertex> parse_vertex(const std::string& s);

}  // namespace slopes
