#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopes/curve_geometry.hpp"

namespace slopes {

// Montesinos knot given by an ordered list of reduced tangle fractions.
struct MontesinosKnot {
  std::vector<Rational> tangles;

  // Parses the comma-separated grammar, e.g. "1/3,1/5,1/7,1/2".  Requires
  // at least 3 tangles, each a reduced fraction in (0, 1).
  static std::optional<MontesinosKnot> parse(const std::string& text);
  std::string to_string() const;
};

// Path in the diagram D, stored leftmost-first (the tangle vertex is last);
// edges are traversed right to left.  A final_fraction < 1 truncates the
// leftmost edge at that fraction of the way from its right endpoint.
// Constant paths sit at a single point of the horizontal edge.
struct Edgepath {
  std::vector<DiagramVertex> vertices;
  Rational final_fraction = Rational(1);  // in (0, 1]
  bool constant = false;
  Rational constant_u;  // position on the horizontal edge when constant

  static Edgepath through(std::vector<DiagramVertex> vs) {
    return Edgepath{std::move(vs), Rational(1), false, Rational(0)};
  }
  static Edgepath constant_at(const Rational& tangle, const Rational& u);

  bool operator==(const Edgepath& o) const;
  // uv of the left end of the path (after truncation).
  UV final_point() const;
  std::string to_string() const;
};

// Twist number 2(e_- - e_+): slope-decreasing minus slope-increasing count
// over NonHorizontal and Vertical edges at u >= 0; Infinity and Horizontal
// edges contribute 0.
long twist_number(const Edgepath& path);

// Twist with a possibly fractional final edge: the partial edge contributes
// 2 * fraction with the sign of a whole edge.
Rational twist_fractional(const Edgepath& path);

enum class SystemType { I, II, III };
const char* system_type_name(SystemType t);

struct EdgepathSystem {
  std::vector<Edgepath> paths;  // canonical representatives
  // Underlying basic paths (types II and III); equal to `paths` stripped of
  // the canonical extension / the <infinity> edge.
  std::vector<Edgepath> basic;
  SystemType type = SystemType::III;
  Rational twist;
};

Rational system_twist(const EdgepathSystem& sys);

// All minimal monotone leftward paths from <p/q> to the line u = 0, by
// graph search over Farey parents with the (E2) common-triangle check.
// For 1/q tangles these are exactly [<1>,<1/2>,...,<1/q>] and [<0>,<1/q>].
std::vector<Edgepath> basic_paths(const Rational& tangle);

std::vector<EdgepathSystem> enumerate_systems(const MontesinosKnot& knot,
                                              SystemType type);
std::vector<EdgepathSystem> enumerate_all_systems(const MontesinosKnot& knot);

// The Seifert-surface system: i-th path [<inf>,<1>,<1/2>,...,<1/q_i>].
// Requires every tangle of the form 1/q.
EdgepathSystem seifert_system(const MontesinosKnot& knot);

// Seifert twist when available.
std::optional<Rational> reference_twist(const MontesinosKnot& knot);

inline Rational boundary_slope(const EdgepathSystem& sys,
                               const Rational& ref_twist) {
  return sys.twist - ref_twist;
}

}  // namespace slopes
