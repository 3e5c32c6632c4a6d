#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopes/edgepath.hpp"

namespace slopes {

// Cyclic tuple of final r-values, one per path.
struct RCycle {
  std::vector<int> values;

  // Equality up to cyclic permutation.
  bool cyclic_equal(const RCycle& o) const;
  std::string to_string() const;
};

// Per-path r-value of the last NonHorizontal edge (in right-to-left
// traversal order), assembled cyclically.  Throws on constant paths or
// paths without a NonHorizontal edge.
RCycle final_r_cycle(const EdgepathSystem& sys);

struct ReversibilityResult {
  bool value = false;
  bool formal = false;        // outcome of the clique-based test
  bool from_fixture = false;  // fixture override applied
  bool discrepancy() const { return from_fixture && value != formal; }
};

// Formal test: each pair of successive edges lies in triangles sharing a
// common edge (triangles from triangles_containing).  A fixture table of
// asserted verdicts dominates; disagreements are reported, not hidden.
ReversibilityResult completely_reversible(const Edgepath& path,
                                          const Integer& triangle_bound);

enum class Status { Compressible, IncompressibleExtendable, Unknown };
enum class RuleId { RA, RB, RC, None };
const char* status_name(Status s);
const char* rule_name(RuleId r);

struct Verdict {
  Status status = Status::Unknown;
  RuleId rule = RuleId::None;
  std::string notes;
};

// Rule table covering exactly the judgments needed for the knots at hand:
//   R-A: type III, nonzero sum of integer crossing vertices, and at least
//        two completely reversible paths => Compressible.
//   R-B: type II whose r-cycle cyclically matches the dead pattern
//        (-4, 1, -2n, 1), n taken from the knot's 1/(2n+1) tangle
//        => Compressible.
//   R-C: all paths end on the left edge of S, minimal, final v-coordinates
//        of the basic paths have positive sum, and the r-cycle is not the
//        dead pattern => IncompressibleExtendable.
// Anything else => Unknown.
Verdict classify_system(const EdgepathSystem& sys, const MontesinosKnot& knot,
                        const Integer& triangle_bound);

struct SystemRecord {
  EdgepathSystem system;
  Rational slope;
  std::optional<RCycle> r_cycle;
  Verdict verdict;
};

struct SlopeRecord {
  Rational slope;
  std::vector<SystemRecord> systems;
};

// One record per distinct slope over all enumerated admissible systems,
// sorted by slope; systems annotated with their classification.
std::vector<SlopeRecord> slope_table(const MontesinosKnot& knot,
                                     const Rational& ref_twist,
                                     const Integer& triangle_bound);

}  // namespace slopes
