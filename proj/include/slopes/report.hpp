#pragma once

#include <string>
#include <vector>

#include "slopes/character.hpp"
#include "slopes/incompressibility.hpp"

namespace slopes {

// Denominator bound used by the triangle search: max tangle denominator + 2,
// unless overridden (CLI: SLOPES_TRIANGLE_BOUND).
Integer default_triangle_bound(const MontesinosKnot& knot);

// The knot K_n = K(1/3, 1/5, 1/(2n+1), 1/2) and its mutant
// K_n^tau = K(1/5, 1/3, 1/(2n+1), 1/2).
MontesinosKnot kn_knot(int n);
MontesinosKnot kn_mutant(int n);

struct Section2Report {
  int n = 0;
  std::vector<CheckLine> checks;
  bool ok() const;
};

// The edgepath-side verification: Seifert twists, the slope-table dichotomy
// for the slope 4(n+4), the printed gamma and delta systems, the type III
// twist list, and the r-cycle oracles.
Section2Report verify_section2_claims(int n, const Integer& triangle_bound);

struct Section3Report {
  int n = 0;
  Certificate certificate;
  std::vector<CheckLine> checks;  // flattened case identities + degree line
  bool ok() const;
};

// The character-variety side: runs the full certificate and flattens it
// into a checklist.
Section3Report verify_section3_claims(int n);

}  // namespace slopes
