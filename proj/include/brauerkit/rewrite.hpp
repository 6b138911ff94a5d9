// Three-phase rewriting normalization and the equation catalogue backing it.
//
// Phase 1 turns caps into block-caps and pushes them to the left, moving
// circles out into a counter; phase 2 is the mirror image of phase 1 and
// pushes block-cups to the right; phase 3 sorts the remaining crossings
// into block-crossings.  The rule tables cover every shape of adjacent
// pair, so each phase runs to a deterministic fixpoint under a
// leftmost-first scan.
#pragma once

#include <string>
#include <vector>

#include "brauerkit/term.hpp"

namespace brauerkit {

// Rewrites t to its unique normal form.  Deterministic; aborts with
// internal_error if the step budget (10^7) is ever exceeded, which would
// indicate a non-terminating rule interaction.
NormalForm normalize_rewrite(const Term& t);

// One concrete instance of an equation, both sides expanded to flat terms.
struct EquationInstance {
  std::string family;
  Term lhs;
  Term rhs;
};

// Every equation family of the presentation (monoid, cup-cap, sigma,
// sigma-cup, sigma-cap) and of the block rewrite system (cup-block-cap,
// sigma-block-cap, double block-cap, block-sigma, their cup-side duals,
// and the unit/circle equations), instantiated for all admissible
// parameters up to max_index.  The block instances are generated from the
// same rule tables the normalizer executes.
std::vector<EquationInstance> equation_catalogue(int max_index);

}  // namespace brauerkit
