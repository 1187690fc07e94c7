#pragma once

#include "plab/closure.hpp"
#include "plab/formula.hpp"

namespace plab {

// ---------------------------------------------------------------------------
// Strategy sets on formula domains.
//
// Positive-player strategies sp and opponent strategies so are defined by
// mutual recursion and swap under negation.  On an atom, sp are the value
// forcers and so is just the identity; on the player's own additive the
// strategies choose an injection (diverging on the wrong one), on the
// opponent's additive they tuple a response for each side; on a tensor the
// positive strategies are the pairwise smashes, while the opponent side is
// characterized by a closure test rather than an enumeration.
// ---------------------------------------------------------------------------

std::vector<ClosureOp> sp_strategies(const Formula& f);
std::vector<ClosureOp> so_strategies(const Formula& f);

// Membership test for the opponent side of a tensor A (x) B: every positive
// strategy on A cuts the candidate down to an opponent strategy on B, and
// symmetrically.  The candidate must live on the product domain of A and B.
bool member_so_tensor(const Formula& tensor, const ClosureOp& s);

}  // namespace plab
