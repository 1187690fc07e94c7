#pragma once
// Cut elimination.
//
// Cuts are removed innermost-first; each reduction step looks at the last
// rules of the two (by then cut-free) premises:
//   - an axiom premise disappears, repositioning the surviving premise's
//     cut occurrence to keep the conclusion order;
//   - two principal rules step to cuts on the subformulas (+/& pick the
//     premise matching the injection, */| produce two nested cuts);
//   - otherwise the non-principal rule is commuted below the cut; when
//     neither is principal, the premise whose cut occurrence is P-rooted
//     commutes first.
// Commuting past a tensorR context would reorder the conclusion, so that
// premise is skipped in favor of the other; if both premises are stuck the
// elimination fails. A step budget of 10x the input size guards divergence.
//
// The conclusion sequent is preserved in order, not just as a multiset.

#include "plab/proof.hpp"

namespace plab {

MallProof eliminate_cuts(const MallProof& p);

}  // namespace plab
