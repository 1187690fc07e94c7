#pragma once

#include "plab/closure.hpp"
#include "plab/proof.hpp"

namespace plab {

// Interprets a proof as a closure operator on the product domain of its
// endsequent.  Axioms become copycats, additive rules inject or branch on
// the tagged sum, multiplicative rules are pure repackagings, and cut
// composes the premise interpretations over the cut formula's domain.
ClosureOp interpret_proof_cgame(const MallProof& p);

}  // namespace plab
