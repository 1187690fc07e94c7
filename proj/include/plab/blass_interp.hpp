#pragma once

#include "plab/compose.hpp"
#include "plab/proof.hpp"
#include "plab/strategy.hpp"

namespace plab {

// A proof denotation in the sequential game model: the game interpreting the
// endsequent (the pairing of its formula games) and the positive strategy the
// proof plays on it.
struct BlassDen {
  Sequent seq;
  Game game;
  StrategyTree strat;
};

// Interprets a proof of a one- or two-formula sequent.  Cuts become strategy
// composition over the cut formula's game; a final two-into-one par merge
// relabels the component sides; the remaining rules drive the move-by-move
// construction directly.  Tensor introductions are rejected: the sequential
// model interprets only the additive-and-par fragment here.
BlassDen interp_proof_blass(const MallProof& p);

}  // namespace plab
