#pragma once

#include "plab/strategy.hpp"

namespace plab {

// Composes a positive strategy on X par M with a positive strategy on
// (dual of M) par Y into a positive strategy on X par Y, by running the two
// strategies against each other over the shared interface M.  Moves each
// strategy sends across the interface are buffered until the receiver is
// ready for them; moves decided on the external X/Y sides are buffered until
// the composite position lets the composing player emit them.  Throws if the
// interaction deadlocks (the composite must move but neither strategy has
// decided anything) — the source of the non-associativity phenomenon is that
// which buffered external move gets emitted first depends on bracketing.
StrategyTree compose_blass(const StrategyTree& sigma, const Game& gX, const Game& gM,
                           const StrategyTree& tau, const Game& gY);

}  // namespace plab
