#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "plab/game.hpp"

namespace plab {

// ---------------------------------------------------------------------------
// Strategy trees.
//
// A strategy for one player says what to do at every position where a
// decision is needed: at own positions it outputs the chosen move (or stops
// when there is none), at opponent positions it branches over every move the
// opponent could make.  An empty branch node is represented as Stop.
// ---------------------------------------------------------------------------

enum class SKind { Stop, Out, In };

struct StratNode;
using StrategyTree = std::shared_ptr<const StratNode>;
using BranchMap = std::map<Move, StrategyTree, MoveLess>;

struct StratNode {
  SKind kind;
  Move move;           // Out
  StrategyTree next;   // Out
  BranchMap branches;  // In
};

StrategyTree s_stop();
StrategyTree s_out(const Move& m, const StrategyTree& next);
StrategyTree s_in(BranchMap branches);  // empty map collapses to Stop

bool strategy_equal(const StrategyTree& a, const StrategyTree& b);
std::string print_strategy(const StrategyTree& s);

// The first move a strategy makes unprompted, if it opens the play.
std::optional<Move> first_move(const StrategyTree& s);

// Relabels every SideL move as SideR and vice versa, at the top level of each
// move only (used when the two components of a pairing trade places).
StrategyTree swap_sides(const StrategyTree& s);

// All strategies of the given player on the game, by structural recursion on
// the expanded game tree.  Positions where the owner has no move yield Stop;
// opponent positions branch over every move.
std::vector<StrategyTree> enumerate_strategies(const Game& g, Pol owner);

// Checks that the strategy has exactly the shape enumerate_strategies would
// produce: outputs a legal move at own positions, branches over all moves at
// opponent positions.
bool validate_strategy(const Game& g, Pol owner, const StrategyTree& s);

// Runs a positive strategy against a negative one.  The game is finite, so
// the run always reaches a position with no moves; whoever owns that position
// is the loser.
struct PlayResult {
  std::vector<Move> moves;
  Pol loser;
};
PlayResult play(const Game& g, const StrategyTree& p_strat, const StrategyTree& o_strat);

}  // namespace plab
