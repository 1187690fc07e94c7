#pragma once

#include <map>
#include <memory>
#include <string>

#include "plab/formula.hpp"

namespace plab {

// ---------------------------------------------------------------------------
// Moves.
//
// A move in a compound game is addressed through the structure of the game:
// Base moves are the leaf-level selections (disjunct labels, boolean values),
// SideL/SideR inject a component move into a two-component game, and Pair
// plays one move in each component simultaneously.
// ---------------------------------------------------------------------------

enum class MKind { Base, SideL, SideR, Pair };

struct MoveNode;
using Move = std::shared_ptr<const MoveNode>;

struct MoveNode {
  MKind kind;
  std::string label;  // Base only
  Move a;             // SideL/SideR inner move; Pair left half
  Move b;             // Pair right half
};

Move m_base(const std::string& label);
Move m_sideL(const Move& inner);
Move m_sideR(const Move& inner);
Move m_pair(const Move& left, const Move& right);

bool move_equal(const Move& x, const Move& y);
bool move_less(const Move& x, const Move& y);
std::string print_move(const Move& m);

struct MoveLess {
  bool operator()(const Move& x, const Move& y) const { return move_less(x, y); }
};

// ---------------------------------------------------------------------------
// Games.
//
// A game is either an explicit sum (one player owns the next move and each
// move leads to a residual game) or a not-yet-expanded tensor/par pairing of
// two games.  expand() rewrites the root of a tensor/par into sum form; the
// children it produces may themselves be unexpanded pairings.
// ---------------------------------------------------------------------------

enum class GKind { SumG, TensorG, ParG };

struct GameNode;
using Game = std::shared_ptr<const GameNode>;
using MoveMap = std::map<Move, Game, MoveLess>;

struct GameNode {
  GKind kind;
  Pol owner = Pol::P;  // SumG only
  MoveMap children;    // SumG only
  Game left, right;    // TensorG / ParG
};

Game g_sum(Pol owner, MoveMap children);
Game g_tensor(const Game& l, const Game& r);
Game g_par(const Game& l, const Game& r);

// The two-valued positive game: P picks tt or ff, then nothing remains.
Game bool_game();

// Which player owns the first move.  For pairings this is determined by the
// components: a tensor is negative only when both components are, a par is
// positive only when both components are.
Pol game_polarity(const Game& g);

// Linear negation: flips every ownership and swaps tensor with par.
Game dualize(const Game& g);

// Root in sum form.  Sum games are returned unchanged.
Game expand(const Game& g);

// Residual after one move of the expanded root; throws if the move is not
// available there.
Game game_child(const Game& g, const Move& m);

// Number of positions in the fully expanded game tree (root included).
size_t count_positions(const Game& g);

// Formula interpretation: atoms become the two-valued game, negated atoms its
// dual, the additive connectives become sums over {l, r}, and the
// multiplicatives become lazy pairings.
Game interpret_formula_blass(const Formula& f);

std::string print_game(const Game& g);

}  // namespace plab
