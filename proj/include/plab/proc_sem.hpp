#pragma once

// Operational and denotational semantics for the process calculus.
//
// A board is a finite partial map from cells to values, or the failure board
// TOP; boards are ordered by graph inclusion with TOP on top, and two boards
// join to TOP when they disagree on a shared cell.  A process acts on a board
// by persistently emitting values; operationally by reduction to exhaustion,
// denotationally as a closure operator on the finite board lattice.

#include <map>
#include <string>
#include <vector>

#include "plab/closure.hpp"
#include "plab/dom.hpp"
#include "plab/proc.hpp"

namespace plab {

struct Board {
  bool top = false;
  std::map<std::string, size_t> cells;  // defined cells only; empty when top
};

Board board_top();
bool board_equal(const Board& a, const Board& b);
bool board_leq(const Board& a, const Board& b);
Board board_join(const Board& a, const Board& b);
std::string print_board(const Board& b);

// Canonical form modulo structural congruence: parallel soup flattened and
// sorted, units dropped, TOP absorbing, duplicate outputs merged, clashing
// outputs collapsed to TOP, top-level recursions unfolded to a guard, and
// top-level hidden cells extruded outward under canonical fresh names.
Proc normalize_struct(const Proc& p);

// All single communication steps c!v || (c?x -> P)  ->  c!v || P[v/x]
// (the output persists), each reduct normalized.  Input must be normalized.
std::vector<Proc> reduce_step(const Proc& p);

// Place the input board as outputs beside p, reduce to exhaustion exploring
// every order, and read the final board off the unique terminal (TOP if
// failure is reached).  Throws ProcError if the reduction graph exceeds its
// size bound or distinct terminals disagree.
Board run(const Proc& p, const Board& input);

// The board lattice over a fixed cell set: one flat coordinate per cell with
// values named "0".."n_values-1", cells in sorted order.
Dom board_dom(const std::vector<std::string>& cells, size_t n_values = 3);
size_t encode_board(const Dom& d, const std::vector<std::string>& cells, const Board& b);
Board decode_board(const Dom& d, const std::vector<std::string>& cells, size_t x);

// Denotation of p as a closure operator on board_dom(cells, n_values).
// Free cells of p must lie within `cells`.
ClosureOp denote(const Proc& p, const std::vector<std::string>& cells, size_t n_values = 3);

// The copy-cat team: for each pair name s, the two relays
// (l<s>?x -> r<s>!x) || (r<s>?x -> l<s>!x).
Proc copycat_process(const std::vector<std::string>& pair_names);

}  // namespace plab
