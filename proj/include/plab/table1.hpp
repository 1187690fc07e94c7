#pragma once

#include <array>
#include <string>
#include <vector>

#include "plab/formula.hpp"

namespace plab {

// One row of the sixteen-case analysis of a chain of three strategies
// sigma : dual(A) par B,  tau : dual(B) par C,  theta : dual(C) par D,
// classified by the polarities of A, B, C, D.  A strategy is "enabled" when
// it owns the opening move of its own pairing; the composite dual(A) par D
// opens with the environment unless it is positively owned, in which case
// the first mover is whichever enabled strategy gets scheduled — and when
// two are enabled at once the schedule is genuinely ambiguous.
struct Table1Row {
  std::array<Pol, 4> pol;  // polarities of A, B, C, D in order
  bool sigma_enabled = false;
  bool tau_enabled = false;
  bool theta_enabled = false;
  Pol composite = Pol::O;     // owner of the composite's opening move
  std::string initial_mover;  // "O", "sigma", "tau", "theta" or "ambiguous"
};

// The sixteen rows in binary order, most significant bit = A, with O before P.
std::vector<Table1Row> table1_rows();

std::string print_table1_row(const Table1Row& r);

}  // namespace plab
