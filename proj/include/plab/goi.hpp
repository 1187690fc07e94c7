#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plab/closure.hpp"
#include "plab/proof.hpp"

namespace plab {

// Axiom-link presentation of a multiplicative proof.  Leaves number the atom
// occurrences of the endsequent left to right; cutting keeps the two cut
// formulas' occurrences as internal leaves past n_external, paired up in
// `cuts`.  Every leaf sits on exactly one axiom link.
struct Linking {
  size_t n_external = 0;
  size_t n_total = 0;
  std::vector<std::pair<size_t, size_t>> links;
  std::vector<std::pair<size_t, size_t>> cuts;
  Sequent endsequent;
};

// Reads the linking off a proof built from id, parR, tensorR and cut.
// Additive rules have no linking and are rejected with a runtime_error.
Linking linking_of_proof(const MallProof& p);

// Cut elimination on linkings: chases each external leaf's link through
// cut pairs until it lands on an external leaf again.
Linking execute_linking(const Linking& l);

bool linking_equal(const Linking& a, const Linking& b);
std::string print_linking(const Linking& l);

// The relabelling a cut-free linking induces on the leaf cells of its
// endsequent domain — each cell reads its partner's value — as a table with
// the top slot fixed; and the closure completion of that table.
std::vector<size_t> permutation_table(const Linking& l);
ClosureOp closure_of_linking(const Linking& l);

}  // namespace plab
