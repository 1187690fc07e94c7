#pragma once
// Reordering cut-free proofs and equivalence up to permutations of
// negative rules.
//
// permute_proof rebuilds a cut-free proof so its endsequent is listed in a
// given order, pushing the reordering through each rule. It cannot cross a
// tensorR context boundary except by swapping the two premises when the
// resulting tensor formula is unchanged; other block-crossing orders throw.
//
// permutation_equal explores the graph of proofs reachable by swapping two
// adjacent negative rules (withR/withR incl. recombination of the four
// grandchildren, withR/parR in both orders, parR/parR) by breadth-first
// search. Exhausting the reachable set is a definitive "no"; running out of
// budget (visited-proof count) reports false with the inconclusive flag set.

#include "plab/proof.hpp"

namespace plab {

// order[k] = current position of the formula that should end up at k.
MallProof permute_proof(const MallProof& p, const std::vector<size_t>& order);

struct PermEqResult {
  bool equal = false;
  bool inconclusive = false;
};

PermEqResult permutation_equal(const MallProof& p, const MallProof& q, size_t budget = 16);

}  // namespace plab
