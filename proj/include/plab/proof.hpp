#pragma once
// One-sided sequent proofs for multiplicative-additive linear logic.
//
// Sequents are ordered lists; rules act on explicit 0-based positions.
//
//   id A          |- A, ~A
//   cut           from  |- G (A at i)  and  |- D (~A at j)
//                 to    |- G\i, D\j
//   tensorR i j   from  |- G (A at i)  and  |- D (B at j)
//                 to    |- G\i, D\j, A*B          (tensor goes last)
//   parR i j      from  |- G (A at i, B at j, i != j)
//                 to    A and B replaced by A|B at min(i,j)
//   plusR i B'    from  |- G (B at i)   to  G with B' + B at i
//   plusL i A'    from  |- G (A at i)   to  G with A + A' at i
//   withR i       from  |- G1 (A at i)  and  |- G2 (B at i),
//                 G1 and G2 positionally equal off i,
//                 to    G1 with A & B at i
//
// Smart constructors compute and validate endsequents; check_mall re-derives
// every endsequent of an existing tree, so a proof that checks is exactly one
// the constructors could have built.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "plab/formula.hpp"

namespace plab {

struct ProofError : std::runtime_error {
  explicit ProofError(const std::string& message) : std::runtime_error(message) {}
};

enum class MRule { Id, Cut, TensorR, ParR, PlusR, PlusL, WithR };

std::string mrule_name(MRule r);

struct MallProofNode;
using MallProof = std::shared_ptr<const MallProofNode>;

struct MallProofNode {
  MRule rule;
  Formula formula;             // Id: the axiom formula; Cut: the cut formula;
                               // PlusR/PlusL: the disjunct not in the premise
  std::vector<size_t> args;    // positions, 0-based
  std::vector<MallProof> premises;
  Sequent endsequent;
};

MallProof mk_id(const Formula& a);
MallProof mk_cut(const Formula& a, const MallProof& p1, const MallProof& p2,
                 size_t i_left, size_t i_right);
MallProof mk_tensorR(size_t i, size_t j, const MallProof& p1, const MallProof& p2);
MallProof mk_parR(size_t i, size_t j, const MallProof& p);
MallProof mk_plusR(size_t i, const Formula& left_disjunct, const MallProof& p);
MallProof mk_plusL(size_t i, const Formula& right_disjunct, const MallProof& p);
MallProof mk_withR(size_t i, const MallProof& p1, const MallProof& p2);

// Re-derives every endsequent in the tree; throws ProofError on any mismatch.
void check_mall(const MallProof& p);

bool proof_equal(const MallProof& a, const MallProof& b);

bool is_cut_free(const MallProof& p);
size_t proof_size(const MallProof& p);

// S-expression rendering in the proof file syntax (1-based positions);
// parse_mall_proof inverts it.
std::string print_proof(const MallProof& p);

}  // namespace plab
