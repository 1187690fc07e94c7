#pragma once
// Focussed proofs over positive formulas.
//
// Positive formulas:  P ::= atom | down(P) | P + Q | P * Q
// where down(P) is the shift embedding the negation of P (so the system
// needs no negative formulas: left-hand occurrences stand for negations).
//
// Sequents are  Gamma |- Delta ; Stoup  with all three made of positive
// formulas; Stoup holds at most one formula, the one under focus. The
// discipline enforced at every node: when the stoup is inhabited, it holds
// exactly one formula and Gamma consists of atoms only.
//
// Rules (file tags in parentheses, positions 1-based in files):
//   (id a)                a |- ; a
//   (foc [k] p)           moves the stoup formula into Delta (at k, default end)
//   (shiftR i p)          Gamma,P |- Delta ;   =>   Gamma |- Delta ; down(P)
//   (shiftL i p)          Gamma |- Delta,P ;   =>   Gamma,down(P) |- Delta ;
//   (tensorS p1 p2)       stoups P and Q       =>   stoup P * Q  (contexts join)
//   (tensorL i [j] p)     Gamma,P,Q |- Delta ; =>   Gamma,P*Q |- Delta ;
//   (plusSL Q p)          stoup P              =>   stoup P + Q
//   (plusSR P p)          stoup Q              =>   stoup P + Q
//   (plusL i1 i2 p1 p2)   Gamma,P |- Delta ;  and  Gamma,Q |- Delta ;
//                         =>   Gamma,P+Q |- Delta ;  (contexts shared verbatim)
//   (cutS i p1 p2)        Gamma |- Delta ; P  and  Gamma',P |- Delta' ;
//                         =>   Gamma,Gamma' |- Delta,Delta' ;
//   (cutR i j p1 p2)      Gamma |- Delta,P ;  and  Gamma',P |- Delta' ;
//                         =>   Gamma,Gamma' |- Delta,Delta' ;

#include <memory>
#include <string>
#include <vector>

#include "plab/proof.hpp"
#include "plab/sexpr.hpp"

namespace plab {

enum class PKind { Atom, Shift, Plus, Tensor };

struct PosFormulaNode;
using PosFormula = std::shared_ptr<const PosFormulaNode>;

struct PosFormulaNode {
  PKind kind;
  std::string name;          // atoms
  PosFormula left, right;    // Shift uses left only
};

PosFormula p_atom(const std::string& name);
PosFormula p_shift(PosFormula p);
PosFormula p_plus(PosFormula l, PosFormula r);
PosFormula p_tensor(PosFormula l, PosFormula r);

bool pos_equal(const PosFormula& a, const PosFormula& b);
std::string print_pos_formula(const PosFormula& p);   // down(P), (P + Q), (P * Q)
std::string pos_to_sexpr_text(const PosFormula& p);   // (down P), (P + Q), (P * Q)
PosFormula pos_from_sexpr(const SExpr& e);

struct FocSequent {
  std::vector<PosFormula> gamma;
  std::vector<PosFormula> delta;
  std::vector<PosFormula> stoup;  // at most one
};

std::string print_foc_sequent(const FocSequent& s);

enum class FRule { Id, CutS, CutR, Foc, ShiftR, ShiftL, TensorS, TensorL, PlusSL, PlusSR, PlusL };

std::string frule_name(FRule r);

struct FocProofNode;
using FocProof = std::shared_ptr<const FocProofNode>;

struct FocProofNode {
  FRule rule;
  PosFormula formula;          // Id atom; PlusSL/PlusSR: the other disjunct
  std::vector<size_t> args;    // positions, 0-based
  std::vector<FocProof> premises;
  FocSequent endsequent;
};

FocProof fmk_id(const std::string& atom);
FocProof fmk_foc(const FocProof& p);                    // append to Delta
FocProof fmk_foc_at(size_t k, const FocProof& p);       // insert into Delta at k
FocProof fmk_shiftR(size_t i, const FocProof& p);
FocProof fmk_shiftL(size_t i, const FocProof& p);
FocProof fmk_tensorS(const FocProof& p1, const FocProof& p2);
FocProof fmk_tensorL(size_t i, size_t j, const FocProof& p);
FocProof fmk_plusSL(const PosFormula& q, const FocProof& p);
FocProof fmk_plusSR(const PosFormula& p_left, const FocProof& p);
FocProof fmk_plusL(size_t i1, size_t i2, const FocProof& p1, const FocProof& p2);
FocProof fmk_cutS(size_t i, const FocProof& p1, const FocProof& p2);
FocProof fmk_cutR(size_t i, size_t j, const FocProof& p1, const FocProof& p2);

// Re-derives every endsequent and re-checks the stoup discipline; throws
// ProofError (with a discipline-specific message for stoup violations).
void check_foc(const FocProof& p);

bool foc_proof_equal(const FocProof& a, const FocProof& b);

std::string print_foc_proof(const FocProof& p);
FocProof parse_foc_proof(const std::string& text);
FocProof foc_proof_from_sexpr(const SExpr& e);

}  // namespace plab
