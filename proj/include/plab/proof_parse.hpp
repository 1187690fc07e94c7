#pragma once
// Proof file parsing. A .llp file holds one s-expression proof; rule
// positions are 1-based in the file and 0-based in memory. The short cut
// form (cut F p1 p2) locates F / its dual at the leftmost occurrence of
// each premise; (cut F i j p1 p2) names positions explicitly. The proof
// system (plain or focussed) is detected from the rule tags used.

#include <string>

#include "plab/proof.hpp"
#include "plab/sexpr.hpp"

namespace plab {

enum class ProofSystem { Mall, Foc };

MallProof parse_mall_proof(const std::string& text);
MallProof mall_proof_from_sexpr(const SExpr& e);

// Foc when any focussed-only tag occurs (foc, shiftR, shiftL, cutS, cutR,
// tensorS, tensorL, plusSL, plusSR); Mall when any plain-only tag occurs
// (cut, tensorR, parR, plusR, withR); Mall for the ambiguous remainder.
ProofSystem detect_system(const SExpr& e);

// Shared helpers for the proof readers.
size_t parse_position(const SExpr& e, const std::string& rule);
Formula parse_formula_arg(const SExpr& e, const std::string& rule);

}  // namespace plab
