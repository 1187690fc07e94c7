#pragma once
// Formulas of multiplicative-additive linear logic in negation normal form.
//
// Literals are atoms a and negated atoms ~a; the connectives are tensor (*),
// par (|), plus (+) and with (&). Negation is not a constructor: negate()
// computes the De Morgan dual, so double negation is definitionally the
// identity. Each formula has a root polarity, P (Proponent starts) or
// O (Opponent starts), derived from the game reading: atoms and plus are
// P-rooted, negated atoms and with are O-rooted, a tensor is O-rooted only
// when both components are, and a par is P-rooted only when both are.

#include <memory>
#include <string>
#include <vector>

namespace plab {

enum class Pol { P, O };

Pol dual(Pol p);
char pol_char(Pol p);

enum class FKind { Atom, NegAtom, Tensor, Par, Plus, With };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  FKind kind;
  std::string name;  // literals only
  Formula left, right;  // connectives only
};

Formula f_atom(const std::string& name);
Formula f_natom(const std::string& name);
Formula f_tensor(Formula l, Formula r);
Formula f_par(Formula l, Formula r);
Formula f_plus(Formula l, Formula r);
Formula f_with(Formula l, Formula r);

bool formula_equal(const Formula& a, const Formula& b);

// De Morgan dual: ~ swaps Atom/NegAtom, Tensor/Par, Plus/With.
Formula negate(const Formula& f);

// Root polarity of the game denoted by f (see header comment).
Pol root_polarity(const Formula& f);

// Fully parenthesized rendering; every connective node gets parentheses,
// including the top level: par(~a, a) prints as "(~a | a)".
std::string print_formula(const Formula& f);

using Sequent = std::vector<Formula>;

bool multiset_equal(const Sequent& a, const Sequent& b);
std::string print_sequent(const Sequent& s);

}  // namespace plab
