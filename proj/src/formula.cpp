#include "plab/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace plab {

Pol dual(Pol p) { return p == Pol::P ? Pol::O : Pol::P; }

char pol_char(Pol p) { return p == Pol::P ? 'P' : 'O'; }

static Formula make_leaf(FKind k, const std::string& name) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->name = name;
  return n;
}

static Formula make_node(FKind k, Formula l, Formula r) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

Formula f_atom(const std::string& name) { return make_leaf(FKind::Atom, name); }
Formula f_natom(const std::string& name) { return make_leaf(FKind::NegAtom, name); }
Formula f_tensor(Formula l, Formula r) { return make_node(FKind::Tensor, std::move(l), std::move(r)); }
Formula f_par(Formula l, Formula r) { return make_node(FKind::Par, std::move(l), std::move(r)); }
Formula f_plus(Formula l, Formula r) { return make_node(FKind::Plus, std::move(l), std::move(r)); }
Formula f_with(Formula l, Formula r) { return make_node(FKind::With, std::move(l), std::move(r)); }

bool formula_equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Atom:
    case FKind::NegAtom:
      return a->name == b->name;
    default:
      return formula_equal(a->left, b->left) && formula_equal(a->right, b->right);
  }
}

Formula negate(const Formula& f) {
  switch (f->kind) {
    case FKind::Atom: return f_natom(f->name);
    case FKind::NegAtom: return f_atom(f->name);
    case FKind::Tensor: return f_par(negate(f->left), negate(f->right));
    case FKind::Par: return f_tensor(negate(f->left), negate(f->right));
    case FKind::Plus: return f_with(negate(f->left), negate(f->right));
    case FKind::With: return f_plus(negate(f->left), negate(f->right));
  }
  throw std::logic_error("negate: bad formula kind");
}

Pol root_polarity(const Formula& f) {
  switch (f->kind) {
    case FKind::Atom: return Pol::P;
    case FKind::NegAtom: return Pol::O;
    case FKind::Plus: return Pol::P;
    case FKind::With: return Pol::O;
    case FKind::Tensor: {
      // O-rooted only when both components are O-rooted.
      Pol l = root_polarity(f->left), r = root_polarity(f->right);
      return (l == Pol::O && r == Pol::O) ? Pol::O : Pol::P;
    }
    case FKind::Par: {
      // P-rooted only when both components are P-rooted.
      Pol l = root_polarity(f->left), r = root_polarity(f->right);
      return (l == Pol::P && r == Pol::P) ? Pol::P : Pol::O;
    }
  }
  throw std::logic_error("root_polarity: bad formula kind");
}

static char conn_char(FKind k) {
  switch (k) {
    case FKind::Tensor: return '*';
    case FKind::Par: return '|';
    case FKind::Plus: return '+';
    case FKind::With: return '&';
    default: throw std::logic_error("conn_char: not a connective");
  }
}

std::string print_formula(const Formula& f) {
  switch (f->kind) {
    case FKind::Atom: return f->name;
    case FKind::NegAtom: return "~" + f->name;
    default:
      return "(" + print_formula(f->left) + " " + conn_char(f->kind) + " " +
             print_formula(f->right) + ")";
  }
}

bool multiset_equal(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& fa : a) {
    bool found = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && formula_equal(fa, b[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string print_sequent(const Sequent& s) {
  std::string out = "|-";
  for (size_t i = 0; i < s.size(); ++i) {
    out += (i == 0 ? " " : ", ");
    out += print_formula(s[i]);
  }
  return out;
}

}  // namespace plab
