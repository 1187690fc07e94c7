#include "plab/foc.hpp"

#include <algorithm>

#include "plab/proof_parse.hpp"

namespace plab {

PosFormula p_atom(const std::string& name) {
  auto n = std::make_shared<PosFormulaNode>();
  n->kind = PKind::Atom;
  n->name = name;
  return n;
}

PosFormula p_shift(PosFormula p) {
  auto n = std::make_shared<PosFormulaNode>();
  n->kind = PKind::Shift;
  n->left = std::move(p);
  return n;
}

static PosFormula p_bin(PKind k, PosFormula l, PosFormula r) {
  auto n = std::make_shared<PosFormulaNode>();
  n->kind = k;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

PosFormula p_plus(PosFormula l, PosFormula r) { return p_bin(PKind::Plus, std::move(l), std::move(r)); }
PosFormula p_tensor(PosFormula l, PosFormula r) { return p_bin(PKind::Tensor, std::move(l), std::move(r)); }

bool pos_equal(const PosFormula& a, const PosFormula& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case PKind::Atom: return a->name == b->name;
    case PKind::Shift: return pos_equal(a->left, b->left);
    default: return pos_equal(a->left, b->left) && pos_equal(a->right, b->right);
  }
}

std::string print_pos_formula(const PosFormula& p) {
  switch (p->kind) {
    case PKind::Atom: return p->name;
    case PKind::Shift: return "down(" + print_pos_formula(p->left) + ")";
    case PKind::Plus:
      return "(" + print_pos_formula(p->left) + " + " + print_pos_formula(p->right) + ")";
    case PKind::Tensor:
      return "(" + print_pos_formula(p->left) + " * " + print_pos_formula(p->right) + ")";
  }
  return "?";
}

std::string pos_to_sexpr_text(const PosFormula& p) {
  switch (p->kind) {
    case PKind::Atom: return p->name;
    case PKind::Shift: return "(down " + pos_to_sexpr_text(p->left) + ")";
    case PKind::Plus:
      return "(" + pos_to_sexpr_text(p->left) + " + " + pos_to_sexpr_text(p->right) + ")";
    case PKind::Tensor:
      return "(" + pos_to_sexpr_text(p->left) + " * " + pos_to_sexpr_text(p->right) + ")";
  }
  return "?";
}

PosFormula pos_from_sexpr(const SExpr& e) {
  if (!e.is_list) {
    if (e.sym.empty() || e.sym[0] < 'a' || e.sym[0] > 'z') {
      throw ProofError("bad positive formula atom '" + e.sym + "'");
    }
    return p_atom(e.sym);
  }
  if (e.items.size() == 2 && !e.items[0].is_list && e.items[0].sym == "down") {
    return p_shift(pos_from_sexpr(e.items[1]));
  }
  if (e.items.size() == 3 && !e.items[1].is_list &&
      (e.items[1].sym == "+" || e.items[1].sym == "*")) {
    PosFormula l = pos_from_sexpr(e.items[0]);
    PosFormula r = pos_from_sexpr(e.items[2]);
    return e.items[1].sym == "+" ? p_plus(l, r) : p_tensor(l, r);
  }
  throw ProofError("bad positive formula '" + sexpr_to_text(e) + "'");
}

static std::string join_pos(const std::vector<PosFormula>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += print_pos_formula(v[i]);
  }
  return out;
}

std::string print_foc_sequent(const FocSequent& s) {
  std::string out = join_pos(s.gamma);
  if (!out.empty()) out += " ";
  out += "|-";
  if (!s.delta.empty()) out += " " + join_pos(s.delta);
  out += " ;";
  if (!s.stoup.empty()) out += " " + join_pos(s.stoup);
  return out;
}

std::string frule_name(FRule r) {
  switch (r) {
    case FRule::Id: return "id";
    case FRule::CutS: return "cutS";
    case FRule::CutR: return "cutR";
    case FRule::Foc: return "foc";
    case FRule::ShiftR: return "shiftR";
    case FRule::ShiftL: return "shiftL";
    case FRule::TensorS: return "tensorS";
    case FRule::TensorL: return "tensorL";
    case FRule::PlusSL: return "plusSL";
    case FRule::PlusSR: return "plusSR";
    case FRule::PlusL: return "plusL";
  }
  return "?";
}

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw ProofError(msg);
}

template <typename T>
std::vector<T> erase_at(std::vector<T> v, size_t i) {
  v.erase(v.begin() + static_cast<long>(i));
  return v;
}

template <typename T>
std::vector<T> concat(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool pos_list_equal(const std::vector<PosFormula>& a, const std::vector<PosFormula>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!pos_equal(a[i], b[i])) return false;
  }
  return true;
}

// The focussing discipline for a conclusion sequent.
void check_discipline(const FocSequent& s, const std::string& rule) {
  need(s.stoup.size() <= 1, rule + ": stoup discipline violated: more than one focussed formula");
  if (s.stoup.size() == 1) {
    for (const auto& p : s.gamma) {
      need(p->kind == PKind::Atom,
           rule + ": stoup discipline violated: focussed sequent has non-atomic " +
               print_pos_formula(p) + " on the left");
    }
  }
}

void need_no_stoup(const FocSequent& s, const std::string& rule) {
  need(s.stoup.empty(), rule + ": premise must have an empty stoup");
}

FocSequent derive(FRule rule, const PosFormula& formula, const std::vector<size_t>& args,
                  const std::vector<const FocSequent*>& prem) {
  auto need_prem = [&](size_t n) {
    need(prem.size() == n, frule_name(rule) + ": wrong number of premises");
  };
  auto pos_ok = [&](const std::vector<PosFormula>& v, size_t i, const char* what) {
    need(i < v.size(), frule_name(rule) + ": position " + std::to_string(i + 1) +
                           " out of range on the " + what);
  };
  FocSequent out;
  switch (rule) {
    case FRule::Id: {
      need_prem(0);
      need(formula && formula->kind == PKind::Atom, "id: axiom must be an atom");
      out.gamma = {formula};
      out.stoup = {formula};
      break;
    }
    case FRule::Foc: {
      need_prem(1);
      const FocSequent& s = *prem[0];
      need(s.stoup.size() == 1, "foc: premise has no focussed formula");
      need(args.size() == 1 && args[0] <= s.delta.size(),
           "foc: insertion position out of range");
      out.gamma = s.gamma;
      out.delta = s.delta;
      out.delta.insert(out.delta.begin() + static_cast<long>(args[0]), s.stoup[0]);
      break;
    }
    case FRule::ShiftR: {
      need_prem(1);
      const FocSequent& s = *prem[0];
      need_no_stoup(s, "shiftR");
      pos_ok(s.gamma, args[0], "left");
      out.gamma = erase_at(s.gamma, args[0]);
      out.delta = s.delta;
      out.stoup = {p_shift(s.gamma[args[0]])};
      break;
    }
    case FRule::ShiftL: {
      need_prem(1);
      const FocSequent& s = *prem[0];
      need_no_stoup(s, "shiftL");
      pos_ok(s.delta, args[0], "right");
      out.gamma = s.gamma;
      out.gamma.push_back(p_shift(s.delta[args[0]]));
      out.delta = erase_at(s.delta, args[0]);
      break;
    }
    case FRule::TensorS: {
      need_prem(2);
      const FocSequent &s1 = *prem[0], &s2 = *prem[1];
      need(s1.stoup.size() == 1 && s2.stoup.size() == 1,
           "tensorS: both premises must carry a focussed formula");
      out.gamma = concat(s1.gamma, s2.gamma);
      out.delta = concat(s1.delta, s2.delta);
      out.stoup = {p_tensor(s1.stoup[0], s2.stoup[0])};
      break;
    }
    case FRule::TensorL: {
      need_prem(1);
      const FocSequent& s = *prem[0];
      need_no_stoup(s, "tensorL");
      size_t i = args[0], j = args[1];
      pos_ok(s.gamma, i, "left");
      pos_ok(s.gamma, j, "left");
      need(i != j, "tensorL: the two occurrences must be distinct");
      PosFormula merged = p_tensor(s.gamma[i], s.gamma[j]);
      size_t lo = std::min(i, j), hi = std::max(i, j);
      out.gamma = erase_at(erase_at(s.gamma, hi), lo);
      out.gamma.insert(out.gamma.begin() + static_cast<long>(lo), merged);
      out.delta = s.delta;
      break;
    }
    case FRule::PlusSL:
    case FRule::PlusSR: {
      need_prem(1);
      const FocSequent& s = *prem[0];
      need(s.stoup.size() == 1,
           frule_name(rule) +
               ": stoup discipline violated: plus-introduction on the right requires a "
               "focussed formula but the stoup is empty");
      out.gamma = s.gamma;
      out.delta = s.delta;
      out.stoup = {rule == FRule::PlusSL ? p_plus(s.stoup[0], formula)
                                         : p_plus(formula, s.stoup[0])};
      break;
    }
    case FRule::PlusL: {
      need_prem(2);
      const FocSequent &s1 = *prem[0], &s2 = *prem[1];
      need_no_stoup(s1, "plusL");
      need_no_stoup(s2, "plusL");
      size_t i1 = args[0], i2 = args[1];
      pos_ok(s1.gamma, i1, "left");
      pos_ok(s2.gamma, i2, "left");
      need(pos_list_equal(erase_at(s1.gamma, i1), erase_at(s2.gamma, i2)),
           "plusL: premises must share the left context verbatim");
      need(pos_list_equal(s1.delta, s2.delta),
           "plusL: premises must share the right context verbatim");
      out.gamma = s1.gamma;
      out.gamma[i1] = p_plus(s1.gamma[i1], s2.gamma[i2]);
      out.delta = s1.delta;
      break;
    }
    case FRule::CutS: {
      need_prem(2);
      const FocSequent &s1 = *prem[0], &s2 = *prem[1];
      need(s1.stoup.size() == 1, "cutS: first premise must carry the focussed cut formula");
      need_no_stoup(s2, "cutS");
      size_t i = args[0];
      pos_ok(s2.gamma, i, "left");
      need(pos_equal(s2.gamma[i], s1.stoup[0]),
           "cutS: cut formula mismatch at left position " + std::to_string(i + 1));
      out.gamma = concat(s1.gamma, erase_at(s2.gamma, i));
      out.delta = concat(s1.delta, s2.delta);
      break;
    }
    case FRule::CutR: {
      need_prem(2);
      const FocSequent &s1 = *prem[0], &s2 = *prem[1];
      need_no_stoup(s1, "cutR");
      need_no_stoup(s2, "cutR");
      size_t i = args[0], j = args[1];
      pos_ok(s1.delta, i, "right");
      pos_ok(s2.gamma, j, "left");
      need(pos_equal(s1.delta[i], s2.gamma[j]),
           "cutR: cut formula mismatch between right position " + std::to_string(i + 1) +
               " and left position " + std::to_string(j + 1));
      out.gamma = concat(s1.gamma, erase_at(s2.gamma, j));
      out.delta = concat(erase_at(s1.delta, i), s2.delta);
      break;
    }
  }
  check_discipline(out, frule_name(rule));
  return out;
}

FocProof fmake(FRule rule, PosFormula formula, std::vector<size_t> args,
               std::vector<FocProof> premises) {
  std::vector<const FocSequent*> prem;
  prem.reserve(premises.size());
  for (const auto& p : premises) prem.push_back(&p->endsequent);
  auto n = std::make_shared<FocProofNode>();
  n->rule = rule;
  n->formula = std::move(formula);
  n->args = std::move(args);
  n->endsequent = derive(rule, n->formula, n->args, prem);
  n->premises = std::move(premises);
  return n;
}

}  // namespace

FocProof fmk_id(const std::string& atom) { return fmake(FRule::Id, p_atom(atom), {}, {}); }
FocProof fmk_foc(const FocProof& p) {
  return fmake(FRule::Foc, nullptr, {p->endsequent.delta.size()}, {p});
}
FocProof fmk_foc_at(size_t k, const FocProof& p) { return fmake(FRule::Foc, nullptr, {k}, {p}); }
FocProof fmk_shiftR(size_t i, const FocProof& p) { return fmake(FRule::ShiftR, nullptr, {i}, {p}); }
FocProof fmk_shiftL(size_t i, const FocProof& p) { return fmake(FRule::ShiftL, nullptr, {i}, {p}); }
FocProof fmk_tensorS(const FocProof& p1, const FocProof& p2) {
  return fmake(FRule::TensorS, nullptr, {}, {p1, p2});
}
FocProof fmk_tensorL(size_t i, size_t j, const FocProof& p) {
  return fmake(FRule::TensorL, nullptr, {i, j}, {p});
}
FocProof fmk_plusSL(const PosFormula& q, const FocProof& p) {
  return fmake(FRule::PlusSL, q, {}, {p});
}
FocProof fmk_plusSR(const PosFormula& p_left, const FocProof& p) {
  return fmake(FRule::PlusSR, p_left, {}, {p});
}
FocProof fmk_plusL(size_t i1, size_t i2, const FocProof& p1, const FocProof& p2) {
  return fmake(FRule::PlusL, nullptr, {i1, i2}, {p1, p2});
}
FocProof fmk_cutS(size_t i, const FocProof& p1, const FocProof& p2) {
  return fmake(FRule::CutS, nullptr, {i}, {p1, p2});
}
FocProof fmk_cutR(size_t i, size_t j, const FocProof& p1, const FocProof& p2) {
  return fmake(FRule::CutR, nullptr, {i, j}, {p1, p2});
}

void check_foc(const FocProof& p) {
  if (!p) throw ProofError("null proof");
  for (const auto& q : p->premises) check_foc(q);
  std::vector<const FocSequent*> prem;
  for (const auto& q : p->premises) prem.push_back(&q->endsequent);
  FocSequent expect = derive(p->rule, p->formula, p->args, prem);
  bool same = pos_list_equal(expect.gamma, p->endsequent.gamma) &&
              pos_list_equal(expect.delta, p->endsequent.delta) &&
              pos_list_equal(expect.stoup, p->endsequent.stoup);
  need(same, frule_name(p->rule) + ": endsequent mismatch: derived " + print_foc_sequent(expect) +
                 " but node claims " + print_foc_sequent(p->endsequent));
}

bool foc_proof_equal(const FocProof& a, const FocProof& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->rule != b->rule || a->args != b->args) return false;
  bool af = static_cast<bool>(a->formula), bf = static_cast<bool>(b->formula);
  if (af != bf || (af && !pos_equal(a->formula, b->formula))) return false;
  if (a->premises.size() != b->premises.size()) return false;
  for (size_t i = 0; i < a->premises.size(); ++i) {
    if (!foc_proof_equal(a->premises[i], b->premises[i])) return false;
  }
  return true;
}

std::string print_foc_proof(const FocProof& p) {
  auto pos = [](size_t i) { return std::to_string(i + 1); };
  switch (p->rule) {
    case FRule::Id:
      return "(id " + p->formula->name + ")";
    case FRule::Foc:
      if (p->args[0] == p->premises[0]->endsequent.delta.size()) {
        return "(foc " + print_foc_proof(p->premises[0]) + ")";
      }
      return "(foc " + pos(p->args[0]) + " " + print_foc_proof(p->premises[0]) + ")";
    case FRule::ShiftR:
      return "(shiftR " + pos(p->args[0]) + " " + print_foc_proof(p->premises[0]) + ")";
    case FRule::ShiftL:
      return "(shiftL " + pos(p->args[0]) + " " + print_foc_proof(p->premises[0]) + ")";
    case FRule::TensorS:
      return "(tensorS " + print_foc_proof(p->premises[0]) + " " +
             print_foc_proof(p->premises[1]) + ")";
    case FRule::TensorL:
      return "(tensorL " + pos(p->args[0]) + " " + pos(p->args[1]) + " " +
             print_foc_proof(p->premises[0]) + ")";
    case FRule::PlusSL:
      return "(plusSL " + pos_to_sexpr_text(p->formula) + " " +
             print_foc_proof(p->premises[0]) + ")";
    case FRule::PlusSR:
      return "(plusSR " + pos_to_sexpr_text(p->formula) + " " +
             print_foc_proof(p->premises[0]) + ")";
    case FRule::PlusL:
      return "(plusL " + pos(p->args[0]) + " " + pos(p->args[1]) + " " +
             print_foc_proof(p->premises[0]) + " " + print_foc_proof(p->premises[1]) + ")";
    case FRule::CutS:
      return "(cutS " + pos(p->args[0]) + " " + print_foc_proof(p->premises[0]) + " " +
             print_foc_proof(p->premises[1]) + ")";
    case FRule::CutR:
      return "(cutR " + pos(p->args[0]) + " " + pos(p->args[1]) + " " +
             print_foc_proof(p->premises[0]) + " " + print_foc_proof(p->premises[1]) + ")";
  }
  return "?";
}

FocProof foc_proof_from_sexpr(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) {
    throw ProofError("expected a rule application, got '" + sexpr_to_text(e) + "'");
  }
  const std::string& tag = e.items[0].sym;
  const auto& it = e.items;
  auto arity = [&](size_t n) {
    if (it.size() != n) {
      throw ProofError(tag + ": expected " + std::to_string(n - 1) + " arguments in '" +
                       sexpr_to_text(e) + "'");
    }
  };
  if (tag == "id") {
    arity(2);
    if (it[1].is_list) throw ProofError("id: axiom must be an atom");
    return fmk_id(it[1].sym);
  }
  if (tag == "foc") {
    if (it.size() == 2) return fmk_foc(foc_proof_from_sexpr(it[1]));
    arity(3);
    return fmk_foc_at(parse_position(it[1], tag), foc_proof_from_sexpr(it[2]));
  }
  if (tag == "shiftR") {
    arity(3);
    return fmk_shiftR(parse_position(it[1], tag), foc_proof_from_sexpr(it[2]));
  }
  if (tag == "shiftL") {
    arity(3);
    return fmk_shiftL(parse_position(it[1], tag), foc_proof_from_sexpr(it[2]));
  }
  if (tag == "tensorS") {
    arity(3);
    return fmk_tensorS(foc_proof_from_sexpr(it[1]), foc_proof_from_sexpr(it[2]));
  }
  if (tag == "tensorL") {
    if (it.size() == 3) {
      size_t i = parse_position(it[1], tag);
      return fmk_tensorL(i, i + 1, foc_proof_from_sexpr(it[2]));
    }
    arity(4);
    return fmk_tensorL(parse_position(it[1], tag), parse_position(it[2], tag),
                       foc_proof_from_sexpr(it[3]));
  }
  if (tag == "plusSL") {
    arity(3);
    return fmk_plusSL(pos_from_sexpr(it[1]), foc_proof_from_sexpr(it[2]));
  }
  if (tag == "plusSR") {
    arity(3);
    return fmk_plusSR(pos_from_sexpr(it[1]), foc_proof_from_sexpr(it[2]));
  }
  if (tag == "plusL") {
    arity(5);
    return fmk_plusL(parse_position(it[1], tag), parse_position(it[2], tag),
                     foc_proof_from_sexpr(it[3]), foc_proof_from_sexpr(it[4]));
  }
  if (tag == "cutS") {
    arity(4);
    return fmk_cutS(parse_position(it[1], tag), foc_proof_from_sexpr(it[2]),
                    foc_proof_from_sexpr(it[3]));
  }
  if (tag == "cutR") {
    arity(5);
    return fmk_cutR(parse_position(it[1], tag), parse_position(it[2], tag),
                    foc_proof_from_sexpr(it[3]), foc_proof_from_sexpr(it[4]));
  }
  throw ProofError("unknown rule tag '" + tag + "'");
}

FocProof parse_foc_proof(const std::string& text) {
  return foc_proof_from_sexpr(parse_sexpr(text));
}

}  // namespace plab
