#include "plab/proof.hpp"

#include <algorithm>

namespace plab {

std::string mrule_name(MRule r) {
  switch (r) {
    case MRule::Id: return "id";
    case MRule::Cut: return "cut";
    case MRule::TensorR: return "tensorR";
    case MRule::ParR: return "parR";
    case MRule::PlusR: return "plusR";
    case MRule::PlusL: return "plusL";
    case MRule::WithR: return "withR";
  }
  return "?";
}

namespace {

Sequent erase_at(Sequent s, size_t i) {
  s.erase(s.begin() + static_cast<long>(i));
  return s;
}

Sequent concat(const Sequent& a, const Sequent& b) {
  Sequent out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void need(bool ok, const std::string& msg) {
  if (!ok) throw ProofError(msg);
}

void need_pos(const Sequent& s, size_t i, const std::string& rule) {
  need(i < s.size(), rule + ": position " + std::to_string(i + 1) +
                         " out of range for " + print_sequent(s));
}

// Recomputes the conclusion a rule node must have from its premises' sequents.
Sequent derive_endsequent(MRule rule, const Formula& formula,
                          const std::vector<size_t>& args,
                          const std::vector<const Sequent*>& prem) {
  switch (rule) {
    case MRule::Id: {
      need(prem.empty(), "id: no premises expected");
      return {formula, negate(formula)};
    }
    case MRule::Cut: {
      need(prem.size() == 2 && args.size() == 2, "cut: needs two premises and two positions");
      const Sequent &g = *prem[0], &d = *prem[1];
      need_pos(g, args[0], "cut");
      need_pos(d, args[1], "cut");
      need(formula_equal(g[args[0]], formula),
           "cut: left premise lacks the cut formula at position " + std::to_string(args[0] + 1));
      need(formula_equal(d[args[1]], negate(formula)),
           "cut: right premise lacks the dual cut formula at position " + std::to_string(args[1] + 1));
      return concat(erase_at(g, args[0]), erase_at(d, args[1]));
    }
    case MRule::TensorR: {
      need(prem.size() == 2 && args.size() == 2, "tensorR: needs two premises and two positions");
      const Sequent &g = *prem[0], &d = *prem[1];
      need_pos(g, args[0], "tensorR");
      need_pos(d, args[1], "tensorR");
      Sequent out = concat(erase_at(g, args[0]), erase_at(d, args[1]));
      out.push_back(f_tensor(g[args[0]], d[args[1]]));
      return out;
    }
    case MRule::ParR: {
      need(prem.size() == 1 && args.size() == 2, "parR: needs one premise and two positions");
      const Sequent& g = *prem[0];
      size_t i = args[0], j = args[1];
      need_pos(g, i, "parR");
      need_pos(g, j, "parR");
      need(i != j, "parR: the two occurrences must be distinct");
      Formula merged = f_par(g[i], g[j]);
      size_t lo = std::min(i, j), hi = std::max(i, j);
      Sequent out = erase_at(erase_at(g, hi), lo);
      out.insert(out.begin() + static_cast<long>(lo), merged);
      return out;
    }
    case MRule::PlusR: {
      need(prem.size() == 1 && args.size() == 1, "plusR: needs one premise and one position");
      Sequent out = *prem[0];
      need_pos(out, args[0], "plusR");
      out[args[0]] = f_plus(formula, out[args[0]]);
      return out;
    }
    case MRule::PlusL: {
      need(prem.size() == 1 && args.size() == 1, "plusL: needs one premise and one position");
      Sequent out = *prem[0];
      need_pos(out, args[0], "plusL");
      out[args[0]] = f_plus(out[args[0]], formula);
      return out;
    }
    case MRule::WithR: {
      need(prem.size() == 2 && args.size() == 1, "withR: needs two premises and one position");
      const Sequent &g1 = *prem[0], &g2 = *prem[1];
      size_t i = args[0];
      need(g1.size() == g2.size(), "withR: premises differ in length");
      need_pos(g1, i, "withR");
      for (size_t k = 0; k < g1.size(); ++k) {
        if (k == i) continue;
        need(formula_equal(g1[k], g2[k]),
             "withR: contexts differ at position " + std::to_string(k + 1) + " (" +
                 print_formula(g1[k]) + " vs " + print_formula(g2[k]) + ")");
      }
      Sequent out = g1;
      out[i] = f_with(g1[i], g2[i]);
      return out;
    }
  }
  throw ProofError("unknown rule");
}

MallProof make(MRule rule, Formula formula, std::vector<size_t> args,
               std::vector<MallProof> premises) {
  std::vector<const Sequent*> prem;
  prem.reserve(premises.size());
  for (const auto& p : premises) prem.push_back(&p->endsequent);
  auto n = std::make_shared<MallProofNode>();
  n->rule = rule;
  n->formula = std::move(formula);
  n->args = std::move(args);
  n->endsequent = derive_endsequent(rule, n->formula, n->args, prem);
  n->premises = std::move(premises);
  return n;
}

}  // namespace

MallProof mk_id(const Formula& a) { return make(MRule::Id, a, {}, {}); }

MallProof mk_cut(const Formula& a, const MallProof& p1, const MallProof& p2,
                 size_t i_left, size_t i_right) {
  return make(MRule::Cut, a, {i_left, i_right}, {p1, p2});
}

MallProof mk_tensorR(size_t i, size_t j, const MallProof& p1, const MallProof& p2) {
  return make(MRule::TensorR, nullptr, {i, j}, {p1, p2});
}

MallProof mk_parR(size_t i, size_t j, const MallProof& p) {
  return make(MRule::ParR, nullptr, {i, j}, {p});
}

MallProof mk_plusR(size_t i, const Formula& left_disjunct, const MallProof& p) {
  return make(MRule::PlusR, left_disjunct, {i}, {p});
}

MallProof mk_plusL(size_t i, const Formula& right_disjunct, const MallProof& p) {
  return make(MRule::PlusL, right_disjunct, {i}, {p});
}

MallProof mk_withR(size_t i, const MallProof& p1, const MallProof& p2) {
  return make(MRule::WithR, nullptr, {i}, {p1, p2});
}

void check_mall(const MallProof& p) {
  if (!p) throw ProofError("null proof");
  for (const auto& q : p->premises) check_mall(q);
  std::vector<const Sequent*> prem;
  for (const auto& q : p->premises) prem.push_back(&q->endsequent);
  Sequent expect = derive_endsequent(p->rule, p->formula, p->args, prem);
  need(expect.size() == p->endsequent.size(), mrule_name(p->rule) + ": endsequent length mismatch");
  for (size_t k = 0; k < expect.size(); ++k) {
    need(formula_equal(expect[k], p->endsequent[k]),
         mrule_name(p->rule) + ": endsequent mismatch at position " + std::to_string(k + 1) +
             ": derived " + print_sequent(expect) + " but node claims " +
             print_sequent(p->endsequent));
  }
}

bool proof_equal(const MallProof& a, const MallProof& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->rule != b->rule || a->args != b->args) return false;
  bool af = static_cast<bool>(a->formula), bf = static_cast<bool>(b->formula);
  if (af != bf || (af && !formula_equal(a->formula, b->formula))) return false;
  if (a->premises.size() != b->premises.size()) return false;
  for (size_t i = 0; i < a->premises.size(); ++i) {
    if (!proof_equal(a->premises[i], b->premises[i])) return false;
  }
  if (a->endsequent.size() != b->endsequent.size()) return false;
  for (size_t i = 0; i < a->endsequent.size(); ++i) {
    if (!formula_equal(a->endsequent[i], b->endsequent[i])) return false;
  }
  return true;
}

bool is_cut_free(const MallProof& p) {
  if (p->rule == MRule::Cut) return false;
  for (const auto& q : p->premises) {
    if (!is_cut_free(q)) return false;
  }
  return true;
}

size_t proof_size(const MallProof& p) {
  size_t n = 1;
  for (const auto& q : p->premises) n += proof_size(q);
  return n;
}

std::string print_proof(const MallProof& p) {
  auto pos = [](size_t i) { return std::to_string(i + 1); };
  switch (p->rule) {
    case MRule::Id:
      return "(id " + print_formula(p->formula) + ")";
    case MRule::Cut: {
      // Short form resolves occurrences leftmost; keep positions explicit otherwise.
      auto leftmost = [](const Sequent& s, const Formula& f) {
        for (size_t k = 0; k < s.size(); ++k) {
          if (formula_equal(s[k], f)) return k;
        }
        return s.size();
      };
      bool canonical =
          leftmost(p->premises[0]->endsequent, p->formula) == p->args[0] &&
          leftmost(p->premises[1]->endsequent, negate(p->formula)) == p->args[1];
      std::string head = canonical
          ? "(cut " + print_formula(p->formula)
          : "(cut " + print_formula(p->formula) + " " + pos(p->args[0]) + " " + pos(p->args[1]);
      return head + " " + print_proof(p->premises[0]) + " " + print_proof(p->premises[1]) + ")";
    }
    case MRule::TensorR:
      return "(tensorR " + pos(p->args[0]) + " " + pos(p->args[1]) + " " +
             print_proof(p->premises[0]) + " " + print_proof(p->premises[1]) + ")";
    case MRule::ParR:
      return "(parR " + pos(p->args[0]) + " " + pos(p->args[1]) + " " +
             print_proof(p->premises[0]) + ")";
    case MRule::PlusR:
      return "(plusR " + pos(p->args[0]) + " " + print_formula(p->formula) + " " +
             print_proof(p->premises[0]) + ")";
    case MRule::PlusL:
      return "(plusL " + pos(p->args[0]) + " " + print_formula(p->formula) + " " +
             print_proof(p->premises[0]) + ")";
    case MRule::WithR:
      return "(withR " + pos(p->args[0]) + " " + print_proof(p->premises[0]) + " " +
             print_proof(p->premises[1]) + ")";
  }
  return "?";
}

}  // namespace plab
