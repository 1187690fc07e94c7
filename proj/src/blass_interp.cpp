#include "plab/blass_interp.hpp"

#include <deque>
#include <optional>
#include <stdexcept>

namespace plab {

namespace {

// One sequent position as the strategy construction sees it: the part of the
// formula's game still to be played, the last leaf-level value played there
// (what an identity axiom mirrors), and branch selections the environment has
// made that no additive rule has consumed yet.
struct BCoord {
  Game residual;
  std::optional<std::string> last;
  std::deque<Move> pending;
};

// A position is leaf-level when every available move finishes the component;
// such moves carry data (they are mirrored by axioms) rather than selecting
// the premise of an additive rule.
bool leaf_level(const Game& g) {
  Game e = expand(g);
  for (const auto& [m, sub] : e->children)
    if (!expand(sub)->children.empty()) return false;
  return true;
}

void route(BCoord& c, const Move& m) {
  bool leaf = leaf_level(c.residual);
  c.residual = game_child(c.residual, m);
  if (leaf) {
    if (m->kind != MKind::Base)
      throw std::logic_error("leaf move is not a base move");
    c.last = m->label;
  } else {
    c.pending.push_back(m);
  }
}

size_t premise_for(const Move& sel) {
  if (sel->kind != MKind::Base || (sel->label != "l" && sel->label != "r"))
    throw std::logic_error("branch selection is not an l/r move");
  return sel->label == "l" ? 0 : 1;
}

StrategyTree build(MallProof node, BCoord c0, BCoord c1);

StrategyTree positive_step(const MallProof& node, BCoord& c0, BCoord& c1) {
  switch (node->rule) {
    case MRule::PlusR:
    case MRule::PlusL: {
      size_t i = node->args[0];
      BCoord& ci = i == 0 ? c0 : c1;
      Move sel = m_base(node->rule == MRule::PlusR ? "r" : "l");
      ci.residual = game_child(ci.residual, sel);
      Move mv = i == 0 ? m_sideL(sel) : m_sideR(sel);
      return s_out(mv, build(node->premises[0], c0, c1));
    }
    case MRule::Id: {
      if (node->formula->kind != FKind::Atom && node->formula->kind != FKind::NegAtom)
        throw std::runtime_error(
            "the game interpretation restricts identity axioms to literals");
      bool live0 = !expand(c0.residual)->children.empty();
      bool live1 = !expand(c1.residual)->children.empty();
      if (live0 == live1)
        throw std::logic_error("identity axiom cannot tell which side to mirror");
      BCoord& target = live0 ? c0 : c1;
      const BCoord& source = live0 ? c1 : c0;
      if (!source.last)
        throw std::logic_error("identity axiom has no value to mirror");
      Move sel = m_base(*source.last);
      target.residual = game_child(target.residual, sel);
      Move mv = live0 ? m_sideL(sel) : m_sideR(sel);
      return s_out(mv, build(node, c0, c1));
    }
    case MRule::WithR:
      throw std::logic_error("withR reached with the move to make");
    case MRule::Cut:
      throw std::runtime_error(
          "the game interpretation does not support cut above other rules");
    case MRule::TensorR:
      throw std::runtime_error(
          "the sequential game interpretation does not support the tensorR rule");
    case MRule::ParR:
      throw std::runtime_error(
          "the game interpretation supports par only as the final merge of a "
          "two-formula sequent");
  }
  throw std::logic_error("unreachable rule");
}

StrategyTree build(MallProof node, BCoord c0, BCoord c1) {
  // Let the proof consume branch selections the environment already made.
  while (node->rule == MRule::WithR) {
    size_t i = node->args[0];
    BCoord& ci = i == 0 ? c0 : c1;
    if (ci.pending.empty()) break;
    Move sel = ci.pending.front();
    ci.pending.pop_front();
    node = node->premises[premise_for(sel)];
  }

  Pol p0 = game_polarity(c0.residual), p1 = game_polarity(c1.residual);
  if (p0 == Pol::P && p1 == Pol::P) return positive_step(node, c0, c1);

  // Environment to move: branch over the legal moves of the pairing.
  BranchMap branches;
  Game e0 = expand(c0.residual), e1 = expand(c1.residual);
  if (p0 == Pol::O && p1 == Pol::P) {
    for (const auto& [m, sub] : e0->children) {
      BCoord n0 = c0, n1 = c1;
      route(n0, m);
      branches[m_sideL(m)] = build(node, n0, n1);
    }
  } else if (p0 == Pol::P && p1 == Pol::O) {
    for (const auto& [m, sub] : e1->children) {
      BCoord n0 = c0, n1 = c1;
      route(n1, m);
      branches[m_sideR(m)] = build(node, n0, n1);
    }
  } else {
    for (const auto& [m0, s0] : e0->children)
      for (const auto& [m1, s1] : e1->children) {
        BCoord n0 = c0, n1 = c1;
        route(n0, m0);
        route(n1, m1);
        branches[m_pair(m0, m1)] = build(node, n0, n1);
      }
  }
  return s_in(std::move(branches));
}

void reject_tensor(const MallProof& p) {
  if (p->rule == MRule::TensorR)
    throw std::runtime_error(
        "the sequential game interpretation does not support the tensorR rule");
  for (const MallProof& q : p->premises) reject_tensor(q);
}

}  // namespace

BlassDen interp_proof_blass(const MallProof& p) {
  reject_tensor(p);
  if (p->rule == MRule::Cut) {
    BlassDen d1 = interp_proof_blass(p->premises[0]);
    BlassDen d2 = interp_proof_blass(p->premises[1]);
    if (d1.seq.size() != 2 || d2.seq.size() != 2 || p->args[0] != 1 || p->args[1] != 0)
      throw std::runtime_error(
          "the game interpretation composes cuts on the last formula of one "
          "two-formula sequent against the first formula of another");
    Game gX = interpret_formula_blass(d1.seq[0]);
    Game gM = interpret_formula_blass(d1.seq[1]);
    Game gY = interpret_formula_blass(d2.seq[1]);
    BlassDen out;
    out.seq = p->endsequent;
    out.game = g_par(gX, gY);
    out.strat = compose_blass(d1.strat, gX, gM, d2.strat, gY);
    return out;
  }
  if (p->rule == MRule::ParR && p->endsequent.size() == 1) {
    BlassDen d = interp_proof_blass(p->premises[0]);
    BlassDen out;
    out.seq = p->endsequent;
    out.game = interpret_formula_blass(p->endsequent[0]);
    out.strat = p->args[0] == 0 ? d.strat : swap_sides(d.strat);
    return out;
  }
  if (p->endsequent.size() != 2)
    throw std::runtime_error(
        "the game interpretation handles one- or two-formula sequents only");
  BCoord c0{interpret_formula_blass(p->endsequent[0]), std::nullopt, {}};
  BCoord c1{interpret_formula_blass(p->endsequent[1]), std::nullopt, {}};
  BlassDen out;
  out.seq = p->endsequent;
  out.game = g_par(c0.residual, c1.residual);
  out.strat = build(p, std::move(c0), std::move(c1));
  return out;
}

}  // namespace plab
