#include "plab/strategy.hpp"

#include <sstream>
#include <stdexcept>

namespace plab {

StrategyTree s_stop() {
  auto n = std::make_shared<StratNode>();
  n->kind = SKind::Stop;
  return n;
}

StrategyTree s_out(const Move& m, const StrategyTree& next) {
  auto n = std::make_shared<StratNode>();
  n->kind = SKind::Out;
  n->move = m;
  n->next = next;
  return n;
}

StrategyTree s_in(BranchMap branches) {
  if (branches.empty()) return s_stop();
  auto n = std::make_shared<StratNode>();
  n->kind = SKind::In;
  n->branches = std::move(branches);
  return n;
}

bool strategy_equal(const StrategyTree& a, const StrategyTree& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case SKind::Stop:
      return true;
    case SKind::Out:
      return move_equal(a->move, b->move) && strategy_equal(a->next, b->next);
    case SKind::In: {
      if (a->branches.size() != b->branches.size()) return false;
      auto it = b->branches.begin();
      for (const auto& [m, sub] : a->branches) {
        if (!move_equal(m, it->first) || !strategy_equal(sub, it->second)) return false;
        ++it;
      }
      return true;
    }
  }
  return false;
}

std::string print_strategy(const StrategyTree& s) {
  switch (s->kind) {
    case SKind::Stop:
      return "stop";
    case SKind::Out:
      return "out " + print_move(s->move) + ". " + print_strategy(s->next);
    case SKind::In: {
      std::ostringstream out;
      out << "{";
      bool first = true;
      for (const auto& [m, sub] : s->branches) {
        if (!first) out << ", ";
        first = false;
        out << print_move(m) << " -> " << print_strategy(sub);
      }
      out << "}";
      return out.str();
    }
  }
  return "?";
}

std::optional<Move> first_move(const StrategyTree& s) {
  if (s->kind == SKind::Out) return s->move;
  return std::nullopt;
}

namespace {

Move swap_move(const Move& m) {
  switch (m->kind) {
    case MKind::SideL:
      return m_sideR(m->a);
    case MKind::SideR:
      return m_sideL(m->a);
    case MKind::Pair:
      return m_pair(m->b, m->a);
    case MKind::Base:
      return m;
  }
  return m;
}

}  // namespace

StrategyTree swap_sides(const StrategyTree& s) {
  switch (s->kind) {
    case SKind::Stop:
      return s;
    case SKind::Out:
      return s_out(swap_move(s->move), swap_sides(s->next));
    case SKind::In: {
      BranchMap out;
      for (const auto& [m, sub] : s->branches) out[swap_move(m)] = swap_sides(sub);
      return s_in(std::move(out));
    }
  }
  return s;
}

std::vector<StrategyTree> enumerate_strategies(const Game& g, Pol owner) {
  Game e = expand(g);
  std::vector<StrategyTree> out;
  if (e->children.empty()) {
    out.push_back(s_stop());
    return out;
  }
  if (e->owner == owner) {
    for (const auto& [m, sub] : e->children)
      for (const StrategyTree& s : enumerate_strategies(sub, owner))
        out.push_back(s_out(m, s));
    return out;
  }
  // Opponent position: one independent choice of continuation per move.
  std::vector<std::pair<Move, std::vector<StrategyTree>>> per_move;
  for (const auto& [m, sub] : e->children)
    per_move.emplace_back(m, enumerate_strategies(sub, owner));
  std::vector<BranchMap> partial{BranchMap{}};
  for (const auto& [m, opts] : per_move) {
    std::vector<BranchMap> next;
    for (const BranchMap& bm : partial)
      for (const StrategyTree& s : opts) {
        BranchMap ext = bm;
        ext[m] = s;
        next.push_back(std::move(ext));
      }
    partial = std::move(next);
  }
  for (BranchMap& bm : partial) out.push_back(s_in(std::move(bm)));
  return out;
}

bool validate_strategy(const Game& g, Pol owner, const StrategyTree& s) {
  Game e = expand(g);
  if (e->children.empty()) return s->kind == SKind::Stop;
  if (e->owner == owner) {
    if (s->kind != SKind::Out) return false;
    auto it = e->children.find(s->move);
    if (it == e->children.end()) return false;
    return validate_strategy(it->second, owner, s->next);
  }
  if (s->kind != SKind::In) return false;
  if (s->branches.size() != e->children.size()) return false;
  auto bit = s->branches.begin();
  for (const auto& [m, sub] : e->children) {
    if (!move_equal(m, bit->first)) return false;
    if (!validate_strategy(sub, owner, bit->second)) return false;
    ++bit;
  }
  return true;
}

PlayResult play(const Game& g, const StrategyTree& p_strat, const StrategyTree& o_strat) {
  Game e = expand(g);
  PlayResult res;
  StrategyTree sp = p_strat, so = o_strat;
  Game cur = e;
  while (true) {
    if (cur->children.empty()) {
      res.loser = cur->owner;
      return res;
    }
    const StrategyTree& mover = cur->owner == Pol::P ? sp : so;
    const StrategyTree& waiter = cur->owner == Pol::P ? so : sp;
    if (mover->kind != SKind::Out)
      throw std::runtime_error("strategy fails to move at an owned position");
    if (waiter->kind != SKind::In)
      throw std::runtime_error("strategy fails to listen at an opponent position");
    Move m = mover->move;
    auto git = cur->children.find(m);
    if (git == cur->children.end())
      throw std::runtime_error("strategy plays an illegal move " + print_move(m));
    auto wit = waiter->branches.find(m);
    if (wit == waiter->branches.end())
      throw std::runtime_error("strategy has no branch for move " + print_move(m));
    res.moves.push_back(m);
    StrategyTree mnext = mover->next, wnext = wit->second;
    if (cur->owner == Pol::P) {
      sp = mnext;
      so = wnext;
    } else {
      so = mnext;
      sp = wnext;
    }
    cur = expand(git->second);
  }
}

}  // namespace plab
