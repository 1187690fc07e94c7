#include "plab/game.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace plab {

Move m_base(const std::string& label) {
  auto n = std::make_shared<MoveNode>();
  n->kind = MKind::Base;
  n->label = label;
  return n;
}

Move m_sideL(const Move& inner) {
  auto n = std::make_shared<MoveNode>();
  n->kind = MKind::SideL;
  n->a = inner;
  return n;
}

Move m_sideR(const Move& inner) {
  auto n = std::make_shared<MoveNode>();
  n->kind = MKind::SideR;
  n->a = inner;
  return n;
}

Move m_pair(const Move& left, const Move& right) {
  auto n = std::make_shared<MoveNode>();
  n->kind = MKind::Pair;
  n->a = left;
  n->b = right;
  return n;
}

bool move_equal(const Move& x, const Move& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case MKind::Base:
      return x->label == y->label;
    case MKind::SideL:
    case MKind::SideR:
      return move_equal(x->a, y->a);
    case MKind::Pair:
      return move_equal(x->a, y->a) && move_equal(x->b, y->b);
  }
  return false;
}

bool move_less(const Move& x, const Move& y) {
  if (x->kind != y->kind) return x->kind < y->kind;
  switch (x->kind) {
    case MKind::Base:
      return x->label < y->label;
    case MKind::SideL:
    case MKind::SideR:
      return move_less(x->a, y->a);
    case MKind::Pair:
      if (move_less(x->a, y->a)) return true;
      if (move_less(y->a, x->a)) return false;
      return move_less(x->b, y->b);
  }
  return false;
}

std::string print_move(const Move& m) {
  switch (m->kind) {
    case MKind::Base:
      return m->label;
    case MKind::SideL:
      return "L(" + print_move(m->a) + ")";
    case MKind::SideR:
      return "R(" + print_move(m->a) + ")";
    case MKind::Pair:
      return "(" + print_move(m->a) + "," + print_move(m->b) + ")";
  }
  return "?";
}

Game g_sum(Pol owner, MoveMap children) {
  auto n = std::make_shared<GameNode>();
  n->kind = GKind::SumG;
  n->owner = owner;
  n->children = std::move(children);
  return n;
}

Game g_tensor(const Game& l, const Game& r) {
  auto n = std::make_shared<GameNode>();
  n->kind = GKind::TensorG;
  n->left = l;
  n->right = r;
  return n;
}

Game g_par(const Game& l, const Game& r) {
  auto n = std::make_shared<GameNode>();
  n->kind = GKind::ParG;
  n->left = l;
  n->right = r;
  return n;
}

Game bool_game() {
  MoveMap ch;
  ch[m_base("tt")] = g_sum(Pol::O, {});
  ch[m_base("ff")] = g_sum(Pol::O, {});
  return g_sum(Pol::P, std::move(ch));
}

Pol game_polarity(const Game& g) {
  switch (g->kind) {
    case GKind::SumG:
      return g->owner;
    case GKind::TensorG:
      return (game_polarity(g->left) == Pol::O && game_polarity(g->right) == Pol::O)
                 ? Pol::O
                 : Pol::P;
    case GKind::ParG:
      return (game_polarity(g->left) == Pol::P && game_polarity(g->right) == Pol::P)
                 ? Pol::P
                 : Pol::O;
  }
  return Pol::P;
}

Game dualize(const Game& g) {
  switch (g->kind) {
    case GKind::SumG: {
      MoveMap ch;
      for (const auto& [m, sub] : g->children) ch[m] = dualize(sub);
      return g_sum(dual(g->owner), std::move(ch));
    }
    case GKind::TensorG:
      return g_par(dualize(g->left), dualize(g->right));
    case GKind::ParG:
      return g_tensor(dualize(g->left), dualize(g->right));
  }
  return g;
}

Game expand(const Game& g) {
  if (g->kind == GKind::SumG) return g;
  Game le = expand(g->left);
  Game re = expand(g->right);
  Pol pl = le->owner, pr = re->owner;
  bool tensor = g->kind == GKind::TensorG;
  auto mk = tensor ? g_tensor : g_par;
  MoveMap ch;
  if (tensor ? (pl == Pol::P && pr == Pol::O) : (pl == Pol::O && pr == Pol::P)) {
    // Only the left component is live: its owner moves there.
    for (const auto& [m, sub] : le->children) ch[m_sideL(m)] = mk(sub, re);
    return g_sum(tensor ? Pol::P : Pol::O, std::move(ch));
  }
  if (tensor ? (pl == Pol::O && pr == Pol::P) : (pl == Pol::P && pr == Pol::O)) {
    for (const auto& [m, sub] : re->children) ch[m_sideR(m)] = mk(le, sub);
    return g_sum(tensor ? Pol::P : Pol::O, std::move(ch));
  }
  if (pl == pr && pl == (tensor ? Pol::P : Pol::O)) {
    // The mover owns both components and must commit to both at once.
    for (const auto& [m, subl] : le->children)
      for (const auto& [n, subr] : re->children) ch[m_pair(m, n)] = mk(subl, subr);
    return g_sum(pl, std::move(ch));
  }
  // The mover owns exactly one move in one of the two components.
  for (const auto& [m, sub] : le->children) ch[m_sideL(m)] = mk(sub, re);
  for (const auto& [n, sub] : re->children) ch[m_sideR(n)] = mk(le, sub);
  return g_sum(pl, std::move(ch));
}

Game game_child(const Game& g, const Move& m) {
  Game e = expand(g);
  auto it = e->children.find(m);
  if (it == e->children.end())
    throw std::runtime_error("game has no move " + print_move(m));
  return it->second;
}

size_t count_positions(const Game& g) {
  Game e = expand(g);
  size_t n = 1;
  for (const auto& [m, sub] : e->children) n += count_positions(sub);
  return n;
}

Game interpret_formula_blass(const Formula& f) {
  switch (f->kind) {
    case FKind::Atom:
      return bool_game();
    case FKind::NegAtom:
      return dualize(bool_game());
    case FKind::Plus: {
      MoveMap ch;
      ch[m_base("l")] = interpret_formula_blass(f->left);
      ch[m_base("r")] = interpret_formula_blass(f->right);
      return g_sum(Pol::P, std::move(ch));
    }
    case FKind::With: {
      MoveMap ch;
      ch[m_base("l")] = interpret_formula_blass(f->left);
      ch[m_base("r")] = interpret_formula_blass(f->right);
      return g_sum(Pol::O, std::move(ch));
    }
    case FKind::Tensor:
      return g_tensor(interpret_formula_blass(f->left),
                      interpret_formula_blass(f->right));
    case FKind::Par:
      return g_par(interpret_formula_blass(f->left),
                   interpret_formula_blass(f->right));
  }
  throw std::logic_error("unreachable formula kind");
}

std::string print_game(const Game& g) {
  switch (g->kind) {
    case GKind::SumG: {
      std::ostringstream out;
      out << pol_char(g->owner) << "{";
      bool first = true;
      for (const auto& [m, sub] : g->children) {
        if (!first) out << ", ";
        first = false;
        out << print_move(m) << " -> " << print_game(sub);
      }
      out << "}";
      return out.str();
    }
    case GKind::TensorG:
      return "(" + print_game(g->left) + " x " + print_game(g->right) + ")";
    case GKind::ParG:
      return "(" + print_game(g->left) + " par " + print_game(g->right) + ")";
  }
  return "?";
}

}  // namespace plab
