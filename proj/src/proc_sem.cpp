#include "plab/proc_sem.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace plab {

// ---------------------------------------------------------------------------
// Boards

Board board_top() {
  Board b;
  b.top = true;
  return b;
}

bool board_equal(const Board& a, const Board& b) {
  if (a.top || b.top) return a.top == b.top;
  return a.cells == b.cells;
}

bool board_leq(const Board& a, const Board& b) {
  if (b.top) return true;
  if (a.top) return false;
  for (const auto& [c, v] : a.cells) {
    auto it = b.cells.find(c);
    if (it == b.cells.end() || it->second != v) return false;
  }
  return true;
}

Board board_join(const Board& a, const Board& b) {
  if (a.top || b.top) return board_top();
  Board out = a;
  for (const auto& [c, v] : b.cells) {
    auto [it, fresh] = out.cells.emplace(c, v);
    if (!fresh && it->second != v) return board_top();
  }
  return out;
}

std::string print_board(const Board& b) {
  if (b.top) return "TOP";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [c, v] : b.cells) {
    if (!first) os << ", ";
    first = false;
    os << c << "=" << v;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Structural normalization

namespace {

// Rename free occurrences of cell `from` to `to` (an inner binder shadows).
Proc rename_cell(const Proc& p, const std::string& from, const std::string& to) {
  switch (p->kind) {
    case ProcKind::Input: {
      const std::string& c = p->cell == from ? to : p->cell;
      return p_input(c, p->var, rename_cell(p->parts[0], from, to));
    }
    case ProcKind::Output: {
      if (p->cell != from) return p;
      return p->expr.is_var ? p_out_var(to, p->expr.var) : p_out_lit(to, p->expr.value);
    }
    case ProcKind::Par:
      return p_par(rename_cell(p->parts[0], from, to), rename_cell(p->parts[1], from, to));
    case ProcKind::New:
      if (p->cell == from) return p;  // shadowed
      return p_new(p->cell, rename_cell(p->parts[0], from, to));
    case ProcKind::Rec: return p_rec(p->var, rename_cell(p->parts[0], from, to));
    default: return p;
  }
}

struct NormState {
  size_t fresh = 0;
  size_t unfolds = 0;
  bool top = false;
  std::vector<Proc> soup;
  std::vector<std::string> hidden;
};

// Flatten the top-level parallel soup: units dropped, TOP absorbing, hidden
// binders extruded under provisional fresh names, recursion unfolded until a
// guard appears (guardedness makes this terminate).
void collect(const Proc& p, NormState& st) {
  if (st.top) return;
  switch (p->kind) {
    case ProcKind::Nil: return;
    case ProcKind::Top: st.top = true; return;
    case ProcKind::Par:
      collect(p->parts[0], st);
      collect(p->parts[1], st);
      return;
    case ProcKind::New: {
      std::string fresh = "#" + std::to_string(st.fresh++);
      st.hidden.push_back(fresh);
      collect(rename_cell(p->parts[0], p->cell, fresh), st);
      return;
    }
    case ProcKind::Rec:
      if (++st.unfolds > 1000) {
        throw ProcError("normalize: recursion unfolding bound exceeded");
      }
      collect(subst_procvar(p->parts[0], p->var, p), st);
      return;
    default: st.soup.push_back(p); return;
  }
}

// Print with hidden cell numbers masked, so sorting does not depend on the
// provisional numbering.
std::string masked_print(const Proc& p) {
  std::string s = print_proc(p);
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    out += s[i];
    if (s[i] == '#') {
      while (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) ++i;
    }
  }
  return out;
}

void hidden_occurrences(const Proc& p, std::vector<std::string>& order,
                        std::set<std::string>& seen) {
  switch (p->kind) {
    case ProcKind::Input:
    case ProcKind::Output:
    case ProcKind::New:
      if (!p->cell.empty() && p->cell[0] == '#' && seen.insert(p->cell).second) {
        order.push_back(p->cell);
      }
      break;
    default: break;
  }
  for (const auto& q : p->parts) hidden_occurrences(q, order, seen);
}

Proc fold_par(const std::vector<Proc>& parts) {
  if (parts.empty()) return p_nil();
  Proc out = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) out = p_par(parts[i], out);
  return out;
}

}  // namespace

Proc normalize_struct(const Proc& p) {
  NormState st;
  collect(p, st);
  if (st.top) return p_top();

  // Persistent outputs: duplicates merge, disagreement is failure.
  std::map<std::string, size_t> emitted;
  std::vector<Proc> parts;
  for (const auto& q : st.soup) {
    if (q->kind == ProcKind::Output && !q->expr.is_var) {
      auto [it, fresh] = emitted.emplace(q->cell, q->expr.value);
      if (!fresh) {
        if (it->second != q->expr.value) return p_top();
        continue;  // duplicate
      }
    }
    parts.push_back(q);
  }

  std::sort(parts.begin(), parts.end(), [](const Proc& a, const Proc& b) {
    return masked_print(a) < masked_print(b);
  });

  // Canonical hidden names: number by first occurrence in the sorted soup.
  // (Parts that differ only in the identity of hidden cells tie under the
  // masked ordering; desk-scale terms use at most a few hidden cells, where
  // first-occurrence numbering is canonical.)
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto& q : parts) hidden_occurrences(q, order, seen);
  std::map<std::string, std::string> final_name;
  for (size_t i = 0; i < order.size(); ++i) final_name[order[i]] = "#" + std::to_string(i);
  for (auto& q : parts) {
    for (const auto& [from, to] : final_name) {
      if (from != to) q = rename_cell(q, from, to);
    }
  }
  std::sort(parts.begin(), parts.end(), [](const Proc& a, const Proc& b) {
    return print_proc(a) < print_proc(b);
  });

  Proc out = fold_par(parts);
  for (size_t i = order.size(); i-- > 0;) {
    out = p_new("#" + std::to_string(i), out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

// Split a normalized term into its hidden binders and parallel soup.
void peel(const Proc& p, std::vector<std::string>& hidden, std::vector<Proc>& soup) {
  Proc body = p;
  while (body->kind == ProcKind::New) {
    hidden.push_back(body->cell);
    body = body->parts[0];
  }
  std::function<void(const Proc&)> flat = [&](const Proc& q) {
    if (q->kind == ProcKind::Par) {
      flat(q->parts[0]);
      flat(q->parts[1]);
    } else if (q->kind != ProcKind::Nil) {
      soup.push_back(q);
    }
  };
  flat(body);
}

Proc rewrap(const std::vector<std::string>& hidden, const std::vector<Proc>& soup) {
  Proc out = fold_par(soup);
  for (size_t i = hidden.size(); i-- > 0;) out = p_new(hidden[i], out);
  return out;
}

}  // namespace

std::vector<Proc> reduce_step(const Proc& p) {
  if (p->kind == ProcKind::Top) return {};
  std::vector<std::string> hidden;
  std::vector<Proc> soup;
  peel(p, hidden, soup);

  std::vector<Proc> out;
  std::set<std::string> distinct;
  for (const auto& o : soup) {
    if (o->kind != ProcKind::Output || o->expr.is_var) continue;
    for (size_t j = 0; j < soup.size(); ++j) {
      const Proc& in = soup[j];
      if (in->kind != ProcKind::Input || in->cell != o->cell) continue;
      std::vector<Proc> next = soup;
      next[j] = subst_value(in->parts[0], in->var, o->expr.value);
      Proc reduct = normalize_struct(rewrap(hidden, next));
      if (distinct.insert(print_proc(reduct)).second) out.push_back(reduct);
    }
  }
  return out;
}

namespace {

Board board_of_terminal(const Proc& p) {
  if (p->kind == ProcKind::Top) return board_top();
  std::vector<std::string> hidden;
  std::vector<Proc> soup;
  peel(p, hidden, soup);
  std::set<std::string> hide(hidden.begin(), hidden.end());
  Board b;
  for (const auto& q : soup) {
    if (q->kind == ProcKind::Output && !q->expr.is_var && !hide.count(q->cell)) {
      b.cells[q->cell] = q->expr.value;
    }
  }
  return b;
}

}  // namespace

Board run(const Proc& p, const Board& input) {
  check_proc(p);
  if (input.top) return board_top();

  Proc term = p;
  for (const auto& [c, v] : input.cells) term = p_par(term, p_out_lit(c, v));
  term = normalize_struct(term);

  constexpr size_t kStateBound = 20000;
  std::set<std::string> visited;
  std::deque<Proc> queue = {term};
  visited.insert(print_proc(term));
  std::vector<Board> finals;

  while (!queue.empty()) {
    Proc state = queue.front();
    queue.pop_front();
    std::string self = print_proc(state);
    bool terminal = true;
    for (const auto& next : reduce_step(state)) {
      std::string key = print_proc(next);
      if (key == self) continue;  // a step that re-creates the same state
      terminal = false;
      if (visited.insert(key).second) {
        if (visited.size() > kStateBound) {
          throw ProcError("run: reduction graph exceeded its size bound");
        }
        queue.push_back(next);
      }
    }
    if (terminal) finals.push_back(board_of_terminal(state));
  }

  if (finals.empty()) throw ProcError("run: no terminal state reached");
  for (size_t i = 1; i < finals.size(); ++i) {
    if (!board_equal(finals[i], finals[0])) {
      throw ProcError("run: reduction is not confluent");
    }
  }
  return finals[0];
}

// ---------------------------------------------------------------------------
// Board lattice over a fixed cell set

namespace {

std::vector<std::string> sorted_cells(std::vector<std::string> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

}  // namespace

Dom board_dom(const std::vector<std::string>& cells, size_t n_values) {
  std::vector<std::string> names;
  names.reserve(n_values);
  for (size_t v = 0; v < n_values; ++v) names.push_back(std::to_string(v));
  std::vector<Dom> coords(sorted_cells(cells).size(), d_flat(names));
  return d_prod(coords);
}

size_t encode_board(const Dom& d, const std::vector<std::string>& cells, const Board& b) {
  if (b.top) return dom_top(d);
  std::vector<std::string> order = sorted_cells(cells);
  std::vector<size_t> codes(order.size(), 0);
  for (const auto& [c, v] : b.cells) {
    auto it = std::lower_bound(order.begin(), order.end(), c);
    if (it == order.end() || *it != c) {
      throw ProcError("board cell '" + c + "' is outside the lattice's cell set");
    }
    size_t i = static_cast<size_t>(it - order.begin());
    // Each flat coordinate holds a bottom plus the value range.
    if (v + 1 >= dom_size(d->parts[i])) {
      throw ProcError("board value " + std::to_string(v) + " is outside the lattice's range");
    }
    codes[i] = 1 + v;
  }
  return prod_make(d, codes);
}

Board decode_board(const Dom& d, const std::vector<std::string>& cells, size_t x) {
  if (x == dom_top(d)) return board_top();
  std::vector<std::string> order = sorted_cells(cells);
  std::vector<size_t> codes = prod_split(d, x);
  Board b;
  for (size_t i = 0; i < order.size(); ++i) {
    if (codes[i] != 0) b.cells[order[i]] = codes[i] - 1;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Denotation

namespace {

struct EvalCtx {
  size_t n_values;
  size_t fresh = 0;
};

using ProcMeaning = std::function<Board(const Board&)>;

struct Env {
  std::map<std::string, size_t> values;        // bound value variables
  std::map<std::string, ProcMeaning> procs;    // bound process variables
  std::map<std::string, std::string> cellmap;  // hidden-cell renaming
};

std::string resolve(const Env& env, const std::string& cell) {
  auto it = env.cellmap.find(cell);
  return it == env.cellmap.end() ? cell : it->second;
}

// Enumerate all boards over `cells` with values below n_values and check the
// two meanings agree on each.
bool agree_on(const std::vector<std::string>& cells, size_t n_values,
              const ProcMeaning& f, const ProcMeaning& g) {
  std::vector<size_t> pick(cells.size(), 0);
  while (true) {
    Board b;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (pick[i] != 0) b.cells[cells[i]] = pick[i] - 1;
    }
    if (!board_equal(f(b), g(b))) return false;
    size_t i = 0;
    for (; i < cells.size(); ++i) {
      if (++pick[i] <= n_values) break;
      pick[i] = 0;
    }
    if (i == cells.size()) return true;
  }
}

Board eval(const Proc& p, const Env& env, const Board& b, EvalCtx& ctx) {
  if (b.top) return board_top();
  switch (p->kind) {
    case ProcKind::Input: {
      auto it = b.cells.find(resolve(env, p->cell));
      if (it == b.cells.end()) return b;
      Env inner = env;
      inner.values[p->var] = it->second;
      return eval(p->parts[0], inner, b, ctx);
    }
    case ProcKind::Output: {
      size_t v;
      if (p->expr.is_var) {
        auto it = env.values.find(p->expr.var);
        if (it == env.values.end()) {
          throw ProcError("denote: unbound variable '" + p->expr.var + "'");
        }
        v = it->second;
      } else {
        v = p->expr.value;
      }
      Board one;
      one.cells[resolve(env, p->cell)] = v;
      return board_join(b, one);
    }
    case ProcKind::Par: {
      // Alternating iteration to the least common fixpoint above b.
      Board y = b;
      for (size_t rounds = 0; rounds < 1000; ++rounds) {
        Board y2 = eval(p->parts[0], env, eval(p->parts[1], env, y, ctx), ctx);
        if (board_equal(y2, y)) return y;
        y = y2;
        if (y.top) return y;
      }
      throw ProcError("denote: parallel iteration bound exceeded");
    }
    case ProcKind::Nil: return b;
    case ProcKind::Top: return board_top();
    case ProcKind::New: {
      std::string fresh = "#h" + std::to_string(ctx.fresh++);
      Env inner = env;
      inner.cellmap[p->cell] = fresh;
      Board r = eval(p->parts[0], inner, b, ctx);
      if (!r.top) r.cells.erase(fresh);
      return r;
    }
    case ProcKind::Var: {
      auto it = env.procs.find(p->var);
      if (it == env.procs.end()) {
        throw ProcError("denote: unbound process variable '" + p->var + "'");
      }
      return it->second(b);
    }
    case ProcKind::Rec: {
      // Fixpoint of meanings: iterate the body with the previous iterate
      // bound to the variable, comparing tables over the cells in scope.
      std::vector<std::string> universe;
      for (const auto& c : free_cells(p)) universe.push_back(resolve(env, c));
      std::sort(universe.begin(), universe.end());
      universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
      size_t bound = universe.size() * ctx.n_values + 1;
      ProcMeaning cur = [](const Board& x) { return x; };
      for (size_t round = 0; round <= bound; ++round) {
        Proc body = p->parts[0];
        Env base = env;
        std::string var = p->var;
        ProcMeaning next = [body, base, var, cur, &ctx](const Board& x) {
          Env inner = base;
          inner.procs[var] = cur;
          return eval(body, inner, x, ctx);
        };
        if (agree_on(universe, ctx.n_values, cur, next)) return cur(b);
        cur = next;
      }
      throw ProcError("denote: recursion unfolding bound exceeded");
    }
  }
  throw ProcError("denote: bad process node");
}

}  // namespace

ClosureOp denote(const Proc& p, const std::vector<std::string>& cells, size_t n_values) {
  check_proc(p);
  std::vector<std::string> order = sorted_cells(cells);
  for (const auto& c : free_cells(p)) {
    if (!std::binary_search(order.begin(), order.end(), c)) {
      throw ProcError("denote: cell '" + c + "' is outside the given cell set");
    }
  }
  Dom d = board_dom(order, n_values);
  return clo_from_function(d, [&](size_t x) {
    EvalCtx ctx{n_values};
    Board b = decode_board(d, order, x);
    return encode_board(d, order, eval(p, Env{}, b, ctx));
  });
}

Proc copycat_process(const std::vector<std::string>& pair_names) {
  std::vector<Proc> parts;
  for (const auto& s : pair_names) {
    std::string l = "l" + s, r = "r" + s;
    parts.push_back(p_par(p_input(l, "x", p_out_var(r, "x")),
                          p_input(r, "x", p_out_var(l, "x"))));
  }
  Proc out = parts.empty() ? p_nil() : parts.back();
  for (size_t i = parts.size(); i-- > 1;) out = p_par(parts[i - 1], out);
  return out;
}

}  // namespace plab
