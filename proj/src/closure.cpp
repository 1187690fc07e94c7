#include "plab/closure.hpp"

#include <stdexcept>

namespace plab {

namespace {

// Join in the top-extended domain.
size_t join_ext(const Dom& d, size_t x, size_t y) {
  size_t top = dom_top(d);
  if (x == top || y == top) return top;
  auto j = dom_join(d, x, y);
  return j ? *j : top;
}

struct BinView {
  // Decomposes a two-factor product domain.
  Dom dom, a, b;
  explicit BinView(const Dom& d) : dom(d) {
    if (d->kind != DKind::Product || d->parts.size() != 2)
      throw std::logic_error("expected a two-factor product domain");
    a = d->parts[0];
    b = d->parts[1];
  }
  std::pair<size_t, size_t> split(size_t x) const {
    auto xs = prod_split(dom, x);
    return {xs[0], xs[1]};
  }
  size_t make(size_t x, size_t y) const { return prod_make(dom, {x, y}); }
};

}  // namespace

size_t clo_apply(const ClosureOp& c, size_t x) {
  if (x >= c.table.size()) throw std::out_of_range("closure applied outside its domain");
  return c.table[x];
}

ClosureOp clo_identity(const Dom& d) {
  ClosureOp c{d, {}};
  c.table.resize(dom_size(d) + 1);
  for (size_t i = 0; i < c.table.size(); ++i) c.table[i] = i;
  return c;
}

ClosureOp clo_from_function(const Dom& d, const std::function<size_t(size_t)>& f) {
  ClosureOp c{d, {}};
  size_t n = dom_size(d);
  c.table.resize(n + 1);
  for (size_t i = 0; i < n; ++i) c.table[i] = f(i);
  c.table[n] = n;
  return c;
}

bool closure_equal(const ClosureOp& a, const ClosureOp& b) {
  return dom_equal(a.dom, b.dom) && a.table == b.table;
}

bool is_closure(const ClosureOp& c) {
  size_t n = dom_size(c.dom), top = n;
  if (c.table.size() != n + 1) return false;
  if (c.table[top] != top) return false;
  for (size_t x = 0; x <= n; ++x)
    if (c.table[x] > top) return false;
  for (size_t x = 0; x < n; ++x) {
    size_t tx = c.table[x];
    if (tx != top && !dom_leq(c.dom, x, tx)) return false;          // increasing
    if (c.table[tx] != tx) return false;                            // idempotent
    for (size_t y = 0; y < n; ++y) {
      if (!dom_leq(c.dom, x, y)) continue;
      size_t ty = c.table[y];
      if (tx == top && ty != top) return false;                     // monotone
      if (tx != top && ty != top && !dom_leq(c.dom, tx, ty)) return false;
    }
  }
  return true;
}

ClosureOp lift_function(const Dom& d, const std::vector<size_t>& base) {
  size_t n = dom_size(d), top = n;
  if (base.size() != n + 1 || base[top] != top)
    throw std::invalid_argument("base table must cover the domain and fix top");
  ClosureOp c{d, std::vector<size_t>(n + 1)};
  c.table[top] = top;
  for (size_t x = 0; x < n; ++x) {
    size_t cur = x;
    for (size_t step = 0; step <= n; ++step) {
      if (cur == top) break;
      size_t nxt = join_ext(d, cur, base[cur]);
      if (nxt == cur) break;
      cur = nxt;
    }
    c.table[x] = cur;
  }
  return c;
}

ClosureOp compose_closures(const ClosureOp& sigma, const ClosureOp& tau) {
  BinView vs(sigma.dom), vt(tau.dom);
  if (!dom_equal(vs.b, vt.a))
    throw std::logic_error("composition requires matching middle domains");
  Dom rd = d_prod({vs.a, vt.b});
  size_t na = dom_size(vs.a), nm = dom_size(vs.b), nc = dom_size(vt.b);
  size_t rtop = dom_top(rd), stop_ = dom_top(sigma.dom), ttop = dom_top(tau.dom);
  ClosureOp r{rd, std::vector<size_t>(dom_size(rd) + 1)};
  r.table[rtop] = rtop;
  for (size_t x = 0; x < na; ++x)
    for (size_t z = 0; z < nc; ++z) {
      size_t y = 0;
      bool diverged = false;
      for (size_t step = 0; step <= nm + 1; ++step) {
        size_t sv = clo_apply(sigma, vs.make(x, y));
        size_t tv = clo_apply(tau, vt.make(y, z));
        if (sv == stop_ || tv == ttop) {
          diverged = true;
          break;
        }
        size_t ym = join_ext(vs.b, vs.split(sv).second, vt.split(tv).first);
        size_t ynext = join_ext(vs.b, y, ym);
        if (ynext == dom_top(vs.b)) {
          diverged = true;
          break;
        }
        if (ynext == y) break;
        y = ynext;
      }
      size_t out;
      if (diverged) {
        out = rtop;
      } else {
        size_t sv = clo_apply(sigma, vs.make(x, y));
        size_t tv = clo_apply(tau, vt.make(y, z));
        out = (sv == stop_ || tv == ttop)
                  ? rtop
                  : prod_make(rd, {vs.split(sv).first, vt.split(tv).second});
      }
      r.table[prod_make(rd, {x, z})] = out;
    }
  return r;
}

ClosureOp smash_closures(const ClosureOp& a, const ClosureOp& b) {
  Dom rd = d_prod({a.dom, b.dom});
  size_t rtop = dom_top(rd);
  ClosureOp r{rd, std::vector<size_t>(dom_size(rd) + 1)};
  r.table[rtop] = rtop;
  for (size_t x = 0; x < dom_size(a.dom); ++x)
    for (size_t y = 0; y < dom_size(b.dom); ++y) {
      size_t ax = clo_apply(a, x), by = clo_apply(b, y);
      r.table[prod_make(rd, {x, y})] = (ax == dom_top(a.dom) || by == dom_top(b.dom))
                                           ? rtop
                                           : prod_make(rd, {ax, by});
    }
  return r;
}

ClosureOp act(const ClosureOp& sigma, const ClosureOp& beta) {
  BinView v(sigma.dom);
  if (!dom_equal(v.b, beta.dom))
    throw std::logic_error("counter-strategy domain mismatch");
  size_t na = dom_size(v.a), nb = dom_size(v.b);
  size_t stop_ = dom_top(sigma.dom), btop = dom_top(v.b), atop = dom_top(v.a);
  ClosureOp r{v.a, std::vector<size_t>(na + 1)};
  r.table[na] = na;
  for (size_t x = 0; x < na; ++x) {
    size_t y = 0;
    size_t out = atop;
    for (size_t step = 0; step <= nb + 1; ++step) {
      size_t sv = clo_apply(sigma, v.make(x, y));
      size_t bv = clo_apply(beta, y);
      if (sv == stop_ || bv == btop) break;
      size_t ynext = join_ext(v.b, y, join_ext(v.b, v.split(sv).second, bv));
      if (ynext == btop) break;
      if (ynext == y) {
        out = v.split(sv).first;
        break;
      }
      y = ynext;
    }
    r.table[x] = out;
  }
  return r;
}

ClosureOp coact(const ClosureOp& alpha, const ClosureOp& sigma) {
  BinView v(sigma.dom);
  if (!dom_equal(v.a, alpha.dom))
    throw std::logic_error("counter-strategy domain mismatch");
  size_t na = dom_size(v.a), nb = dom_size(v.b);
  size_t stop_ = dom_top(sigma.dom), atop = dom_top(v.a), btop = dom_top(v.b);
  ClosureOp r{v.b, std::vector<size_t>(nb + 1)};
  r.table[nb] = nb;
  for (size_t y = 0; y < nb; ++y) {
    size_t x = 0;
    size_t out = btop;
    for (size_t step = 0; step <= na + 1; ++step) {
      size_t sv = clo_apply(sigma, v.make(x, y));
      size_t av = clo_apply(alpha, x);
      if (sv == stop_ || av == atop) break;
      size_t xnext = join_ext(v.a, x, join_ext(v.a, v.split(sv).first, av));
      if (xnext == atop) break;
      if (xnext == x) {
        out = v.split(sv).second;
        break;
      }
      x = xnext;
    }
    r.table[y] = out;
  }
  return r;
}

size_t play_closures(const ClosureOp& sigma, const ClosureOp& tau) {
  if (!dom_equal(sigma.dom, tau.dom))
    throw std::logic_error("play requires strategies on the same domain");
  size_t top = dom_top(sigma.dom);
  size_t x = 0;
  for (size_t step = 0; step <= 2 * dom_size(sigma.dom) + 2; ++step) {
    if (x == top) return top;
    size_t nxt = clo_apply(tau, clo_apply(sigma, x));
    if (nxt == x) return x;
    x = nxt;
  }
  throw std::logic_error("play failed to converge");
}

}  // namespace plab
