#include "plab/goi.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "plab/dom.hpp"

namespace plab {

namespace {

size_t leaf_count(const Formula& f) {
  if (f->kind == FKind::Atom || f->kind == FKind::NegAtom) return 1;
  return leaf_count(f->left) + leaf_count(f->right);
}

// Leaf offset of each formula block; one past the end holds the total.
std::vector<size_t> block_offsets(const Sequent& s) {
  std::vector<size_t> off = {0};
  for (const Formula& f : s) off.push_back(off.back() + leaf_count(f));
  return off;
}

std::pair<size_t, size_t> norm_pair(size_t a, size_t b) {
  return {std::min(a, b), std::max(a, b)};
}

void sort_pairs(std::vector<std::pair<size_t, size_t>>& v) {
  for (auto& p : v) p = norm_pair(p.first, p.second);
  std::sort(v.begin(), v.end());
}

// Remaps every leaf index in l through `map` (indexed over l's leaves).
Linking remap(const Linking& l, const std::vector<size_t>& map, size_t n_external,
              size_t n_total, Sequent endsequent) {
  Linking out;
  out.n_external = n_external;
  out.n_total = n_total;
  out.endsequent = std::move(endsequent);
  for (auto [a, b] : l.links) out.links.emplace_back(map[a], map[b]);
  for (auto [a, b] : l.cuts) out.cuts.emplace_back(map[a], map[b]);
  return out;
}

Linking merge(Linking a, const Linking& b) {
  a.links.insert(a.links.end(), b.links.begin(), b.links.end());
  a.cuts.insert(a.cuts.end(), b.cuts.begin(), b.cuts.end());
  return a;
}

// Partner arrays with full validation: every leaf on exactly one link,
// every internal leaf on exactly one cut, no leaf linked or cut to itself.
struct Partners {
  std::vector<size_t> link;
  std::vector<std::optional<size_t>> cut;
};

Partners partners_of(const Linking& l) {
  std::vector<std::optional<size_t>> link(l.n_total);
  std::vector<std::optional<size_t>> cut(l.n_total);
  auto set = [&](std::vector<std::optional<size_t>>& tab, size_t a, size_t b,
                 const char* what) {
    if (a >= l.n_total || b >= l.n_total || a == b)
      throw std::logic_error(std::string("linking: bad ") + what + " pair");
    if (tab[a] || tab[b])
      throw std::logic_error(std::string("linking: leaf on two ") + what + "s");
    tab[a] = b;
    tab[b] = a;
  };
  for (auto [a, b] : l.links) set(link, a, b, "link");
  for (auto [a, b] : l.cuts) {
    if (a < l.n_external || b < l.n_external)
      throw std::logic_error("linking: cut pair touches an external leaf");
    set(cut, a, b, "cut");
  }
  Partners out;
  out.link.resize(l.n_total);
  out.cut.resize(l.n_total);
  for (size_t t = 0; t < l.n_total; ++t) {
    if (!link[t]) throw std::logic_error("linking: leaf off every link");
    out.link[t] = *link[t];
    if (t >= l.n_external && !cut[t])
      throw std::logic_error("linking: internal leaf off every cut");
    out.cut[t] = cut[t];
  }
  return out;
}

}  // namespace

Linking linking_of_proof(const MallProof& p) {
  switch (p->rule) {
    case MRule::Id: {
      size_t nf = leaf_count(p->endsequent[0]);
      Linking out;
      out.n_external = out.n_total = 2 * nf;
      out.endsequent = p->endsequent;
      for (size_t t = 0; t < nf; ++t) out.links.emplace_back(t, nf + t);
      return out;
    }
    case MRule::ParR: {
      Linking prem = linking_of_proof(p->premises[0]);
      const Sequent& ps = p->premises[0]->endsequent;
      const size_t i = p->args[0];
      const size_t j = p->args[1];
      const size_t lo = std::min(i, j);
      auto off = block_offsets(ps);
      const size_t next = off.back();
      // Conclusion blocks as premise positions: the context in order with
      // the pair (i then j) standing where the par formula sits.
      std::vector<size_t> rest;
      for (size_t k = 0; k < ps.size(); ++k)
        if (k != i && k != j) rest.push_back(k);
      std::vector<size_t> order;
      for (size_t c = 0; c + 1 < ps.size(); ++c) {
        if (c == lo) {
          order.push_back(i);
          order.push_back(j);
        } else {
          order.push_back(rest[c < lo ? c : c - 1]);
        }
      }
      std::vector<size_t> map(prem.n_total);
      size_t at = 0;
      for (size_t b : order)
        for (size_t o = 0; o < leaf_count(ps[b]); ++o) map[off[b] + o] = at++;
      for (size_t t = next; t < prem.n_total; ++t) map[t] = t;
      return remap(prem, map, next, prem.n_total, p->endsequent);
    }
    case MRule::TensorR: {
      Linking p1 = linking_of_proof(p->premises[0]);
      Linking p2 = linking_of_proof(p->premises[1]);
      const Sequent& s1 = p->premises[0]->endsequent;
      const Sequent& s2 = p->premises[1]->endsequent;
      const size_t i = p->args[0];
      const size_t j = p->args[1];
      auto off1 = block_offsets(s1);
      auto off2 = block_offsets(s2);
      const size_t n1 = off1.back();
      const size_t n2 = off2.back();
      const size_t next = n1 + n2;
      std::vector<size_t> map1(p1.n_total), map2(p2.n_total);
      size_t at = 0;
      for (size_t k = 0; k < s1.size(); ++k)
        if (k != i)
          for (size_t o = 0; o < leaf_count(s1[k]); ++o) map1[off1[k] + o] = at++;
      for (size_t k = 0; k < s2.size(); ++k)
        if (k != j)
          for (size_t o = 0; o < leaf_count(s2[k]); ++o) map2[off2[k] + o] = at++;
      for (size_t o = 0; o < leaf_count(s1[i]); ++o) map1[off1[i] + o] = at++;
      for (size_t o = 0; o < leaf_count(s2[j]); ++o) map2[off2[j] + o] = at++;
      const size_t i1 = p1.n_total - n1;
      for (size_t t = n1; t < p1.n_total; ++t) map1[t] = next + (t - n1);
      for (size_t t = n2; t < p2.n_total; ++t) map2[t] = next + i1 + (t - n2);
      Linking out = merge(remap(p1, map1, next, next + i1 + (p2.n_total - n2), p->endsequent),
                          remap(p2, map2, 0, 0, {}));
      return out;
    }
    case MRule::Cut: {
      Linking p1 = linking_of_proof(p->premises[0]);
      Linking p2 = linking_of_proof(p->premises[1]);
      const Sequent& s1 = p->premises[0]->endsequent;
      const Sequent& s2 = p->premises[1]->endsequent;
      const size_t il = p->args[0];
      const size_t ir = p->args[1];
      auto off1 = block_offsets(s1);
      auto off2 = block_offsets(s2);
      const size_t n1 = off1.back();
      const size_t n2 = off2.back();
      const size_t la = leaf_count(s1[il]);
      const size_t next = (n1 - la) + (n2 - la);
      const size_t i1 = p1.n_total - n1;
      const size_t i2 = p2.n_total - n2;
      std::vector<size_t> map1(p1.n_total), map2(p2.n_total);
      size_t at = 0;
      for (size_t k = 0; k < s1.size(); ++k)
        if (k != il)
          for (size_t o = 0; o < leaf_count(s1[k]); ++o) map1[off1[k] + o] = at++;
      for (size_t k = 0; k < s2.size(); ++k)
        if (k != ir)
          for (size_t o = 0; o < leaf_count(s2[k]); ++o) map2[off2[k] + o] = at++;
      // Internal layout: the cut formula's leaves, then the left premise's
      // old internals, then the dual's leaves, then the right's internals.
      const size_t a_base = next;
      for (size_t o = 0; o < la; ++o) map1[off1[il] + o] = a_base + o;
      for (size_t t = n1; t < p1.n_total; ++t) map1[t] = a_base + la + (t - n1);
      const size_t na_base = a_base + la + i1;
      for (size_t o = 0; o < la; ++o) map2[off2[ir] + o] = na_base + o;
      for (size_t t = n2; t < p2.n_total; ++t) map2[t] = na_base + la + (t - n2);
      Linking out = merge(remap(p1, map1, next, na_base + la + i2, p->endsequent),
                          remap(p2, map2, 0, 0, {}));
      // Dualizing preserves the leaf order, so the cut pairs positionally.
      for (size_t o = 0; o < la; ++o) out.cuts.emplace_back(a_base + o, na_base + o);
      return out;
    }
    case MRule::PlusR:
    case MRule::PlusL:
    case MRule::WithR:
      throw std::runtime_error(
          "linking_of_proof: additive rules have no axiom linking; only id, "
          "parR, tensorR and cut are supported");
  }
  throw std::logic_error("linking_of_proof: unreachable");
}

Linking execute_linking(const Linking& l) {
  Partners ps = partners_of(l);
  std::vector<size_t> partner(l.n_external);
  for (size_t x = 0; x < l.n_external; ++x) {
    size_t cur = ps.link[x];
    size_t steps = 0;
    while (cur >= l.n_external) {
      cur = ps.link[*ps.cut[cur]];
      if (++steps > l.n_total)
        throw std::logic_error("execute_linking: cut chase does not terminate");
    }
    partner[x] = cur;
  }
  for (size_t x = 0; x < l.n_external; ++x)
    if (partner[x] == x || partner[partner[x]] != x)
      throw std::logic_error("execute_linking: result is not an involution");
  Linking out;
  out.n_external = out.n_total = l.n_external;
  out.endsequent = l.endsequent;
  for (size_t x = 0; x < l.n_external; ++x)
    if (x < partner[x]) out.links.emplace_back(x, partner[x]);
  return out;
}

bool linking_equal(const Linking& a, const Linking& b) {
  if (a.n_external != b.n_external || a.n_total != b.n_total) return false;
  if (print_sequent(a.endsequent) != print_sequent(b.endsequent)) return false;
  auto la = a.links, lb = b.links;
  auto ca = a.cuts, cb = b.cuts;
  sort_pairs(la);
  sort_pairs(lb);
  sort_pairs(ca);
  sort_pairs(cb);
  return la == lb && ca == cb;
}

std::string print_linking(const Linking& l) {
  std::ostringstream out;
  out << "leaves " << l.n_external;
  if (l.n_total > l.n_external) out << " + " << (l.n_total - l.n_external) << " internal";
  auto links = l.links;
  sort_pairs(links);
  out << "; links";
  for (auto [a, b] : links) out << " " << a << "-" << b;
  if (!l.cuts.empty()) {
    auto cuts = l.cuts;
    sort_pairs(cuts);
    out << "; cuts";
    for (auto [a, b] : cuts) out << " " << a << "-" << b;
  }
  return out.str();
}

std::vector<size_t> permutation_table(const Linking& l) {
  if (l.n_total != l.n_external || !l.cuts.empty())
    throw std::invalid_argument(
        "permutation_table: linking still has cuts; execute it first");
  Partners ps = partners_of(l);
  Dom d = dom_of_sequent(l.endsequent);
  auto cells = flat_leaves(d);
  if (cells.size() != l.n_external)
    throw std::invalid_argument("permutation_table: leaf count mismatch");
  std::vector<size_t> table;
  table.reserve(dom_size(d) + 1);
  for (size_t x = 0; x < dom_size(d); ++x) {
    auto xs = leaf_split(d, x);
    std::vector<size_t> out(xs.size());
    for (size_t c = 0; c < xs.size(); ++c) out[c] = xs[ps.link[c]];
    table.push_back(leaf_make(d, out));
  }
  table.push_back(dom_top(d));
  return table;
}

ClosureOp closure_of_linking(const Linking& l) {
  Dom d = dom_of_sequent(l.endsequent);
  return lift_function(d, permutation_table(l));
}

}  // namespace plab
