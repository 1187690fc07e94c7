#include "plab/dom.hpp"

#include <sstream>
#include <stdexcept>

namespace plab {

namespace {

Dom make(DKind k, std::vector<std::string> values, std::vector<Dom> parts) {
  auto n = std::make_shared<DomNode>();
  n->kind = k;
  n->values = std::move(values);
  n->parts = std::move(parts);
  return n;
}

[[noreturn]] void bad_elem(const Dom& d, size_t x) {
  throw std::out_of_range("element " + std::to_string(x) + " outside domain of size " +
                          std::to_string(dom_size(d)));
}

void check_elem(const Dom& d, size_t x) {
  if (x >= dom_size(d)) bad_elem(d, x);
}

}  // namespace

Dom d_one() { return make(DKind::One, {}, {}); }
Dom d_flat(std::vector<std::string> values) {
  return make(DKind::Flat, std::move(values), {});
}
Dom d_sum(std::vector<Dom> parts) { return make(DKind::LiftedSum, {}, std::move(parts)); }
Dom d_prod(std::vector<Dom> parts) { return make(DKind::Product, {}, std::move(parts)); }

bool dom_equal(const Dom& a, const Dom& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  if (a->values != b->values) return false;
  if (a->parts.size() != b->parts.size()) return false;
  for (size_t i = 0; i < a->parts.size(); ++i)
    if (!dom_equal(a->parts[i], b->parts[i])) return false;
  return true;
}

size_t dom_size(const Dom& d) {
  switch (d->kind) {
    case DKind::One:
      return 1;
    case DKind::Flat:
      return 1 + d->values.size();
    case DKind::LiftedSum: {
      size_t n = 1;
      for (const Dom& p : d->parts) n += dom_size(p);
      return n;
    }
    case DKind::Product: {
      size_t n = 1;
      for (const Dom& p : d->parts) n *= dom_size(p);
      return n;
    }
  }
  return 0;
}

size_t dom_top(const Dom& d) { return dom_size(d); }

std::vector<size_t> prod_split(const Dom& d, size_t x) {
  if (d->kind != DKind::Product) throw std::logic_error("prod_split on non-product");
  check_elem(d, x);
  std::vector<size_t> out(d->parts.size());
  for (size_t i = d->parts.size(); i-- > 0;) {
    size_t s = dom_size(d->parts[i]);
    out[i] = x % s;
    x /= s;
  }
  return out;
}

size_t prod_make(const Dom& d, const std::vector<size_t>& parts) {
  if (d->kind != DKind::Product) throw std::logic_error("prod_make on non-product");
  if (parts.size() != d->parts.size()) throw std::logic_error("prod_make arity mismatch");
  size_t x = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    check_elem(d->parts[i], parts[i]);
    x = x * dom_size(d->parts[i]) + parts[i];
  }
  return x;
}

std::optional<std::pair<size_t, size_t>> sum_tag(const Dom& d, size_t x) {
  if (d->kind != DKind::LiftedSum) throw std::logic_error("sum_tag on non-sum");
  check_elem(d, x);
  if (x == 0) return std::nullopt;
  --x;
  for (size_t tag = 0; tag < d->parts.size(); ++tag) {
    size_t s = dom_size(d->parts[tag]);
    if (x < s) return std::make_pair(tag, x);
    x -= s;
  }
  throw std::logic_error("sum_tag decoding error");
}

size_t sum_make(const Dom& d, size_t tag, size_t inner) {
  if (d->kind != DKind::LiftedSum) throw std::logic_error("sum_make on non-sum");
  if (tag >= d->parts.size()) throw std::out_of_range("sum tag out of range");
  check_elem(d->parts[tag], inner);
  size_t x = 1;
  for (size_t t = 0; t < tag; ++t) x += dom_size(d->parts[t]);
  return x + inner;
}

std::optional<size_t> flat_value(const Dom& d, size_t x) {
  if (d->kind != DKind::Flat) throw std::logic_error("flat_value on non-flat");
  check_elem(d, x);
  if (x == 0) return std::nullopt;
  return x - 1;
}

size_t flat_make(const Dom& d, size_t value_index) {
  if (d->kind != DKind::Flat) throw std::logic_error("flat_make on non-flat");
  if (value_index >= d->values.size()) throw std::out_of_range("flat value out of range");
  return value_index + 1;
}

bool dom_leq(const Dom& d, size_t x, size_t y) {
  check_elem(d, x);
  check_elem(d, y);
  switch (d->kind) {
    case DKind::One:
      return true;
    case DKind::Flat:
      return x == 0 || x == y;
    case DKind::LiftedSum: {
      if (x == 0) return true;
      auto tx = sum_tag(d, x), ty = sum_tag(d, y);
      if (!ty) return false;
      return tx->first == ty->first && dom_leq(d->parts[tx->first], tx->second, ty->second);
    }
    case DKind::Product: {
      auto xs = prod_split(d, x), ys = prod_split(d, y);
      for (size_t i = 0; i < xs.size(); ++i)
        if (!dom_leq(d->parts[i], xs[i], ys[i])) return false;
      return true;
    }
  }
  return false;
}

std::optional<size_t> dom_join(const Dom& d, size_t x, size_t y) {
  check_elem(d, x);
  check_elem(d, y);
  switch (d->kind) {
    case DKind::One:
      return 0;
    case DKind::Flat:
      if (x == 0) return y;
      if (y == 0 || x == y) return x;
      return std::nullopt;
    case DKind::LiftedSum: {
      if (x == 0) return y;
      if (y == 0) return x;
      auto tx = sum_tag(d, x), ty = sum_tag(d, y);
      if (tx->first != ty->first) return std::nullopt;
      auto j = dom_join(d->parts[tx->first], tx->second, ty->second);
      if (!j) return std::nullopt;
      return sum_make(d, tx->first, *j);
    }
    case DKind::Product: {
      auto xs = prod_split(d, x), ys = prod_split(d, y);
      std::vector<size_t> js(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) {
        auto j = dom_join(d->parts[i], xs[i], ys[i]);
        if (!j) return std::nullopt;
        js[i] = *j;
      }
      return prod_make(d, js);
    }
  }
  return std::nullopt;
}

size_t dom_meet(const Dom& d, size_t x, size_t y) {
  check_elem(d, x);
  check_elem(d, y);
  switch (d->kind) {
    case DKind::One:
      return 0;
    case DKind::Flat:
      return x == y ? x : 0;
    case DKind::LiftedSum: {
      if (x == 0 || y == 0) return 0;
      auto tx = sum_tag(d, x), ty = sum_tag(d, y);
      if (tx->first != ty->first) return 0;
      return sum_make(d, tx->first, dom_meet(d->parts[tx->first], tx->second, ty->second));
    }
    case DKind::Product: {
      auto xs = prod_split(d, x), ys = prod_split(d, y);
      std::vector<size_t> ms(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) ms[i] = dom_meet(d->parts[i], xs[i], ys[i]);
      return prod_make(d, ms);
    }
  }
  return 0;
}

std::vector<Dom> flat_leaves(const Dom& d) {
  switch (d->kind) {
    case DKind::One:
      return {};
    case DKind::Flat:
      return {d};
    case DKind::Product: {
      std::vector<Dom> out;
      for (const Dom& p : d->parts) {
        auto sub = flat_leaves(p);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    case DKind::LiftedSum:
      throw std::logic_error("cannot flatten a lifted sum into cells");
  }
  return {};
}

std::vector<size_t> leaf_split(const Dom& d, size_t x) {
  switch (d->kind) {
    case DKind::One:
      return {};
    case DKind::Flat:
      check_elem(d, x);
      return {x};
    case DKind::Product: {
      std::vector<size_t> out;
      auto xs = prod_split(d, x);
      for (size_t i = 0; i < xs.size(); ++i) {
        auto sub = leaf_split(d->parts[i], xs[i]);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    case DKind::LiftedSum:
      throw std::logic_error("cannot flatten a lifted sum into cells");
  }
  return {};
}

namespace {

size_t leaf_make_rec(const Dom& d, const std::vector<size_t>& leaves, size_t& pos) {
  switch (d->kind) {
    case DKind::One:
      return 0;
    case DKind::Flat:
      return leaves.at(pos++);
    case DKind::Product: {
      std::vector<size_t> xs;
      for (const Dom& p : d->parts) xs.push_back(leaf_make_rec(p, leaves, pos));
      return prod_make(d, xs);
    }
    case DKind::LiftedSum:
      throw std::logic_error("cannot flatten a lifted sum into cells");
  }
  return 0;
}

}  // namespace

size_t leaf_make(const Dom& d, const std::vector<size_t>& leaves) {
  size_t pos = 0;
  size_t x = leaf_make_rec(d, leaves, pos);
  if (pos != leaves.size()) throw std::logic_error("leaf_make arity mismatch");
  return x;
}

std::string print_elem(const Dom& d, size_t x) {
  if (x == dom_top(d)) return "TOP";
  check_elem(d, x);
  switch (d->kind) {
    case DKind::One:
      return "bot";
    case DKind::Flat: {
      auto v = flat_value(d, x);
      return v ? d->values[*v] : "bot";
    }
    case DKind::LiftedSum: {
      auto t = sum_tag(d, x);
      if (!t) return "bot";
      return "in" + std::to_string(t->first) + "(" +
             print_elem(d->parts[t->first], t->second) + ")";
    }
    case DKind::Product: {
      auto xs = prod_split(d, x);
      std::ostringstream out;
      out << "(";
      for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ", ";
        out << print_elem(d->parts[i], xs[i]);
      }
      out << ")";
      return out.str();
    }
  }
  return "?";
}

Dom dom_of_formula(const Formula& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::NegAtom:
      return d_flat({"tt", "ff"});
    case FKind::Plus:
    case FKind::With:
      return d_sum({dom_of_formula(f->left), dom_of_formula(f->right)});
    case FKind::Tensor:
    case FKind::Par:
      return d_prod({dom_of_formula(f->left), dom_of_formula(f->right)});
  }
  throw std::logic_error("unreachable formula kind");
}

Dom dom_of_sequent(const Sequent& s) {
  std::vector<Dom> parts;
  for (const Formula& f : s) parts.push_back(dom_of_formula(f));
  return d_prod(std::move(parts));
}

}  // namespace plab
