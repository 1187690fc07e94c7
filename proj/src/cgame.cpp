#include "plab/cgame.hpp"

#include <stdexcept>

namespace plab {

namespace {

// Forcer on a flat domain: bottom and the chosen value map to the value,
// any other value diverges.
ClosureOp value_forcer(const Dom& d, size_t value_index) {
  const size_t top = dom_top(d);
  const size_t v = flat_make(d, value_index);
  return clo_from_function(d, [&d, v, top](size_t x) -> size_t {
    if (x == 0 || x == v) return v;
    (void)d;
    return top;
  });
}

// Plays the injection `tag` immediately and alpha inside it; an input that
// already sits in the other component diverges.
ClosureOp injection_lift(const Dom& d, size_t tag, const ClosureOp& alpha) {
  const size_t top = dom_top(d);
  const size_t atop = dom_top(alpha.dom);
  return clo_from_function(d, [&](size_t x) -> size_t {
    size_t inner = 0;
    if (x != 0) {
      auto t = sum_tag(d, x);
      if (t->first != tag) return top;
      inner = t->second;
    }
    size_t a = clo_apply(alpha, inner);
    if (a == atop) return top;
    return sum_make(d, tag, a);
  });
}

// Waits for the input to pick a component, then answers with that
// component's strategy; bottom stays bottom.
ClosureOp tupling(const Dom& d, const std::vector<ClosureOp>& alphas) {
  const size_t top = dom_top(d);
  return clo_from_function(d, [&](size_t x) -> size_t {
    if (x == 0) return 0;
    auto t = sum_tag(d, x);
    const ClosureOp& a = alphas.at(t->first);
    size_t r = clo_apply(a, t->second);
    if (r == dom_top(a.dom)) return top;
    return sum_make(d, t->first, r);
  });
}

std::vector<ClosureOp> injection_family(const Dom& d,
                                        const std::vector<ClosureOp>& ls,
                                        const std::vector<ClosureOp>& rs) {
  std::vector<ClosureOp> out;
  for (const ClosureOp& a : ls) out.push_back(injection_lift(d, 0, a));
  for (const ClosureOp& a : rs) out.push_back(injection_lift(d, 1, a));
  return out;
}

std::vector<ClosureOp> tupling_family(const Dom& d,
                                      const std::vector<ClosureOp>& ls,
                                      const std::vector<ClosureOp>& rs) {
  std::vector<ClosureOp> out;
  for (const ClosureOp& a : ls)
    for (const ClosureOp& b : rs) out.push_back(tupling(d, {a, b}));
  return out;
}

std::vector<ClosureOp> smash_family(const std::vector<ClosureOp>& ls,
                                    const std::vector<ClosureOp>& rs) {
  std::vector<ClosureOp> out;
  for (const ClosureOp& a : ls)
    for (const ClosureOp& b : rs) out.push_back(smash_closures(a, b));
  return out;
}

}  // namespace

std::vector<ClosureOp> sp_strategies(const Formula& f) {
  Dom d = dom_of_formula(f);
  switch (f->kind) {
    case FKind::Atom: {
      std::vector<ClosureOp> out;
      for (size_t v = 0; v < d->values.size(); ++v)
        out.push_back(value_forcer(d, v));
      return out;
    }
    case FKind::NegAtom:
      return {clo_identity(d)};
    case FKind::Plus:
      return injection_family(d, sp_strategies(f->left), sp_strategies(f->right));
    case FKind::With:
      return tupling_family(d, sp_strategies(f->left), sp_strategies(f->right));
    case FKind::Tensor:
      return smash_family(sp_strategies(f->left), sp_strategies(f->right));
    case FKind::Par:
      throw std::runtime_error(
          "sp_strategies: the proponent side of a par is characterized by "
          "member_so_tensor on the dual tensor, not enumerated");
  }
  throw std::logic_error("sp_strategies: unreachable");
}

std::vector<ClosureOp> so_strategies(const Formula& f) {
  Dom d = dom_of_formula(f);
  switch (f->kind) {
    case FKind::Atom:
      return {clo_identity(d)};
    case FKind::NegAtom: {
      std::vector<ClosureOp> out;
      for (size_t v = 0; v < d->values.size(); ++v)
        out.push_back(value_forcer(d, v));
      return out;
    }
    case FKind::Plus:
      return tupling_family(d, so_strategies(f->left), so_strategies(f->right));
    case FKind::With:
      return injection_family(d, so_strategies(f->left), so_strategies(f->right));
    case FKind::Par:
      return smash_family(so_strategies(f->left), so_strategies(f->right));
    case FKind::Tensor:
      throw std::runtime_error(
          "so_strategies: the opponent side of a tensor is characterized by "
          "member_so_tensor, not enumerated");
  }
  throw std::logic_error("so_strategies: unreachable");
}

bool member_so_tensor(const Formula& tensor, const ClosureOp& s) {
  if (tensor->kind != FKind::Tensor)
    throw std::invalid_argument("member_so_tensor: tensor formula expected");
  Dom d = dom_of_formula(tensor);
  if (!dom_equal(s.dom, d))
    throw std::invalid_argument(
        "member_so_tensor: candidate lives on the wrong domain");
  if (!is_closure(s)) return false;

  auto within = [](const ClosureOp& c, const std::vector<ClosureOp>& family) {
    for (const ClosureOp& m : family)
      if (closure_equal(c, m)) return true;
    return false;
  };

  std::vector<ClosureOp> spl = sp_strategies(tensor->left);
  std::vector<ClosureOp> spr = sp_strategies(tensor->right);
  std::vector<ClosureOp> sol = so_strategies(tensor->left);
  std::vector<ClosureOp> sor = so_strategies(tensor->right);
  for (const ClosureOp& alpha : spl)
    if (!within(coact(alpha, s), sor)) return false;
  for (const ClosureOp& beta : spr)
    if (!within(act(s, beta), sol)) return false;
  return true;
}

}  // namespace plab
