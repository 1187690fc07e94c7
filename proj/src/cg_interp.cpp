#include "plab/cg_interp.hpp"

#include <algorithm>
#include <stdexcept>

namespace plab {

namespace {

// Join with the adjoined top as failure value: a failed join diverges.
size_t jtop(const Dom& d, size_t top, size_t x, size_t y) {
  if (x == top || y == top) return top;
  auto j = dom_join(d, x, y);
  return j ? *j : top;
}

std::vector<size_t> erase_at(std::vector<size_t> v, size_t pos) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
  return v;
}

std::vector<size_t> insert_at(std::vector<size_t> v, size_t pos, size_t x) {
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), x);
  return v;
}

std::vector<Dom> factor_doms(const Sequent& s) {
  std::vector<Dom> out;
  out.reserve(s.size());
  for (const Formula& f : s) out.push_back(dom_of_formula(f));
  return out;
}

ClosureOp interp_id(const MallProof& p) {
  Dom cd = dom_of_sequent(p->endsequent);
  Dom df = dom_of_formula(p->endsequent[0]);
  const size_t ftop = dom_top(df);
  const size_t ctop = dom_top(cd);
  return clo_from_function(cd, [&](size_t x) -> size_t {
    auto xs = prod_split(cd, x);
    size_t j = jtop(df, ftop, xs[0], xs[1]);
    if (j == ftop) return ctop;
    return prod_make(cd, {j, j});
  });
}

// PlusR commits to the right component (tag 1), PlusL to the left (tag 0):
// a bottom input at the principal position still gets the injection in the
// output, while an input already in the other component diverges.
ClosureOp interp_plus(const MallProof& p, size_t tag) {
  ClosureOp prem = interpret_proof_cgame(p->premises[0]);
  Dom cd = dom_of_sequent(p->endsequent);
  const size_t i = p->args[0];
  Dom sd = dom_of_formula(p->endsequent[i]);
  const size_t ctop = dom_top(cd);
  const size_t ptop = dom_top(prem.dom);
  return clo_from_function(cd, [&](size_t x) -> size_t {
    auto xs = prod_split(cd, x);
    size_t inner = 0;
    if (xs[i] != 0) {
      auto tg = sum_tag(sd, xs[i]);
      if (tg->first != tag) return ctop;
      inner = tg->second;
    }
    auto ps = xs;
    ps[i] = inner;
    size_t r = clo_apply(prem, prod_make(prem.dom, ps));
    if (r == ptop) return ctop;
    auto rs = prod_split(prem.dom, r);
    rs[i] = sum_make(sd, tag, rs[i]);
    return prod_make(cd, rs);
  });
}

// WithR waits: nothing happens anywhere until the environment commits the
// principal position to one component, then that premise answers.
ClosureOp interp_with(const MallProof& p) {
  ClosureOp prem_l = interpret_proof_cgame(p->premises[0]);
  ClosureOp prem_r = interpret_proof_cgame(p->premises[1]);
  Dom cd = dom_of_sequent(p->endsequent);
  const size_t i = p->args[0];
  Dom sd = dom_of_formula(p->endsequent[i]);
  const size_t ctop = dom_top(cd);
  return clo_from_function(cd, [&](size_t x) -> size_t {
    auto xs = prod_split(cd, x);
    if (xs[i] == 0) return x;
    auto tg = sum_tag(sd, xs[i]);
    const ClosureOp& prem = tg->first == 0 ? prem_l : prem_r;
    auto ps = xs;
    ps[i] = tg->second;
    size_t r = clo_apply(prem, prod_make(prem.dom, ps));
    if (r == dom_top(prem.dom)) return ctop;
    auto rs = prod_split(prem.dom, r);
    rs[i] = sum_make(sd, tg->first, rs[i]);
    return prod_make(cd, rs);
  });
}

// ParR is a pure reindexing: the pair factor at min(i, j) feeds premise
// positions i (left coordinate) and j (right coordinate).
ClosureOp interp_par(const MallProof& p) {
  ClosureOp prem = interpret_proof_cgame(p->premises[0]);
  Dom cd = dom_of_sequent(p->endsequent);
  const size_t i = p->args[0];
  const size_t j = p->args[1];
  const size_t lo = std::min(i, j);
  const size_t n = p->premises[0]->endsequent.size();
  Dom pd = dom_of_formula(p->endsequent[lo]);
  const size_t ctop = dom_top(cd);
  std::vector<size_t> rest;  // premise positions other than i and j, ascending
  for (size_t k = 0; k < n; ++k)
    if (k != i && k != j) rest.push_back(k);
  auto ctx_of = [&](size_t k) { return rest[k < lo ? k : k - 1]; };
  return clo_from_function(cd, [&](size_t x) -> size_t {
    auto xs = prod_split(cd, x);
    auto uv = prod_split(pd, xs[lo]);
    std::vector<size_t> ps(n, 0);
    ps[i] = uv[0];
    ps[j] = uv[1];
    for (size_t k = 0; k + 1 < n; ++k)
      if (k != lo) ps[ctx_of(k)] = xs[k];
    size_t r = clo_apply(prem, prod_make(prem.dom, ps));
    if (r == dom_top(prem.dom)) return ctop;
    auto rs = prod_split(prem.dom, r);
    std::vector<size_t> out(n - 1, 0);
    out[lo] = prod_make(pd, {rs[i], rs[j]});
    for (size_t k = 0; k + 1 < n; ++k)
      if (k != lo) out[k] = rs[ctx_of(k)];
    return prod_make(cd, out);
  });
}

// TensorR runs the premises side by side on disjoint coordinate blocks; the
// tensor factor sits last in the conclusion and splits into the two
// principal coordinates.
ClosureOp interp_tensor(const MallProof& p) {
  ClosureOp prem1 = interpret_proof_cgame(p->premises[0]);
  ClosureOp prem2 = interpret_proof_cgame(p->premises[1]);
  Dom cd = dom_of_sequent(p->endsequent);
  const size_t i = p->args[0];
  const size_t j = p->args[1];
  const size_t n1 = p->premises[0]->endsequent.size();
  const size_t n2 = p->premises[1]->endsequent.size();
  Dom pd = dom_of_formula(p->endsequent.back());
  const size_t ctop = dom_top(cd);
  return clo_from_function(cd, [&](size_t x) -> size_t {
    auto xs = prod_split(cd, x);
    auto uv = prod_split(pd, xs.back());
    std::vector<size_t> g(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(n1 - 1));
    std::vector<size_t> d(xs.begin() + static_cast<std::ptrdiff_t>(n1 - 1), xs.end() - 1);
    size_t r1 = clo_apply(prem1, prod_make(prem1.dom, insert_at(g, i, uv[0])));
    size_t r2 = clo_apply(prem2, prod_make(prem2.dom, insert_at(d, j, uv[1])));
    if (r1 == dom_top(prem1.dom) || r2 == dom_top(prem2.dom)) return ctop;
    auto rs1 = prod_split(prem1.dom, r1);
    auto rs2 = prod_split(prem2.dom, r2);
    std::vector<size_t> out = erase_at(rs1, i);
    for (size_t v : erase_at(rs2, j)) out.push_back(v);
    out.push_back(prod_make(pd, {rs1[i], rs2[j]}));
    return prod_make(cd, out);
  });
}

// Views a premise interpretation as a binary closure separating the cut
// position from the rest of its sequent (bundled into one product factor).
// `middle_first` selects which side of the pair the cut coordinate takes.
ClosureOp curry_at(const ClosureOp& prem, const std::vector<Dom>& factors,
                   size_t pos, const Dom& middle, bool middle_first) {
  std::vector<Dom> rest_doms;
  for (size_t k = 0; k < factors.size(); ++k)
    if (k != pos) rest_doms.push_back(factors[k]);
  Dom bundle = d_prod(rest_doms);
  Dom bd = middle_first ? d_prod({middle, bundle}) : d_prod({bundle, middle});
  const size_t btop = dom_top(bd);
  return clo_from_function(bd, [&, pos, middle_first](size_t x) -> size_t {
    auto xs = prod_split(bd, x);
    size_t m = middle_first ? xs[0] : xs[1];
    size_t b = middle_first ? xs[1] : xs[0];
    size_t r = clo_apply(prem, prod_make(prem.dom, insert_at(prod_split(bundle, b), pos, m)));
    if (r == dom_top(prem.dom)) return btop;
    auto rs = prod_split(prem.dom, r);
    size_t rb = prod_make(bundle, erase_at(rs, pos));
    if (middle_first) return prod_make(bd, {rs[pos], rb});
    return prod_make(bd, {rb, rs[pos]});
  });
}

ClosureOp interp_cut(const MallProof& p) {
  ClosureOp prem1 = interpret_proof_cgame(p->premises[0]);
  ClosureOp prem2 = interpret_proof_cgame(p->premises[1]);
  const size_t il = p->args[0];
  const size_t ir = p->args[1];
  Dom middle = dom_of_formula(p->formula);
  std::vector<Dom> f1 = factor_doms(p->premises[0]->endsequent);
  std::vector<Dom> f2 = factor_doms(p->premises[1]->endsequent);
  ClosureOp bin1 = curry_at(prem1, f1, il, middle, /*middle_first=*/false);
  ClosureOp bin2 = curry_at(prem2, f2, ir, middle, /*middle_first=*/true);
  ClosureOp comp = compose_closures(bin1, bin2);

  Dom b1 = comp.dom->parts[0];
  Dom b2 = comp.dom->parts[1];
  Dom cd = dom_of_sequent(p->endsequent);
  const size_t n1 = b1->parts.size();
  const size_t ctop = dom_top(cd);
  return clo_from_function(cd, [&](size_t x) -> size_t {
    auto xs = prod_split(cd, x);
    std::vector<size_t> v1(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(n1));
    std::vector<size_t> v2(xs.begin() + static_cast<std::ptrdiff_t>(n1), xs.end());
    size_t r = clo_apply(comp, prod_make(comp.dom, {prod_make(b1, v1), prod_make(b2, v2)}));
    if (r == dom_top(comp.dom)) return ctop;
    auto rs = prod_split(comp.dom, r);
    std::vector<size_t> out = prod_split(b1, rs[0]);
    for (size_t v : prod_split(b2, rs[1])) out.push_back(v);
    return prod_make(cd, out);
  });
}

}  // namespace

ClosureOp interpret_proof_cgame(const MallProof& p) {
  switch (p->rule) {
    case MRule::Id:
      return interp_id(p);
    case MRule::PlusR:
      return interp_plus(p, 1);
    case MRule::PlusL:
      return interp_plus(p, 0);
    case MRule::WithR:
      return interp_with(p);
    case MRule::ParR:
      return interp_par(p);
    case MRule::TensorR:
      return interp_tensor(p);
    case MRule::Cut:
      return interp_cut(p);
  }
  throw std::logic_error("interpret_proof_cgame: unreachable");
}

}  // namespace plab
