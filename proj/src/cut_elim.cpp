#include "plab/cut_elim.hpp"

#include <algorithm>

#include "plab/permute.hpp"

namespace plab {

namespace {

// Result of reducing one cut.  `proof` proves some ordering of the cut's
// official conclusion (left premise minus the cut occurrence, then right
// premise minus the dual occurrence); `perm[t]` is the position in
// proof->endsequent holding the occurrence that the official conclusion puts
// at position t.  Exchange is threaded lazily through the reduction and only
// realized as a tree rewrite at the outermost point, because an intermediate
// ordering can be underivable on its own (a context formula cannot cross a
// tensor premise boundary) even though the enclosing rule absorbs the
// reordering into its argument positions.
struct Red {
  MallProof proof;
  std::vector<size_t> perm;
};

// Index of position `v` once position `removed` is deleted (v != removed).
size_t after_removal(size_t v, size_t removed) { return v - (v > removed ? 1 : 0); }

// Original index of the t-th survivor when position `removed` was deleted.
size_t before_removal(size_t t, size_t removed) { return t + (t >= removed ? 1 : 0); }

// The u-th index of 0,1,2,... skipping x and y.
size_t survivor_at(size_t u, size_t x, size_t y) {
  size_t c = 0;
  for (size_t i = 0;; ++i) {
    if (i == x || i == y) continue;
    if (c == u) return i;
    ++c;
  }
}

struct Eliminator {
  size_t steps = 0;
  size_t bound;

  explicit Eliminator(size_t input_size) : bound(10 * input_size) {}

  // Is the last rule of `p` principal for the occurrence at position `i`?
  static bool principal(const MallProof& p, size_t i) {
    switch (p->rule) {
      case MRule::Id: return true;
      case MRule::PlusR:
      case MRule::PlusL:
      case MRule::WithR: return p->args[0] == i;
      case MRule::TensorR: return i + 1 == p->endsequent.size();
      case MRule::ParR: return i == std::min(p->args[0], p->args[1]);
      case MRule::Cut: throw ProofError("cut elimination: premise not cut-free");
    }
    return false;
  }

  static bool commutable(const MallProof& p) {
    switch (p->rule) {
      case MRule::PlusR:
      case MRule::PlusL:
      case MRule::WithR:
      case MRule::ParR: return true;
      default: return false;
    }
  }

  static MallProof materialize(const Red& r) {
    for (size_t t = 0; t < r.perm.size(); ++t) {
      if (r.perm[t] != t) return permute_proof(r.proof, r.perm);
    }
    return r.proof;
  }

  // Apply parR at official positions (k2, l2) of a pending result, keeping
  // the residual ordering pending.
  static Red wrap_par(const Red& inner, size_t k2, size_t l2) {
    size_t pk = inner.perm[k2], pl = inner.perm[l2];
    MallProof q = mk_parR(pk, pl, inner.proof);
    size_t n = inner.perm.size();
    size_t lo = std::min(k2, l2), plo = std::min(pk, pl);
    std::vector<size_t> perm(n - 1);
    for (size_t t = 0; t + 1 < n; ++t) {
      if (t == lo) {
        perm[t] = plo;
        continue;
      }
      size_t u = survivor_at(t - (t > lo ? 1 : 0), k2, l2);
      size_t v = inner.perm[u];
      size_t s = v - (v > pk ? 1 : 0) - (v > pl ? 1 : 0);
      perm[t] = s + (s >= plo ? 1 : 0);
    }
    return {q, std::move(perm)};
  }

  Red reduce(const Formula& a, const MallProof& p1, const MallProof& p2,
             size_t il, size_t ir) {
    if (++steps > bound) {
      throw ProofError("cut elimination exceeded its step bound");
    }

    // Axiom on either side: the other premise survives unchanged; the
    // conclusion ordering it owes is recorded, not applied.
    if (p1->rule == MRule::Id) {
      // Official conclusion: [occurrence at ir] ++ p2 \ ir.
      std::vector<size_t> perm = {ir};
      for (size_t k = 0; k < p2->endsequent.size(); ++k) {
        if (k != ir) perm.push_back(k);
      }
      return {p2, std::move(perm)};
    }
    if (p2->rule == MRule::Id) {
      // Official conclusion: p1 \ il ++ [occurrence at il].
      std::vector<size_t> perm;
      for (size_t k = 0; k < p1->endsequent.size(); ++k) {
        if (k != il) perm.push_back(k);
      }
      perm.push_back(il);
      return {p1, std::move(perm)};
    }

    bool pr1 = principal(p1, il), pr2 = principal(p2, ir);
    if (pr1 && pr2) return principal_step(a, p1, p2, il, ir);
    if (pr1) return commute_right(a, p1, p2, il, ir);
    if (pr2) return commute_left(a, p1, p2, il, ir);
    // Neither principal: the P-rooted occurrence's premise commutes first,
    // falling back to the other side when a tensor context blocks it.
    bool left_first = root_polarity(a) == Pol::P;
    const MallProof& pref = left_first ? p1 : p2;
    if (commutable(pref)) {
      return left_first ? commute_left(a, p1, p2, il, ir) : commute_right(a, p1, p2, il, ir);
    }
    const MallProof& other = left_first ? p2 : p1;
    if (commutable(other)) {
      return left_first ? commute_right(a, p1, p2, il, ir) : commute_left(a, p1, p2, il, ir);
    }
    throw ProofError("cut elimination stuck: both premises end in tensor contexts");
  }

  // Both last rules introduce the cut formula.
  Red principal_step(const Formula& a, const MallProof& p1, const MallProof& p2,
                     size_t il, size_t ir) {
    switch (p1->rule) {
      case MRule::PlusR: {
        // a = a1 + a2, premise proves a2; the with premise for the right
        // component is the second one.  Contexts are untouched, so the
        // sub-cut's official conclusion coincides with this one's.
        const MallProof& q = p1->premises[0];
        const Formula& a2 = q->endsequent[il];
        return reduce(a2, q, p2->premises[1], il, ir);
      }
      case MRule::PlusL: {
        const MallProof& q = p1->premises[0];
        const Formula& a1 = q->endsequent[il];
        return reduce(a1, q, p2->premises[0], il, ir);
      }
      case MRule::WithR: {
        // Dual occurrence is a plus; p2 picked one component.
        const MallProof& q2 = p2->premises[0];
        if (p2->rule == MRule::PlusR) {
          const MallProof& s2 = p1->premises[1];
          return reduce(s2->endsequent[il], s2, q2, il, ir);
        }
        if (p2->rule == MRule::PlusL) {
          const MallProof& s1 = p1->premises[0];
          return reduce(s1->endsequent[il], s1, q2, il, ir);
        }
        throw ProofError("cut elimination: with faces a non-plus rule");
      }
      case MRule::TensorR: {
        // a = a1 * a2 from premises (q1: a1 at i1), (q2: a2 at j1);
        // facing parR whose premise q3 holds ~a1 at k and ~a2 at l.
        if (p2->rule != MRule::ParR) {
          throw ProofError("cut elimination: tensor faces a non-par rule");
        }
        size_t i1 = p1->args[0], j1 = p1->args[1];
        const MallProof &q1 = p1->premises[0], &q2 = p1->premises[1];
        size_t k = p2->args[0], l = p2->args[1];
        const MallProof& q3 = p2->premises[0];
        const Formula& a1 = q1->endsequent[i1];
        const Formula& a2 = q2->endsequent[j1];
        // First cut a2 against q3; ~a1 sits at k_in in its official
        // conclusion (q2 \ j1 ++ q3 \ l), so at in1.perm[k_in] in the tree.
        Red in1 = reduce(a2, q2, q3, j1, l);
        size_t n2 = q2->endsequent.size() - 1;
        size_t k_in = n2 + after_removal(k, l);
        size_t irp = in1.perm[k_in];
        Red out = reduce(a1, q1, in1.proof, i1, irp);
        // Official conclusion: q1 \ i1 ++ (inner official \ k_in); the second
        // cut's official conclusion is q1 \ i1 ++ (in1.proof \ irp), so tail
        // positions route through both pending orderings.
        size_t n1 = q1->endsequent.size() - 1;
        size_t icn = in1.perm.size();
        std::vector<size_t> perm(n1 + icn - 1);
        for (size_t t = 0; t < n1; ++t) perm[t] = out.perm[t];
        for (size_t t = n1; t < perm.size(); ++t) {
          size_t u = before_removal(t - n1, k_in);
          size_t v = in1.perm[u];
          perm[t] = out.perm[n1 + after_removal(v, irp)];
        }
        return {out.proof, std::move(perm)};
      }
      case MRule::ParR: {
        // a = l_comp | r_comp; facing tensorR on ~l * ~r.
        if (p2->rule != MRule::TensorR) {
          throw ProofError("cut elimination: par faces a non-tensor rule");
        }
        size_t k = p1->args[0], l = p1->args[1];
        const MallProof& q0 = p1->premises[0];
        size_t i2 = p2->args[0], j2 = p2->args[1];
        const MallProof &r1 = p2->premises[0], &r2 = p2->premises[1];
        const Formula& lc = q0->endsequent[k];
        const Formula& rc = q0->endsequent[l];
        Red in1 = reduce(lc, q0, r1, k, i2);
        size_t l_in = after_removal(l, k);
        size_t irp = in1.perm[l_in];
        Red out = reduce(rc, in1.proof, r2, irp, j2);
        // Official conclusion: (inner official \ l_in) ++ r2 \ j2; the second
        // cut's official conclusion is (in1.proof \ irp) ++ r2 \ j2.
        size_t icn = in1.perm.size();
        size_t tail = r2->endsequent.size() - 1;
        std::vector<size_t> perm(icn - 1 + tail);
        for (size_t t = 0; t + 1 < icn; ++t) {
          size_t u = before_removal(t, l_in);
          size_t v = in1.perm[u];
          perm[t] = out.perm[after_removal(v, irp)];
        }
        for (size_t t = icn - 1; t < perm.size(); ++t) perm[t] = out.perm[t];
        return {out.proof, std::move(perm)};
      }
      default:
        throw ProofError("cut elimination: unexpected principal rule");
    }
  }

  // Commute the last rule of the left premise below the cut.
  Red commute_left(const Formula& a, const MallProof& p1, const MallProof& p2,
                   size_t il, size_t ir) {
    switch (p1->rule) {
      case MRule::PlusR:
      case MRule::PlusL: {
        size_t m = p1->args[0];
        Red inner = reduce(a, p1->premises[0], p2, il, ir);
        size_t m2 = m > il ? m - 1 : m;
        MallProof q = p1->rule == MRule::PlusR
                          ? mk_plusR(inner.perm[m2], p1->formula, inner.proof)
                          : mk_plusL(inner.perm[m2], p1->formula, inner.proof);
        return {q, inner.perm};
      }
      case MRule::WithR: {
        // Both branches must present the same ordering; realize the official
        // one on each before re-joining them.
        size_t m = p1->args[0];
        MallProof i1 = materialize(reduce(a, p1->premises[0], p2, il, ir));
        MallProof i2 = materialize(reduce(a, p1->premises[1], p2, il, ir));
        size_t m2 = m > il ? m - 1 : m;
        MallProof q = mk_withR(m2, i1, i2);
        std::vector<size_t> perm(q->endsequent.size());
        for (size_t t = 0; t < perm.size(); ++t) perm[t] = t;
        return {q, std::move(perm)};
      }
      case MRule::ParR: {
        size_t k = p1->args[0], l = p1->args[1];
        size_t hi = std::max(k, l);
        size_t il_prem = il >= hi ? il + 1 : il;
        Red inner = reduce(a, p1->premises[0], p2, il_prem, ir);
        size_t k2 = k > il_prem ? k - 1 : k;
        size_t l2 = l > il_prem ? l - 1 : l;
        return wrap_par(inner, k2, l2);
      }
      default:
        throw ProofError("cut elimination: cannot commute past " + mrule_name(p1->rule));
    }
  }

  // Commute the last rule of the right premise below the cut.
  Red commute_right(const Formula& a, const MallProof& p1, const MallProof& p2,
                    size_t il, size_t ir) {
    size_t off = p1->endsequent.size() - 1;
    switch (p2->rule) {
      case MRule::PlusR:
      case MRule::PlusL: {
        size_t m = p2->args[0];
        Red inner = reduce(a, p1, p2->premises[0], il, ir);
        size_t m2 = off + (m > ir ? m - 1 : m);
        MallProof q = p2->rule == MRule::PlusR
                          ? mk_plusR(inner.perm[m2], p2->formula, inner.proof)
                          : mk_plusL(inner.perm[m2], p2->formula, inner.proof);
        return {q, inner.perm};
      }
      case MRule::WithR: {
        size_t m = p2->args[0];
        MallProof i1 = materialize(reduce(a, p1, p2->premises[0], il, ir));
        MallProof i2 = materialize(reduce(a, p1, p2->premises[1], il, ir));
        size_t m2 = off + (m > ir ? m - 1 : m);
        MallProof q = mk_withR(m2, i1, i2);
        std::vector<size_t> perm(q->endsequent.size());
        for (size_t t = 0; t < perm.size(); ++t) perm[t] = t;
        return {q, std::move(perm)};
      }
      case MRule::ParR: {
        size_t k = p2->args[0], l = p2->args[1];
        size_t hi = std::max(k, l);
        size_t ir_prem = ir >= hi ? ir + 1 : ir;
        Red inner = reduce(a, p1, p2->premises[0], il, ir_prem);
        size_t k2 = off + (k > ir_prem ? k - 1 : k);
        size_t l2 = off + (l > ir_prem ? l - 1 : l);
        return wrap_par(inner, k2, l2);
      }
      default:
        throw ProofError("cut elimination: cannot commute past " + mrule_name(p2->rule));
    }
  }

  MallProof elim(const MallProof& p) {
    std::vector<MallProof> prem;
    prem.reserve(p->premises.size());
    for (const auto& q : p->premises) prem.push_back(elim(q));
    switch (p->rule) {
      case MRule::Id: return p;
      case MRule::Cut:
        return materialize(reduce(p->formula, prem[0], prem[1], p->args[0], p->args[1]));
      case MRule::TensorR: return mk_tensorR(p->args[0], p->args[1], prem[0], prem[1]);
      case MRule::ParR: return mk_parR(p->args[0], p->args[1], prem[0]);
      case MRule::PlusR: return mk_plusR(p->args[0], p->formula, prem[0]);
      case MRule::PlusL: return mk_plusL(p->args[0], p->formula, prem[0]);
      case MRule::WithR: return mk_withR(p->args[0], prem[0], prem[1]);
    }
    throw ProofError("cut elimination: bad rule");
  }
};

}  // namespace

MallProof eliminate_cuts(const MallProof& p) {
  Eliminator e(proof_size(p));
  MallProof out = e.elim(p);
  // The conclusion must be preserved verbatim.
  if (out->endsequent.size() != p->endsequent.size()) {
    throw ProofError("cut elimination changed the endsequent length");
  }
  for (size_t k = 0; k < out->endsequent.size(); ++k) {
    if (!formula_equal(out->endsequent[k], p->endsequent[k])) {
      throw ProofError("cut elimination changed the endsequent");
    }
  }
  return out;
}

}  // namespace plab
