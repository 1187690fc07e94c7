#include "plab/permute.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace plab {

namespace {

bool is_identity(const std::vector<size_t>& order) {
  for (size_t k = 0; k < order.size(); ++k) {
    if (order[k] != k) return false;
  }
  return true;
}

size_t position_of(const std::vector<size_t>& order, size_t target) {
  for (size_t k = 0; k < order.size(); ++k) {
    if (order[k] == target) return k;
  }
  throw ProofError("permute: order vector is not a permutation");
}

// Positions of a parR premise that survive into its conclusion, in order.
std::vector<size_t> unmerged_positions(size_t premise_len, size_t i, size_t j) {
  std::vector<size_t> out;
  for (size_t x = 0; x < premise_len; ++x) {
    if (x != i && x != j) out.push_back(x);
  }
  return out;
}

}  // namespace

MallProof permute_proof(const MallProof& p, const std::vector<size_t>& order) {
  if (order.size() != p->endsequent.size()) {
    throw ProofError("permute: order length does not match the endsequent");
  }
  if (is_identity(order)) return p;

  switch (p->rule) {
    case MRule::Id: {
      // order must be the swap [1,0].
      return mk_id(negate(p->formula));
    }
    case MRule::PlusR:
    case MRule::PlusL: {
      size_t i = p->args[0];
      MallProof q = permute_proof(p->premises[0], order);
      size_t i2 = position_of(order, i);
      return p->rule == MRule::PlusR ? mk_plusR(i2, p->formula, q)
                                     : mk_plusL(i2, p->formula, q);
    }
    case MRule::WithR: {
      size_t i = p->args[0];
      MallProof q1 = permute_proof(p->premises[0], order);
      MallProof q2 = permute_proof(p->premises[1], order);
      return mk_withR(position_of(order, i), q1, q2);
    }
    case MRule::ParR: {
      size_t i = p->args[0], j = p->args[1];
      size_t lo = std::min(i, j);
      size_t n_prem = p->premises[0]->endsequent.size();
      std::vector<size_t> survivors = unmerged_positions(n_prem, i, j);
      // Conclusion position k (k != lo) holds premise position map[k].
      std::vector<size_t> conc_to_prem(order.size());
      {
        size_t s = 0;
        for (size_t k = 0; k < order.size(); ++k) {
          if (k == lo) continue;
          conc_to_prem[k] = survivors[s++];
        }
      }
      std::vector<size_t> prem_order;
      size_t new_i = 0, new_j = 0;
      for (size_t k = 0; k < order.size(); ++k) {
        if (order[k] == lo) {
          new_i = prem_order.size();
          prem_order.push_back(i);
          new_j = prem_order.size();
          prem_order.push_back(j);
        } else {
          prem_order.push_back(conc_to_prem[order[k]]);
        }
      }
      return mk_parR(new_i, new_j, permute_proof(p->premises[0], prem_order));
    }
    case MRule::TensorR: {
      size_t i = p->args[0], j = p->args[1];
      const MallProof &p1 = p->premises[0], &p2 = p->premises[1];
      size_t n1 = p1->endsequent.size() - 1;  // context sizes
      size_t n2 = p2->endsequent.size() - 1;
      size_t tensor_pos = n1 + n2;
      if (order[tensor_pos] != tensor_pos) {
        throw ProofError("permute: cannot move a tensor formula off the last position");
      }
      std::vector<size_t> ctx1 = unmerged_positions(n1 + 1, i, i);
      std::vector<size_t> ctx2 = unmerged_positions(n2 + 1, j, j);
      auto in_block1 = [&](size_t x) { return x < n1; };
      bool keeps_blocks = true, swaps_blocks = true;
      for (size_t k = 0; k < n1; ++k) keeps_blocks = keeps_blocks && in_block1(order[k]);
      for (size_t k = n1; k < tensor_pos; ++k) keeps_blocks = keeps_blocks && !in_block1(order[k]);
      for (size_t k = 0; k < n2; ++k) swaps_blocks = swaps_blocks && !in_block1(order[k]);
      for (size_t k = n2; k < tensor_pos; ++k) swaps_blocks = swaps_blocks && in_block1(order[k]);
      if (keeps_blocks) {
        // Reorder within each premise, keeping the tensor component last.
        std::vector<size_t> o1, o2;
        for (size_t k = 0; k < n1; ++k) o1.push_back(ctx1[order[k]]);
        o1.push_back(i);
        for (size_t k = n1; k < tensor_pos; ++k) o2.push_back(ctx2[order[k] - n1]);
        o2.push_back(j);
        return mk_tensorR(n1, n2, permute_proof(p1, o1), permute_proof(p2, o2));
      }
      // A context formula cannot cross from one tensor premise to the other:
      // each premise supplies a fixed block of the conclusion, and swapping the
      // premises would also swap the tensor components' wiring.  Even when the
      // components are syntactically equal, that changes which conclusion
      // position each axiom leaf feeds, so it is not a valid exchange.
      throw ProofError("permute: order crosses a tensor context boundary");
    }
    case MRule::Cut:
      throw ProofError("permute: proof must be cut-free");
  }
  throw ProofError("permute: bad rule");
}

namespace {

bool sequent_equal_ordered(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k) {
    if (!formula_equal(a[k], b[k])) return false;
  }
  return true;
}

void add_candidate(std::vector<MallProof>& out, const Sequent& conclusion, MallProof cand) {
  if (cand && sequent_equal_ordered(cand->endsequent, conclusion)) {
    out.push_back(std::move(cand));
  }
}

// After merging positions (i, j) of a premise, where does premise position x
// (x not in {i, j}) land in the conclusion?
size_t merge_map(size_t x, size_t i, size_t j) {
  size_t hi = std::max(i, j);
  return x > hi ? x - 1 : x;
}

// Inverse: conclusion position y (y != min(i,j)) back to the premise.
size_t unmerge_map(size_t y, size_t i, size_t j) {
  size_t hi = std::max(i, j);
  return y >= hi ? y + 1 : y;
}

// All proofs reachable from p by one swap of adjacent negative rules.
std::vector<MallProof> swap_neighbors(const MallProof& p) {
  std::vector<MallProof> out;

  // Swaps inside a premise, lifted through the root rule.
  for (size_t idx = 0; idx < p->premises.size(); ++idx) {
    for (const MallProof& q : swap_neighbors(p->premises[idx])) {
      std::vector<MallProof> prem = p->premises;
      prem[idx] = q;
      try {
        MallProof cand;
        switch (p->rule) {
          case MRule::Id: break;
          case MRule::Cut:
            cand = mk_cut(p->formula, prem[0], prem[1], p->args[0], p->args[1]);
            break;
          case MRule::TensorR: cand = mk_tensorR(p->args[0], p->args[1], prem[0], prem[1]); break;
          case MRule::ParR: cand = mk_parR(p->args[0], p->args[1], prem[0]); break;
          case MRule::PlusR: cand = mk_plusR(p->args[0], p->formula, prem[0]); break;
          case MRule::PlusL: cand = mk_plusL(p->args[0], p->formula, prem[0]); break;
          case MRule::WithR: cand = mk_withR(p->args[0], prem[0], prem[1]); break;
        }
        add_candidate(out, p->endsequent, cand);
      } catch (const ProofError&) {
      }
    }
  }

  // Root-level swaps of two adjacent negative rules.
  try {
    if (p->rule == MRule::WithR) {
      const MallProof &l = p->premises[0], &r = p->premises[1];
      size_t i = p->args[0];
      if (l->rule == MRule::WithR && r->rule == MRule::WithR &&
          l->args[0] == r->args[0] && l->args[0] != i) {
        size_t j = l->args[0];
        add_candidate(out, p->endsequent,
                      mk_withR(j, mk_withR(i, l->premises[0], r->premises[0]),
                               mk_withR(i, l->premises[1], r->premises[1])));
      }
      if (l->rule == MRule::ParR && r->rule == MRule::ParR && l->args == r->args) {
        size_t k = l->args[0], m = l->args[1];
        size_t lo = std::min(k, m);
        if (i != lo) {
          size_t i_prem = unmerge_map(i, k, m);
          add_candidate(out, p->endsequent,
                        mk_parR(k, m, mk_withR(i_prem, l->premises[0], r->premises[0])));
        }
      }
    }
    if (p->rule == MRule::ParR) {
      const MallProof& q = p->premises[0];
      size_t k = p->args[0], m = p->args[1];
      if (q->rule == MRule::WithR && q->args[0] != k && q->args[0] != m) {
        size_t i = q->args[0];
        size_t i_conc = merge_map(i, k, m);
        add_candidate(out, p->endsequent,
                      mk_withR(i_conc, mk_parR(k, m, q->premises[0]),
                               mk_parR(k, m, q->premises[1])));
      }
      if (q->rule == MRule::ParR) {
        size_t k2 = q->args[0], m2 = q->args[1];
        size_t lo2 = std::min(k2, m2);
        if (k != lo2 && m != lo2) {
          // Apply the outer merge first (positions mapped into the inner
          // premise), then the inner one (positions mapped through the
          // new merge).
          size_t kp = unmerge_map(k, k2, m2), mp = unmerge_map(m, k2, m2);
          size_t k2n = merge_map(k2, kp, mp), m2n = merge_map(m2, kp, mp);
          add_candidate(out, p->endsequent,
                        mk_parR(k2n, m2n, mk_parR(kp, mp, q->premises[0])));
        }
      }
    }
  } catch (const ProofError&) {
  }

  return out;
}

}  // namespace

PermEqResult permutation_equal(const MallProof& p, const MallProof& q, size_t budget) {
  PermEqResult res;
  if (!sequent_equal_ordered(p->endsequent, q->endsequent)) return res;
  if (proof_equal(p, q)) {
    res.equal = true;
    return res;
  }
  std::set<std::string> visited;
  std::deque<MallProof> frontier;
  visited.insert(print_proof(p));
  frontier.push_back(p);
  while (!frontier.empty()) {
    if (visited.size() > budget) {
      res.inconclusive = true;
      return res;
    }
    MallProof cur = frontier.front();
    frontier.pop_front();
    for (const MallProof& nb : swap_neighbors(cur)) {
      std::string key = print_proof(nb);
      if (visited.count(key)) continue;
      if (proof_equal(nb, q)) {
        res.equal = true;
        return res;
      }
      visited.insert(key);
      frontier.push_back(nb);
    }
  }
  return res;
}

}  // namespace plab
