// Acceptance gate: one line per criterion, PASS or FAIL with a reason.
// Each criterion recomputes its facts from the library against embedded
// expectations — corpus proofs, reference tables, hand-checked values.

#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "plab/blass_interp.hpp"
#include "plab/cg_interp.hpp"
#include "plab/cgame.hpp"
#include "plab/closure.hpp"
#include "plab/commands.hpp"
#include "plab/cut_elim.hpp"
#include "plab/dom.hpp"
#include "plab/foc.hpp"
#include "plab/goi.hpp"
#include "plab/parse.hpp"
#include "plab/proc.hpp"
#include "plab/proc_sem.hpp"
#include "plab/proof.hpp"
#include "plab/proof_parse.hpp"
#include "plab/stability.hpp"
#include "plab/table1.hpp"

using namespace plab;

#define REQ(cond)                                                     \
  do {                                                                \
    if (!(cond)) throw std::runtime_error("requirement failed: " #cond); \
  } while (0)

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<void()>& body) {
  try {
    body();
    std::printf("ACCEPTANCE %d: %s: PASS\n", n, name.c_str());
  } catch (const std::exception& e) {
    ++failures;
    std::printf("ACCEPTANCE %d: %s: FAIL (%s)\n", n, name.c_str(), e.what());
  }
}

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(PLAB_CORPUS_DIR) + "/" + rel);
  if (!in.good()) throw std::runtime_error("cannot read corpus file " + rel);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MallProof proof(const std::string& rel) { return parse_mall_proof(slurp(rel)); }

// Independent count of the strategy space: a position with no moves ends the
// play; at a live own position the strategy picks exactly one move, and at an
// opponent position it plans independently for every move.
size_t count_strategy_space(const Game& g, Pol owner) {
  Game e = expand(g);
  if (e->children.empty()) return 1;
  if (e->owner == owner) {
    size_t total = 0;
    for (const auto& [m, child] : e->children) total += count_strategy_space(child, owner);
    return total;
  }
  size_t total = 1;
  for (const auto& [m, child] : e->children) total *= count_strategy_space(child, owner);
  return total;
}

}  // namespace

int main() {
  criterion(1, "sequential composition of strategies is not associative", [] {
    MallProof left = proof("cut_assoc_left.llp");
    MallProof right = proof("cut_assoc_right.llp");
    BlassDen dl = interp_proof_blass(left);
    BlassDen dr = interp_proof_blass(right);
    StrategyTree s1 = interp_proof_blass(proof("pi1.llp")).strat;
    StrategyTree s3 = interp_proof_blass(proof("pi3.llp")).strat;
    // Same endsequent, different strategies: one bracketing collapses to the
    // third factor, the other to the first.
    REQ(print_sequent(dl.seq) == print_sequent(dr.seq));
    REQ(!strategy_equal(dl.strat, dr.strat));
    REQ(strategy_equal(dl.strat, s3));
    REQ(strategy_equal(dr.strat, s1));
    // Opposite opening sides: the left bracketing plays first in the second
    // component, the right bracketing in the first.
    REQ(first_move(dl.strat).has_value() && first_move(dr.strat).has_value());
    REQ(print_move(*first_move(dl.strat)) == "R(r)");
    REQ(print_move(*first_move(dr.strat)) == "L(r)");
    REQ((*first_move(dl.strat))->kind == MKind::SideR);
    REQ((*first_move(dr.strat))->kind == MKind::SideL);
    for (const BlassDen* d : {&dl, &dr}) REQ(validate_strategy(d->game, Pol::P, d->strat));
  });

  criterion(2, "the sixteen-row polarity table matches the reference", [] {
    static const char* kExpected[16] = {"O", "theta", "O", "tau", "O", "ambiguous",
                                        "O", "sigma", "O", "O",   "O", "O",
                                        "O", "O",     "O", "O"};
    std::vector<Table1Row> rows = table1_rows();
    REQ(rows.size() == 16);
    size_t ambiguous = 0;
    for (size_t i = 0; i < 16; ++i) {
      if (rows[i].initial_mover != kExpected[i])
        throw std::runtime_error("row " + std::to_string(i) + " says " +
                                 rows[i].initial_mover + ", expected " + kExpected[i]);
      ambiguous += rows[i].initial_mover == "ambiguous";
    }
    REQ(ambiguous == 1);
    REQ(rows[5].initial_mover == "ambiguous");
    REQ(rows[5].pol == (std::array<Pol, 4>{Pol::O, Pol::P, Pol::O, Pol::P}));
  });

  criterion(3, "cut elimination sends each bracketing to its collapsed factor", [] {
    MallProof nf_left = eliminate_cuts(proof("cut_assoc_left.llp"));
    MallProof nf_right = eliminate_cuts(proof("cut_assoc_right.llp"));
    REQ(is_cut_free(nf_left) && is_cut_free(nf_right));
    REQ(proof_equal(nf_left, proof("pi3.llp")));
    REQ(proof_equal(nf_right, proof("pi1.llp")));
  });

  criterion(4, "concurrent composition is associative with the displayed tables", [] {
    ClosureOp c = interpret_proof_cgame(proof("pi1.llp"));
    ClosureOp d = interpret_proof_cgame(proof("pi2.llp"));
    ClosureOp e = interpret_proof_cgame(proof("pi3.llp"));
    ClosureOp cd = compose_closures(c, d);
    ClosureOp l3 = compose_closures(cd, e);
    ClosureOp r3 = compose_closures(c, compose_closures(d, e));
    // Both bracketings agree with each other and with the outer factors.
    REQ(closure_equal(l3, r3));
    REQ(closure_equal(l3, c));
    REQ(closure_equal(r3, e));
    REQ(closure_equal(interpret_proof_cgame(proof("cut_assoc_left.llp")),
                      interpret_proof_cgame(proof("cut_assoc_right.llp"))));
    REQ(closure_equal(interpret_proof_cgame(proof("cut_assoc_left.llp")), c));

    // The displayed values.  Coordinates are lifted sums over the value
    // lattice; in1 is the right injection.
    Dom dom = c.dom;
    Dom sd = dom->parts[0];
    Dom f2 = sd->parts[1];
    const size_t top = dom_top(dom);
    // c(bot, bot) = (in1 bot, in1 bot): both injections fire at once.
    REQ(clo_apply(c, 0) == prod_make(dom, {sum_make(sd, 1, 0), sum_make(sd, 1, 0)}));
    // d(x, bot) = (x, bot): the case split answers and waits.
    for (size_t x = 0; x < dom_size(d.dom->parts[0]); ++x)
      REQ(clo_apply(d, prod_make(d.dom, {x, 0})) == prod_make(d.dom, {x, 0}));
    // (c;d)(bot, bot) = (in1 bot, bot): the composite answers left, waits right.
    REQ(clo_apply(cd, 0) == prod_make(dom, {sum_make(sd, 1, 0), 0}));
    // (c;d)(in0 x, in_j y): a left injection on the first coordinate clashes
    // with the composite's own right injection; otherwise values propagate
    // through the join.
    for (size_t x = 0; x < dom_size(dom); ++x) {
      auto xs = prod_split(dom, x);
      auto t0 = sum_tag(sd, xs[0]);
      auto t1 = sum_tag(sd, xs[1]);
      size_t expect;
      if (t0 && t0->first == 0) {
        expect = top;
      } else {
        size_t u = t0 ? t0->second : 0;
        if (!t1) {
          expect = prod_make(dom, {sum_make(sd, 1, u), 0});
        } else {
          auto j = dom_join(f2, u, t1->second);
          expect = j ? prod_make(dom, {sum_make(sd, 1, *j), sum_make(sd, t1->first, *j)})
                     : top;
        }
      }
      REQ(clo_apply(cd, x) == expect);
    }
  });

  criterion(5, "focussed proofs check and the unfocussed last step is rejected", [] {
    for (const char* f : {"pi1p.llp", "pi2p.llp", "pi3p.llp"}) {
      FocProof p = parse_foc_proof(slurp(f));  // construction runs the checker
      check_foc(p);
    }
    try {
      parse_foc_proof(slurp("bad_last_plusR.llp"));
      throw std::runtime_error("the stoup-violating proof was accepted");
    } catch (const ProofError& e) {
      std::string msg = e.what();
      REQ(msg.find("stoup") != std::string::npos);
      REQ(msg.find("plusSR") != std::string::npos);
    }
  });

  criterion(6, "linking execution agrees with the closure semantics", [] {
    Linking id = linking_of_proof(proof("goi_id.llp"));
    Linking tw = linking_of_proof(proof("goi_twist.llp"));
    REQ(print_linking(id) == "leaves 4; links 0-2 1-3");
    REQ(print_linking(tw) == "leaves 4; links 0-3 1-2");
    // The identity linking reads (a,b,c,d) back as (c,d,a,b); the twist
    // reverses the four cells.
    Dom d = dom_of_sequent(id.endsequent);
    std::vector<size_t> pid = permutation_table(id);
    std::vector<size_t> ptw = permutation_table(tw);
    for (size_t x = 0; x < dom_size(d); ++x) {
      std::vector<size_t> ls = leaf_split(d, x);
      REQ(ls.size() == 4);
      REQ(leaf_split(d, pid[x]) == (std::vector<size_t>{ls[2], ls[3], ls[0], ls[1]}));
      REQ(leaf_split(d, ptw[x]) == (std::vector<size_t>{ls[3], ls[2], ls[1], ls[0]}));
    }
    // Cutting twist against twist and running the cuts yields the identity.
    Linking cut = linking_of_proof(proof("goi_twist_cut_twist.llp"));
    REQ(cut.cuts.size() == 2);
    REQ(linking_equal(execute_linking(cut), id));
    // Lifting each permutation is the same closure the proofs denote.
    REQ(closure_equal(closure_of_linking(id), interpret_proof_cgame(proof("goi_id.llp"))));
    REQ(closure_equal(closure_of_linking(tw), interpret_proof_cgame(proof("goi_twist.llp"))));
    REQ(closure_equal(closure_of_linking(execute_linking(cut)),
                      interpret_proof_cgame(proof("goi_twist_cut_twist.llp"))));
  });

  criterion(7, "stability and sequentiality separate orders from copycat", [] {
    // The twist permutation on its four boolean cells is stable and sequential.
    Linking tw = linking_of_proof(proof("goi_twist.llp"));
    Dom td = dom_of_sequent(tw.endsequent);
    std::vector<size_t> perm = permutation_table(tw);
    REQ(is_stable(td, perm));
    REQ(is_sequential(td, perm));
    // The copycat closure on a pair of boolean cells is neither: either side
    // alone triggers both, yet their meet triggers nothing.
    ClosureOp cc = interpret_proof_cgame(parse_mall_proof("(id ~a)"));
    REQ(!is_stable(cc.dom, cc.table));
    REQ(!is_sequential(cc.dom, cc.table));
    // Parallel-or: fires on either input, no single gating cell — monotone
    // but neither sequential nor stable.
    Dom cell = d_flat({"1"});
    Dom pd = d_prod({cell, cell, cell});
    std::vector<size_t> por;
    for (size_t x = 0; x < dom_size(pd); ++x) {
      std::vector<size_t> xs = leaf_split(pd, x);
      if (xs[0] != 0 || xs[1] != 0) xs[2] = 1;
      por.push_back(leaf_make(pd, xs));
    }
    por.push_back(dom_top(pd));
    REQ(!is_sequential(pd, por));
    REQ(!is_stable(pd, por));
    // Sanity on the separating power: the identity on the same cells passes.
    std::vector<size_t> ident;
    for (size_t x = 0; x < dom_size(pd); ++x) ident.push_back(x);
    ident.push_back(dom_top(pd));
    REQ(is_sequential(pd, ident));
    REQ(is_stable(pd, ident));
  });

  criterion(8, "corpus denotations are closures and interaction is symmetric", [] {
    const char* files[] = {"pi1.llp",           "pi2.llp",
                           "pi3.llp",           "cut_assoc_left.llp",
                           "cut_assoc_right.llp", "goi_id.llp",
                           "goi_twist.llp",     "goi_twist_cut_twist.llp"};
    std::vector<ClosureOp> dens;
    for (const char* f : files) {
      dens.push_back(interpret_proof_cgame(proof(f)));
      if (!is_closure(dens.back()))
        throw std::runtime_error(std::string(f) + " does not denote a closure operator");
    }
    // Enumerated strategy / counter-strategy pairs on the corpus formulas.
    size_t pairs = 0;
    std::set<std::string> seen;
    for (const char* f : files) {
      MallProof pf = proof(f);
      for (const Formula& form : pf->endsequent) {
        if (!seen.insert(print_formula(form)).second) continue;
        std::vector<ClosureOp> sp, so;
        try {
          sp = sp_strategies(form);
          so = so_strategies(form);
        } catch (const std::exception&) {
          continue;  // one side is not directly enumerable for this shape
        }
        for (const ClosureOp& s : sp)
          for (const ClosureOp& t : so) {
            REQ(play_closures(s, t) == play_closures(t, s));
            ++pairs;
          }
      }
    }
    // The sequent-level denotations interact symmetrically too.
    for (size_t i = 0; i < dens.size(); ++i)
      for (size_t j = 0; j < dens.size(); ++j) {
        if (!dom_equal(dens[i].dom, dens[j].dom)) continue;
        REQ(play_closures(dens[i], dens[j]) == play_closures(dens[j], dens[i]));
        ++pairs;
      }
    REQ(pairs > 0 && pairs <= 10000);
  });

  criterion(9, "strategy enumeration is exactly the valid-subtree space", [] {
    std::vector<Game> games = {bool_game(), dualize(bool_game())};
    for (const char* f : {"pi1.llp", "pi2.llp", "pi3.llp"})
      games.push_back(interp_proof_blass(proof(f)).game);
    for (const Game& g : games) {
      if (count_positions(g) > 200) continue;
      for (Pol owner : {Pol::P, Pol::O}) {
        std::vector<StrategyTree> es = enumerate_strategies(g, owner);
        REQ(es.size() == count_strategy_space(g, owner));
        for (const StrategyTree& s : es) REQ(validate_strategy(g, owner, s));
        for (size_t i = 0; i < es.size(); ++i)
          for (size_t j = i + 1; j < es.size(); ++j)
            REQ(!strategy_equal(es[i], es[j]));
      }
    }
    // The proof denotations appear in their own enumerations and win.
    for (const char* f : {"pi1.llp", "pi2.llp", "pi3.llp"}) {
      BlassDen den = interp_proof_blass(proof(f));
      bool found = false;
      for (const StrategyTree& s : enumerate_strategies(den.game, Pol::P))
        found = found || strategy_equal(s, den.strat);
      REQ(found);
      for (const StrategyTree& t : enumerate_strategies(den.game, Pol::O))
        REQ(play(den.game, den.strat, t).loser == Pol::O);
    }
  });

  criterion(10, "process runs equal their denotations on every board", [] {
    const char* files[] = {"copycat1.proc", "copycat2.proc", "clash.proc",
                           "relay.proc",    "fanout.proc",   "rec_relay.proc",
                           "hide_relay.proc"};
    for (const char* f : files) {
      Proc p = parse_proc(slurp(f));
      std::set<std::string> fc = free_cells(p);
      REQ(fc.size() <= 4);
      std::vector<std::string> cells(fc.begin(), fc.end());
      Dom d = board_dom(cells);
      ClosureOp den = denote(p, cells);
      for (size_t x = 0; x < dom_size(d); ++x) {
        Board lhs = run(p, decode_board(d, cells, x));
        Board rhs = decode_board(d, cells, clo_apply(den, x));
        if (!board_equal(lhs, rhs))
          throw std::runtime_error(std::string(f) + " disagrees at board " +
                                   print_board(decode_board(d, cells, x)));
      }
      REQ(board_equal(run(p, board_top()), board_top()));
    }
    // The copycat process denotes the copy-cat closure: join the two cells,
    // top on a clash.
    Proc cc = copycat_process({"1"});
    std::vector<std::string> cells = {"l1", "r1"};
    Dom d = board_dom(cells);
    ClosureOp expected = clo_from_function(d, [&](size_t x) {
      std::vector<size_t> ls = leaf_split(d, x);
      auto j = dom_join(d->parts[0], ls[0], ls[1]);
      if (!j) return dom_top(d);
      return leaf_make(d, {*j, *j});
    });
    REQ(closure_equal(denote(cc, cells), expected));
    // And the clash process maps every board to top.
    Proc clash = parse_proc(slurp("clash.proc"));
    std::vector<std::string> ccells = {"c"};
    Dom cdom = board_dom(ccells);
    ClosureOp cden = denote(clash, ccells);
    for (size_t x = 0; x < dom_size(cdom); ++x) REQ(clo_apply(cden, x) == dom_top(cdom));
  });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
