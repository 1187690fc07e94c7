// Axiom linkings of multiplicative proofs, their execution through cuts,
// and the stability / sequentiality split between permutation behaviours
// and genuinely concurrent closures.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "plab/cg_interp.hpp"
#include "plab/cut_elim.hpp"
#include "plab/dom.hpp"
#include "plab/goi.hpp"
#include "plab/parse.hpp"
#include "plab/proof_parse.hpp"
#include "plab/stability.hpp"

using namespace plab;

static std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(PLAB_CORPUS_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static MallProof corpus(const std::string& rel) { return parse_mall_proof(slurp(rel)); }

static bool has_link(const Linking& l, size_t a, size_t b) {
  for (auto [x, y] : l.links)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

TEST_CASE("linkings of the straight and twisted par proofs") {
  Linking id = linking_of_proof(corpus("goi_id.llp"));
  CHECK(id.n_external == 4);
  CHECK(id.n_total == 4);
  CHECK(id.cuts.empty());
  CHECK(id.links.size() == 2);
  CHECK(has_link(id, 0, 2));
  CHECK(has_link(id, 1, 3));
  CHECK(print_linking(id) == "leaves 4; links 0-2 1-3");

  Linking tw = linking_of_proof(corpus("goi_twist.llp"));
  CHECK(tw.n_external == 4);
  CHECK(has_link(tw, 0, 3));
  CHECK(has_link(tw, 1, 2));
  CHECK(print_linking(tw) == "leaves 4; links 0-3 1-2");

  CHECK_FALSE(linking_equal(id, tw));
  // Executing a cut-free linking changes nothing.
  CHECK(linking_equal(execute_linking(id), id));
  CHECK(linking_equal(execute_linking(tw), tw));

  // Additive proofs have no linking.
  CHECK_THROWS_AS((void)linking_of_proof(corpus("pi1.llp")), std::runtime_error);
}

TEST_CASE("cutting twist against twist and executing yields the straight linking") {
  Linking cut = linking_of_proof(corpus("goi_twist_cut_twist.llp"));
  CHECK(cut.n_external == 4);
  CHECK(cut.n_total == 8);
  CHECK(cut.cuts.size() == 2);
  CHECK(cut.links.size() == 4);
  CHECK(print_linking(cut) == "leaves 4 + 4 internal; links 0-5 1-4 2-7 3-6; cuts 4-6 5-7");

  Linking run = execute_linking(cut);
  Linking id = linking_of_proof(corpus("goi_id.llp"));
  CHECK(linking_equal(run, id));

  // Cut elimination on the proof commutes with execution on the linking.
  MallProof reduced = eliminate_cuts(corpus("goi_twist_cut_twist.llp"));
  CHECK(linking_equal(linking_of_proof(reduced), id));

  // A linking still carrying cuts has no permutation table yet.
  CHECK_THROWS_AS((void)permutation_table(cut), std::invalid_argument);
}

TEST_CASE("the closure of a linking is the concurrent meaning of its proof") {
  for (const char* name : {"goi_id.llp", "goi_twist.llp"}) {
    MallProof p = corpus(name);
    ClosureOp from_linking = closure_of_linking(linking_of_proof(p));
    ClosureOp from_proof = interpret_proof_cgame(p);
    CHECK(closure_equal(from_linking, from_proof));
    CHECK(is_closure(from_linking));
  }

  // Spot values.  Cells in sequent order: the two par leaves, then the two
  // tensor leaves; tt fed into one cell is copied to its partner.
  Linking idl = linking_of_proof(corpus("goi_id.llp"));
  ClosureOp idc = closure_of_linking(idl);
  Dom d = idc.dom;
  auto at = [&](size_t a, size_t b, size_t c, size_t e) {
    return leaf_make(d, {a, b, c, e});
  };
  size_t tt = 1, ff = 2;
  CHECK(clo_apply(idc, at(tt, 0, 0, 0)) == at(tt, 0, tt, 0));
  CHECK(clo_apply(idc, at(0, ff, 0, 0)) == at(0, ff, 0, ff));
  CHECK(clo_apply(idc, at(tt, 0, ff, 0)) == dom_top(d));  // clashing partners

  Linking twl = linking_of_proof(corpus("goi_twist.llp"));
  ClosureOp twc = closure_of_linking(twl);
  CHECK(clo_apply(twc, at(tt, 0, 0, 0)) == at(tt, 0, 0, tt));
  CHECK(clo_apply(twc, at(0, ff, tt, 0)) == dom_top(d));  // 1 and 2 clash
  CHECK(clo_apply(twc, at(0, ff, ff, 0)) == at(0, ff, ff, 0));
}

TEST_CASE("permutations are stable and sequential; copycat closures are neither") {
  Linking twl = linking_of_proof(corpus("goi_twist.llp"));
  Dom d = dom_of_sequent(twl.endsequent);
  auto perm = permutation_table(twl);
  CHECK(is_stable(d, perm));
  CHECK(is_sequential(d, perm));

  // The copycat closure on one axiom violates stability: feeding tt on
  // either side alone already forces (tt, tt), but the meet of those two
  // inputs is bottom, which copycat leaves alone.
  ClosureOp cc = interpret_proof_cgame(parse_mall_proof("(id ~a)"));
  CHECK_FALSE(is_stable(cc.dom, cc.table));
  Dom cd = cc.dom;
  size_t x = leaf_make(cd, {1, 0});
  size_t y = leaf_make(cd, {0, 1});
  REQUIRE(dom_join(cd, x, y).has_value());
  size_t meet_in = dom_meet(cd, x, y);
  size_t meet_out = dom_meet(cd, clo_apply(cc, x), clo_apply(cc, y));
  CHECK(clo_apply(cc, meet_in) == 0);
  CHECK(meet_out == leaf_make(cd, {1, 1}));
  CHECK(clo_apply(cc, meet_in) != meet_out);
  // And it answers a cell as soon as either input cell is filled, with no
  // single cell gating it: not sequential either.
  CHECK_FALSE(is_sequential(cc.dom, cc.table));

  // The identity-linking closure is the same shape on four cells.
  ClosureOp idc = closure_of_linking(linking_of_proof(corpus("goi_id.llp")));
  CHECK_FALSE(is_stable(idc.dom, idc.table));
}

TEST_CASE("parallel-or is the classic non-sequential monotone function") {
  Dom cell = d_flat({"1"});
  Dom d = d_prod({cell, cell, cell});
  std::vector<size_t> table;
  for (size_t x = 0; x < dom_size(d); ++x) {
    auto xs = leaf_split(d, x);
    if (xs[0] != 0 || xs[1] != 0) xs[2] = 1;
    table.push_back(leaf_make(d, xs));
  }
  table.push_back(dom_top(d));
  CHECK_FALSE(is_sequential(d, table));
  // Its two triggers are compatible yet their meet triggers nothing, so it
  // is not stable either.
  CHECK_FALSE(is_stable(d, table));

  // Constants and projections are sequential.
  std::vector<size_t> konst(dom_size(d) + 1, leaf_make(d, {1, 0, 0}));
  konst.back() = dom_top(d);
  CHECK(is_sequential(d, konst));
  std::vector<size_t> ident;
  for (size_t x = 0; x < dom_size(d); ++x) ident.push_back(x);
  ident.push_back(dom_top(d));
  CHECK(is_sequential(d, ident));
  CHECK(is_stable(d, ident));
}

TEST_CASE("malformed tables are rejected up front") {
  Dom f2 = d_flat({"tt", "ff"});
  Dom d = d_prod({f2, f2});
  std::vector<size_t> ident;
  for (size_t x = 0; x < dom_size(d); ++x) ident.push_back(x);
  // Missing the top slot.
  CHECK_THROWS_AS((void)is_stable(d, ident), std::invalid_argument);
  ident.push_back(0);  // top slot not fixed
  CHECK_THROWS_AS((void)is_sequential(d, ident), std::invalid_argument);
  ident.back() = dom_top(d);
  CHECK(is_stable(d, ident));

  // Non-monotone: bottom jumps to (tt, tt) but larger inputs fall back.
  std::vector<size_t> bad = ident;
  bad[0] = leaf_make(d, {1, 1});
  bad[leaf_make(d, {1, 0})] = leaf_make(d, {1, 0});
  CHECK_THROWS_AS((void)is_stable(d, bad), std::invalid_argument);
  CHECK_THROWS_AS((void)is_sequential(d, bad), std::invalid_argument);
}
