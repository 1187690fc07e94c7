#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "plab/cut_elim.hpp"
#include "plab/permute.hpp"
#include "plab/proof_parse.hpp"

using namespace plab;

static std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(PLAB_CORPUS_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static MallProof corpus(const std::string& rel) { return parse_mall_proof(slurp(rel)); }

TEST_CASE("permute_proof pushes a reordering through every rule") {
  MallProof p1 = corpus("pi1.llp");
  MallProof flipped = permute_proof(p1, {1, 0});
  CHECK(print_sequent(flipped->endsequent) == "|- (a + a), (~a + ~a)");
  check_mall(flipped);
  CHECK(proof_equal(permute_proof(flipped, {1, 0}), p1));

  // Tensor conclusions keep the tensor formula in the last position, so a
  // reordering that would move it is rejected rather than silently mangled.
  MallProof g = corpus("goi_id.llp");
  CHECK_THROWS_AS(permute_proof(g, {1, 0}), ProofError);

  // Crossing a tensor context boundary is rejected even when the components
  // are syntactically equal: swapping the premises would also swap which
  // conclusion position each tensor component's axiom leaves feed.
  MallProof t = mk_tensorR(1, 1, mk_id(f_natom("a")), mk_id(f_natom("a")));
  CHECK_THROWS_AS(permute_proof(t, {1, 0, 2}), ProofError);

  MallProof tb = mk_tensorR(1, 1, mk_id(f_natom("a")), mk_id(f_natom("b")));
  CHECK_THROWS_AS(permute_proof(tb, {1, 0, 2}), ProofError);
  CHECK_THROWS_AS(permute_proof(tb, {2, 0, 1}), ProofError);
}

TEST_CASE("axiom cuts drop out, repositioning the survivor") {
  // Cutting an axiom against an unrelated proof leaves that proof.
  MallProof direct = parse_mall_proof("(cut a (id a) (plusR 2 (id ~a)))");
  CHECK(proof_equal(eliminate_cuts(direct), corpus("pi1.llp")->premises[0]));

  // Here the dual occurrence sits at position 2, so the survivor reorders.
  MallProof moved = parse_mall_proof("(cut a (id a) (plusR 1 (id a)))");
  MallProof r = eliminate_cuts(moved);
  check_mall(r);
  CHECK(print_sequent(r->endsequent) == "|- ~a, (a + a)");
  CHECK(proof_equal(r, parse_mall_proof("(plusR 2 (id ~a))")));
}

TEST_CASE("a principal plus/with cut steps to the chosen component") {
  MallProof p = parse_mall_proof(
      "(cut (a + a) (plusR 2 (id ~a)) (withR 1 (id ~a) (id ~a)))");
  CHECK(print_sequent(p->endsequent) == "|- ~a, a");
  MallProof r = eliminate_cuts(p);
  CHECK(proof_equal(r, parse_mall_proof("(id ~a)")));
}

TEST_CASE("the bracketed double cuts normalize to the two one-sided proofs") {
  MallProof left = eliminate_cuts(corpus("cut_assoc_left.llp"));
  CHECK(is_cut_free(left));
  CHECK(proof_equal(left, corpus("pi3.llp")));

  MallProof right = eliminate_cuts(corpus("cut_assoc_right.llp"));
  CHECK(is_cut_free(right));
  CHECK(proof_equal(right, corpus("pi1.llp")));
}

TEST_CASE("the multiplicative self-cut normalizes with its conclusion intact") {
  MallProof p = corpus("goi_twist_cut_twist.llp");
  MallProof r = eliminate_cuts(p);
  CHECK(is_cut_free(r));
  check_mall(r);
  CHECK(print_sequent(r->endsequent) == "|- (~a | ~a), (a * a)");
}

TEST_CASE("rule permutation equivalence distinguishes the injection proofs") {
  MallProof p1 = corpus("pi1.llp"), p3 = corpus("pi3.llp");
  PermEqResult r = permutation_equal(p1, p3);
  CHECK(!r.equal);
  CHECK(!r.inconclusive);  // no negative rules, so the search space is just p1
  CHECK(permutation_equal(p1, p1).equal);
}

TEST_CASE("swapping the two withR layers is a rule permutation") {
  MallProof p2 = corpus("pi2.llp");
  MallProof swapped = parse_mall_proof(
      "(withR 1 (withR 2 (id ~a) (id ~a)) (withR 2 (id ~a) (id ~a)))");
  CHECK(print_sequent(swapped->endsequent) == "|- (~a & ~a), (a & a)");
  CHECK(!proof_equal(p2, swapped));
  PermEqResult r = permutation_equal(p2, swapped);
  CHECK(r.equal);

  // An identical pair is answered before any search happens.
  PermEqResult same = permutation_equal(p2, corpus("pi2.llp"), 0);
  CHECK(same.equal);

  // A zero budget cannot explore even one proof and says so.
  PermEqResult tight = permutation_equal(p2, swapped, 0);
  CHECK(!tight.equal);
  CHECK(tight.inconclusive);

  // Same endsequent, different injection choices: definitively inequivalent.
  MallProof inj_r = parse_mall_proof(
      "(withR 1 (plusR 2 (id ~a)) (plusR 2 (id ~a)))");
  MallProof inj_l = parse_mall_proof(
      "(withR 1 (plusL 2 (id ~a)) (plusL 2 (id ~a)))");
  CHECK(print_sequent(inj_r->endsequent) == "|- (~a & ~a), (a + a)");
  CHECK(print_sequent(inj_l->endsequent) == "|- (~a & ~a), (a + a)");
  PermEqResult hopeless = permutation_equal(inj_r, inj_l);
  CHECK(!hopeless.equal);
  CHECK(!hopeless.inconclusive);
}

TEST_CASE("withR commutes with parR in both directions") {
  MallProof t = parse_mall_proof("(tensorR 2 2 (id ~a) (id ~a))");
  MallProof q = mk_parR(1, 2, t);                 // |- ~a, (~a | (a * a))
  MallProof with_over_par = mk_withR(0, q, q);    // |- (~a & ~a), (~a | (a * a))
  MallProof par_over_with = mk_parR(1, 2, mk_withR(0, t, t));
  CHECK(print_sequent(with_over_par->endsequent) ==
        print_sequent(par_over_with->endsequent));
  CHECK(!proof_equal(with_over_par, par_over_with));
  CHECK(permutation_equal(with_over_par, par_over_with).equal);
  CHECK(permutation_equal(par_over_with, with_over_par).equal);
}
