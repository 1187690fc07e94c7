#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "plab/proof.hpp"
#include "plab/proof_parse.hpp"
#include "test_util.hpp"

using namespace plab;

static std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(PLAB_CORPUS_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static MallProof corpus(const std::string& rel) { return parse_mall_proof(slurp(rel)); }

TEST_CASE("axiom and rule constructors derive the right endsequents") {
  Formula a = f_atom("a");
  MallProof ax = mk_id(f_natom("a"));
  CHECK(print_sequent(ax->endsequent) == "|- ~a, a");

  MallProof inj2 = mk_plusR(1, a, ax);
  CHECK(print_sequent(inj2->endsequent) == "|- ~a, (a + a)");

  MallProof inj1 = mk_plusR(0, f_natom("a"), inj2);
  CHECK(print_sequent(inj1->endsequent) == "|- (~a + ~a), (a + a)");

  MallProof w = mk_withR(0, ax, ax);
  CHECK(print_sequent(w->endsequent) == "|- (~a & ~a), a");

  MallProof t = mk_tensorR(1, 1, ax, ax);
  CHECK(print_sequent(t->endsequent) == "|- ~a, ~a, (a * a)");

  MallProof pr = mk_parR(0, 1, t);
  CHECK(print_sequent(pr->endsequent) == "|- (~a | ~a), (a * a)");

  MallProof prs = mk_parR(1, 0, t);
  CHECK(print_sequent(prs->endsequent) == "|- (~a | ~a), (a * a)");
  CHECK(!proof_equal(pr, prs));

  check_mall(inj1);
  check_mall(pr);
}

TEST_CASE("invalid rule applications are rejected") {
  MallProof ax = mk_id(f_natom("a"));
  // withR contexts must agree positionally off the principal position.
  MallProof other = mk_plusR(1, f_atom("a"), ax);  // |- ~a, (a + a)
  CHECK_THROWS_AS(mk_withR(0, ax, other), ProofError);
  // cut needs dual occurrences at the named positions.
  CHECK_THROWS_AS(mk_cut(f_atom("a"), ax, ax, 0, 0), ProofError);
  // positions are range-checked.
  CHECK_THROWS_AS(mk_plusR(2, f_atom("a"), ax), ProofError);
  CHECK_THROWS_AS(mk_parR(1, 1, mk_tensorR(1, 1, ax, ax)), ProofError);
}

TEST_CASE("check_mall re-derives endsequents and catches tampering") {
  MallProof good = corpus("pi1.llp");
  check_mall(good);

  auto bad = std::make_shared<MallProofNode>(*good);
  bad->endsequent[0] = f_atom("z");
  CHECK_THROWS_AS(check_mall(MallProof(bad)), ProofError);
}

TEST_CASE("corpus proofs parse to the expected endsequents") {
  CHECK(print_sequent(corpus("pi1.llp")->endsequent) == "|- (~a + ~a), (a + a)");
  CHECK(print_sequent(corpus("pi2.llp")->endsequent) == "|- (~a & ~a), (a & a)");
  CHECK(print_sequent(corpus("pi3.llp")->endsequent) == "|- (~a + ~a), (a + a)");
  CHECK(print_sequent(corpus("cut_assoc_left.llp")->endsequent) == "|- (~a + ~a), (a + a)");
  CHECK(print_sequent(corpus("cut_assoc_right.llp")->endsequent) == "|- (~a + ~a), (a + a)");
  CHECK(print_sequent(corpus("goi_id.llp")->endsequent) == "|- (~a | ~a), (a * a)");
  CHECK(print_sequent(corpus("goi_twist.llp")->endsequent) == "|- (~a | ~a), (a * a)");
  CHECK(print_sequent(corpus("goi_twist_cut_twist.llp")->endsequent) == "|- (~a | ~a), (a * a)");

  CHECK(!proof_equal(corpus("pi1.llp"), corpus("pi3.llp")));
  CHECK(is_cut_free(corpus("pi2.llp")));
  CHECK(!is_cut_free(corpus("cut_assoc_left.llp")));

  // The two double-cut files differ only in bracketing.
  MallProof l = corpus("cut_assoc_left.llp");
  MallProof r = corpus("cut_assoc_right.llp");
  CHECK(l->rule == MRule::Cut);
  CHECK(r->rule == MRule::Cut);
  CHECK(l->premises[0]->rule == MRule::Cut);
  CHECK(r->premises[1]->rule == MRule::Cut);
  CHECK(proof_equal(l->premises[1], corpus("pi3.llp")));
  CHECK(proof_equal(r->premises[0], corpus("pi1.llp")));
}

TEST_CASE("proof print/parse round trip") {
  for (const char* f : {"pi1.llp", "pi2.llp", "pi3.llp", "cut_assoc_left.llp",
                        "cut_assoc_right.llp", "goi_id.llp", "goi_twist.llp",
                        "goi_twist_cut_twist.llp"}) {
    MallProof p = corpus(f);
    MallProof q = parse_mall_proof(print_proof(p));
    CHECK(proof_equal(p, q));
  }
}

TEST_CASE("system detection keys on rule tags") {
  CHECK(detect_system(parse_sexpr(slurp("pi1.llp"))) == ProofSystem::Mall);
  CHECK(detect_system(parse_sexpr("(foc (id a))")) == ProofSystem::Foc);
  CHECK(detect_system(parse_sexpr("(id a)")) == ProofSystem::Mall);
  CHECK(detect_system(parse_sexpr("(shiftL 1 (foc (id a)))")) == ProofSystem::Foc);
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_AS(parse_mall_proof("(frob 1 (id a))"), ProofError);
  CHECK_THROWS_AS(parse_mall_proof("(plusR 0 (id a))"), ProofError);
  CHECK_THROWS_AS(parse_mall_proof("(id (a & (b))"), ParseError);
  CHECK_THROWS_AS(parse_mall_proof("(cut (a + b) (id a) (id b))"), ProofError);
}
