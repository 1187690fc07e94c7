#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "plab/foc.hpp"

using namespace plab;

static std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(PLAB_CORPUS_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_CASE("axiom, focus and shifts") {
  FocProof ax = fmk_id("a");
  CHECK(print_foc_sequent(ax->endsequent) == "a |- ; a");

  FocProof f = fmk_foc(ax);
  CHECK(print_foc_sequent(f->endsequent) == "a |- a ;");

  FocProof sr = fmk_shiftR(0, f);
  CHECK(print_foc_sequent(sr->endsequent) == "|- a ; down(a)");

  FocProof sl = fmk_shiftL(0, f);
  CHECK(print_foc_sequent(sl->endsequent) == "a, down(a) |- ;");
}

TEST_CASE("right plus rules act on the stoup only") {
  FocProof ax = fmk_id("a");
  FocProof r = fmk_plusSR(p_atom("a"), ax);
  CHECK(print_foc_sequent(r->endsequent) == "a |- ; (a + a)");
  FocProof l = fmk_plusSL(p_atom("b"), ax);
  CHECK(print_foc_sequent(l->endsequent) == "a |- ; (a + b)");

  // Plus-introduction with an empty stoup violates the discipline.
  FocProof unfocussed = fmk_foc(ax);
  CHECK_THROWS_WITH_AS(fmk_plusSR(p_atom("a"), unfocussed),
                       doctest::Contains("stoup"), ProofError);
  CHECK_THROWS_AS(fmk_plusSL(p_atom("a"), unfocussed), ProofError);
}

TEST_CASE("a focussed sequent admits only atoms on the left") {
  // shiftL then shiftR on a different formula would focus with down(a) on
  // the left; the constructor must refuse.
  FocProof ax = fmk_id("a");
  FocProof two = fmk_foc(fmk_plusSR(p_atom("a"), ax));  // a |- (a + a) ;
  FocProof moved = fmk_shiftL(0, two);                  // a, down((a + a)) |- ;
  REQUIRE(print_foc_sequent(moved->endsequent) == "a, down((a + a)) |- ;");
  CHECK_THROWS_WITH_AS(fmk_shiftR(0, moved), doctest::Contains("stoup discipline"),
                       ProofError);
  // Removing the non-atom instead is fine.
  CHECK(print_foc_sequent(fmk_shiftR(1, moved)->endsequent) ==
        "a |- ; down(down((a + a)))");
}

TEST_CASE("tensor and cut rules") {
  FocProof ax = fmk_id("a");
  FocProof t = fmk_tensorS(ax, fmk_id("b"));
  CHECK(print_foc_sequent(t->endsequent) == "a, b |- ; (a * b)");

  FocProof tl = fmk_tensorL(0, 1, fmk_foc(t));
  CHECK(print_foc_sequent(tl->endsequent) == "(a * b) |- (a * b) ;");

  // cutS: |- a ; down(a)  against  down(a) |- a ;
  FocProof sr = fmk_shiftR(0, fmk_foc(ax));            // |- a ; down(a)
  FocProof sl = fmk_shiftL(0, fmk_foc(ax));            // a, down(a) |- ;
  FocProof via_s = fmk_cutS(1, sr, sl);
  CHECK(print_foc_sequent(via_s->endsequent) == "a |- a ;");

  // cutR: a |- a ;  against  a |- a ;  cutting the unfocussed a.
  FocProof via_r = fmk_cutR(0, 0, fmk_foc(ax), fmk_foc(ax));
  CHECK(print_foc_sequent(via_r->endsequent) == "a |- a ;");
}

TEST_CASE("shared-context case split") {
  FocProof branch = fmk_shiftL(0, fmk_foc(fmk_id("a")));  // a, down(a) |- ;
  FocProof split = fmk_plusL(1, 1, branch, branch);
  CHECK(print_foc_sequent(split->endsequent) == "a, (down(a) + down(a)) |- ;");

  FocProof other = fmk_shiftL(0, fmk_foc(fmk_id("b")));   // b, down(b) |- ;
  CHECK_THROWS_WITH_AS(fmk_plusL(1, 1, branch, other), doctest::Contains("context"),
                       ProofError);
}

TEST_CASE("corpus: the three focussed proofs check with the expected sequents") {
  FocProof p1 = parse_foc_proof(slurp("pi1p.llp"));
  check_foc(p1);
  CHECK(print_foc_sequent(p1->endsequent) == "|- (down(a) + a), (a + a) ;");

  FocProof p2 = parse_foc_proof(slurp("pi2p.llp"));
  check_foc(p2);
  CHECK(print_foc_sequent(p2->endsequent) == "(a + a) |- down((down(a) + down(a))) ;");

  FocProof p3 = parse_foc_proof(slurp("pi3p.llp"));
  check_foc(p3);
  CHECK(print_foc_sequent(p3->endsequent) ==
        "down((down(a) + down(a))) |- (down(down(a)) + a) ;");
}

TEST_CASE("corpus: the forbidden bottom rule is rejected with a stoup diagnostic") {
  try {
    parse_foc_proof(slurp("bad_last_plusR.llp"));
    FAIL("expected rejection");
  } catch (const ProofError& e) {
    std::string msg = e.what();
    CHECK(msg.find("stoup") != std::string::npos);
    CHECK(msg.find("plusSR") != std::string::npos);
  }
}

TEST_CASE("focussed proof print/parse round trip") {
  for (const char* f : {"pi1p.llp", "pi2p.llp", "pi3p.llp"}) {
    FocProof p = parse_foc_proof(slurp(f));
    CHECK(foc_proof_equal(parse_foc_proof(print_foc_proof(p)), p));
  }
}
