// Pointed-domain encodings, order laws, and the closure-operator basics the
// concurrent model is built on.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "plab/closure.hpp"
#include "plab/dom.hpp"
#include "plab/parse.hpp"

using namespace plab;

namespace {

Dom flat2() { return d_flat({"tt", "ff"}); }

}  // namespace

TEST_CASE("domain shapes and sizes") {
  Dom one = d_one();
  CHECK(dom_size(one) == 1);
  CHECK(dom_top(one) == 1);

  Dom f2 = flat2();
  CHECK(dom_size(f2) == 3);  // bot, tt, ff
  CHECK(dom_top(f2) == 3);

  Dom plus = dom_of_formula(parse_formula("(a + a)"));
  CHECK(plus->kind == DKind::LiftedSum);
  CHECK(dom_size(plus) == 7);  // bot + two lifted three-point copies

  Dom tensor = dom_of_formula(parse_formula("(a * a)"));
  CHECK(tensor->kind == DKind::Product);
  CHECK(dom_size(tensor) == 9);

  Dom seq = dom_of_sequent(parse_sequent("|- (~a + ~a), (a + a)"));
  CHECK(dom_size(seq) == 49);

  // Negation leaves the domain untouched: sums stay sums, products products.
  CHECK(dom_equal(plus, dom_of_formula(parse_formula("(~a & ~a)"))));
  CHECK(dom_equal(tensor, dom_of_formula(parse_formula("(~a | ~a)"))));
  CHECK_FALSE(dom_equal(plus, tensor));
}

TEST_CASE("flat and sum encodings round-trip") {
  Dom f2 = flat2();
  CHECK_FALSE(flat_value(f2, 0).has_value());
  CHECK(flat_make(f2, 0) == 1);
  CHECK(flat_make(f2, 1) == 2);
  for (size_t x = 1; x < dom_size(f2); ++x) {
    auto v = flat_value(f2, x);
    REQUIRE(v.has_value());
    CHECK(flat_make(f2, *v) == x);
  }

  Dom sum = d_sum({f2, f2});
  CHECK_FALSE(sum_tag(sum, 0).has_value());
  // Tag 0 occupies the codes right after bottom, tag 1 after it.
  CHECK(sum_make(sum, 0, 0) == 1);
  CHECK(sum_make(sum, 0, 2) == 3);
  CHECK(sum_make(sum, 1, 0) == 4);
  CHECK(sum_make(sum, 1, 2) == 6);
  for (size_t x = 1; x < dom_size(sum); ++x) {
    auto t = sum_tag(sum, x);
    REQUIRE(t.has_value());
    CHECK(sum_make(sum, t->first, t->second) == x);
  }
  // The two injections of bottom are distinct, and distinct from bottom.
  CHECK(sum_make(sum, 0, 0) != sum_make(sum, 1, 0));
  CHECK(sum_make(sum, 0, 0) != 0);
}

TEST_CASE("product encoding is row-major with the first factor most significant") {
  Dom plus = dom_of_formula(parse_formula("(a + a)"));
  Dom seq = d_prod({plus, plus});
  CHECK(prod_make(seq, {2, 3}) == 2 * 7 + 3);
  for (size_t x = 0; x < dom_size(seq); ++x) {
    auto xs = prod_split(seq, x);
    REQUIRE(xs.size() == 2);
    CHECK(prod_make(seq, xs) == x);
  }
  CHECK_THROWS_AS((void)prod_split(seq, 49), std::out_of_range);
}

TEST_CASE("order laws hold exhaustively on the two-sum product") {
  Dom seq = dom_of_sequent(parse_sequent("|- (~a + ~a), (a + a)"));
  const size_t n = dom_size(seq);
  REQUIRE(n == 49);

  for (size_t x = 0; x < n; ++x) {
    CHECK(dom_leq(seq, 0, x));
    CHECK(dom_leq(seq, x, x));
  }
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      if (dom_leq(seq, x, y) && dom_leq(seq, y, x)) CHECK(x == y);
      for (size_t z = 0; z < n; ++z)
        if (dom_leq(seq, x, y) && dom_leq(seq, y, z)) CHECK(dom_leq(seq, x, z));
    }

  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      auto j = dom_join(seq, x, y);
      bool has_upper = false;
      for (size_t w = 0; w < n; ++w)
        if (dom_leq(seq, x, w) && dom_leq(seq, y, w)) has_upper = true;
      CHECK(j.has_value() == has_upper);
      if (j) {
        CHECK(dom_leq(seq, x, *j));
        CHECK(dom_leq(seq, y, *j));
        for (size_t w = 0; w < n; ++w)
          if (dom_leq(seq, x, w) && dom_leq(seq, y, w)) CHECK(dom_leq(seq, *j, w));
      }
      size_t m = dom_meet(seq, x, y);
      CHECK(dom_leq(seq, m, x));
      CHECK(dom_leq(seq, m, y));
      for (size_t w = 0; w < n; ++w)
        if (dom_leq(seq, w, x) && dom_leq(seq, w, y)) CHECK(dom_leq(seq, w, m));
    }
}

TEST_CASE("leaf views flatten nested multiplicatives and reject sums") {
  Dom seq = dom_of_sequent(parse_sequent("|- (~a | ~a), (a * a)"));
  auto leaves = flat_leaves(seq);
  REQUIRE(leaves.size() == 4);
  for (const Dom& c : leaves) CHECK(c->kind == DKind::Flat);
  for (size_t x = 0; x < dom_size(seq); ++x) {
    auto xs = leaf_split(seq, x);
    REQUIRE(xs.size() == 4);
    CHECK(leaf_make(seq, xs) == x);
  }
  CHECK(dom_size(seq) == 81);

  Dom sum = dom_of_formula(parse_formula("(a + a)"));
  CHECK_THROWS_AS((void)flat_leaves(sum), std::logic_error);
  CHECK_THROWS_AS((void)flat_leaves(d_prod({sum, flat2()})), std::logic_error);
}

TEST_CASE("element rendering") {
  Dom f2 = flat2();
  Dom sum = d_sum({f2, f2});
  Dom pair = d_prod({f2, f2});
  CHECK(print_elem(f2, 0) == "bot");
  CHECK(print_elem(f2, flat_make(f2, 0)) == "tt");
  CHECK(print_elem(sum, sum_make(sum, 1, flat_make(f2, 0))) == "in1(tt)");
  CHECK(print_elem(sum, sum_make(sum, 0, 0)) == "in0(bot)");
  CHECK(print_elem(pair, prod_make(pair, {flat_make(f2, 0), 0})) == "(tt, bot)");
  CHECK(print_elem(pair, dom_top(pair)) == "TOP");
}

TEST_CASE("closure laws: identity, lifted permutation, and two non-closures") {
  Dom f2 = flat2();
  CHECK(is_closure(clo_identity(f2)));

  // Lifting the coordinate swap on a two-cell board yields the closure that
  // completes every element to a swap-invariant one.
  Dom pair = d_prod({f2, f2});
  const size_t ptop = dom_top(pair);
  std::vector<size_t> swap_base;
  for (size_t x = 0; x < dom_size(pair); ++x) {
    auto xs = prod_split(pair, x);
    swap_base.push_back(prod_make(pair, {xs[1], xs[0]}));
  }
  swap_base.push_back(ptop);
  ClosureOp sw = lift_function(pair, swap_base);
  CHECK(is_closure(sw));
  size_t tt = flat_make(f2, 0);
  size_t ff = flat_make(f2, 1);
  CHECK(clo_apply(sw, 0) == 0);
  CHECK(clo_apply(sw, prod_make(pair, {tt, tt})) == prod_make(pair, {tt, tt}));
  // (tt, bot) must be completed to (tt, tt); (tt, ff) has no swap-invariant
  // completion, so it diverges.
  CHECK(clo_apply(sw, prod_make(pair, {tt, 0})) == prod_make(pair, {tt, tt}));
  CHECK(clo_apply(sw, prod_make(pair, {tt, ff})) == ptop);

  // Non-monotone table: bot goes to tt but ff stays put.
  ClosureOp bad1{f2, {flat_make(f2, 0), flat_make(f2, 0), flat_make(f2, 1), dom_top(f2)}};
  CHECK_FALSE(is_closure(bad1));

  // Non-idempotent table on a sum: bot -> in0(bot) -> in0(tt).
  Dom sum = d_sum({f2, f2});
  std::vector<size_t> tab(dom_size(sum) + 1);
  for (size_t x = 0; x <= dom_size(sum); ++x) tab[x] = x;
  tab[0] = sum_make(sum, 0, 0);
  tab[sum_make(sum, 0, 0)] = sum_make(sum, 0, flat_make(f2, 0));
  ClosureOp bad2{sum, tab};
  CHECK_FALSE(is_closure(bad2));
}

TEST_CASE("lift_function validates its base table") {
  Dom f2 = flat2();
  // Wrong length.
  CHECK_THROWS_AS((void)lift_function(f2, {0, 1, 2}), std::invalid_argument);
  // Top slot not fixed.
  CHECK_THROWS_AS((void)lift_function(f2, {0, 1, 2, 0}), std::invalid_argument);

  // Joining with the constant tt: ff has no join with tt, so it diverges.
  size_t tt = flat_make(f2, 0);
  ClosureOp force = lift_function(f2, {tt, tt, dom_top(f2), dom_top(f2)});
  CHECK(is_closure(force));
  CHECK(clo_apply(force, 0) == tt);
  CHECK(clo_apply(force, tt) == tt);
  CHECK(clo_apply(force, flat_make(f2, 1)) == dom_top(f2));

  CHECK(play_closures(clo_identity(f2), clo_identity(f2)) == 0);
  CHECK(play_closures(force, clo_identity(f2)) == tt);
}
