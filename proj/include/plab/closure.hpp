#pragma once

#include <functional>

#include "plab/dom.hpp"

namespace plab {

// ---------------------------------------------------------------------------
// Closure operators as strategies.
//
// A strategy on a domain is a closure operator: a function that is
// increasing, monotone and idempotent, with the adjoined top (divergence)
// as an absorbing value.  Stored as a full table over 0..size, where the
// last slot is the top.
// ---------------------------------------------------------------------------

struct ClosureOp {
  Dom dom;
  std::vector<size_t> table;  // length dom_size(dom) + 1
};

size_t clo_apply(const ClosureOp& c, size_t x);
ClosureOp clo_identity(const Dom& d);
ClosureOp clo_from_function(const Dom& d, const std::function<size_t(size_t)>& f);
bool closure_equal(const ClosureOp& a, const ClosureOp& b);

// The defining laws: x <= t(x), x <= y implies t(x) <= t(y), t(t(x)) = t(x),
// and the top maps to itself (the order is extended with top above all).
bool is_closure(const ClosureOp& c);

// Least closure above the pointwise join with a monotone base function:
// iterates x -> x v f(x) to a fixed point.  The base table covers 0..size
// (top slot included, which must be top).
ClosureOp lift_function(const Dom& d, const std::vector<size_t>& base);

// Composition over a shared middle domain: sigma on A x M, tau on M x C give
// sigma;tau on A x C.  The interface value is the least fixed point of
//   y  ->  y v (M-part of sigma(x, y)) v (M-part of tau(y, z)),
// and the result pairs sigma's A-part with tau's C-part at that fixed point.
// Divergence anywhere (top, or a failed join) makes the result top.
ClosureOp compose_closures(const ClosureOp& sigma, const ClosureOp& tau);

// Pointwise pairing on a product domain, strict in the top.
ClosureOp smash_closures(const ClosureOp& a, const ClosureOp& b);

// Action of a strategy against a counter-strategy on one side of a product:
// beta on C turns sigma on A x C into a closure on A, and dually alpha on A
// turns sigma into a closure on C.
ClosureOp act(const ClosureOp& sigma, const ClosureOp& beta);
ClosureOp coact(const ClosureOp& alpha, const ClosureOp& sigma);

// Runs two closures on the same domain against each other from bottom until
// neither adds anything; returns the common fixed point (possibly top).
size_t play_closures(const ClosureOp& sigma, const ClosureOp& tau);

}  // namespace plab
