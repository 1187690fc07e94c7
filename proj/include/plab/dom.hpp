#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plab/formula.hpp"

namespace plab {

// ---------------------------------------------------------------------------
// Finite pointed domains.
//
// Elements are numbered 0..size-1 with 0 the bottom of every shape; the
// number `size` itself is reserved for an adjoined top used by closure
// operators (divergence), which is above every proper element and never a
// member of the carrier described here.
//
//   One          a single bottom point
//   Flat         bottom below pairwise-incomparable named values
//   LiftedSum    a fresh bottom below tagged disjoint copies of the parts
//                (each part keeps its own bottom, so "inj_i(bot)" != bot)
//   Product      tuples ordered componentwise, encoded in row-major order
// ---------------------------------------------------------------------------

enum class DKind { One, Flat, LiftedSum, Product };

struct DomNode;
using Dom = std::shared_ptr<const DomNode>;

struct DomNode {
  DKind kind;
  std::vector<std::string> values;  // Flat
  std::vector<Dom> parts;           // LiftedSum / Product
};

Dom d_one();
Dom d_flat(std::vector<std::string> values);
Dom d_sum(std::vector<Dom> parts);
Dom d_prod(std::vector<Dom> parts);

bool dom_equal(const Dom& a, const Dom& b);
size_t dom_size(const Dom& d);         // proper elements only
size_t dom_top(const Dom& d);          // == dom_size(d), the adjoined top

bool dom_leq(const Dom& d, size_t x, size_t y);             // proper x, y
std::optional<size_t> dom_join(const Dom& d, size_t x, size_t y);
size_t dom_meet(const Dom& d, size_t x, size_t y);

// Product encoding.
std::vector<size_t> prod_split(const Dom& d, size_t x);
size_t prod_make(const Dom& d, const std::vector<size_t>& parts);

// LiftedSum encoding: nullopt at bottom, otherwise (tag, element of part).
std::optional<std::pair<size_t, size_t>> sum_tag(const Dom& d, size_t x);
size_t sum_make(const Dom& d, size_t tag, size_t inner);

// Flat encoding: nullopt at bottom, otherwise index into values.
std::optional<size_t> flat_value(const Dom& d, size_t x);
size_t flat_make(const Dom& d, size_t value_index);

// Views a nesting of products over One/Flat as a row of flat cells.
// Throws if a lifted sum occurs anywhere inside.
std::vector<Dom> flat_leaves(const Dom& d);
std::vector<size_t> leaf_split(const Dom& d, size_t x);
size_t leaf_make(const Dom& d, const std::vector<size_t>& leaves);

// Renders an element, the adjoined top included ("TOP").
std::string print_elem(const Dom& d, size_t x);

// Formula and sequent interpretations: atoms (either sign) become the flat
// two-valued domain, both additives become the lifted sum, and both
// multiplicatives the product of the component domains.  A sequent is the
// product of its formula domains.
Dom dom_of_formula(const Formula& f);
Dom dom_of_sequent(const Sequent& s);

}  // namespace plab
