#pragma once

#include <vector>

#include "plab/dom.hpp"

namespace plab {

// Both predicates judge a monotone endofunction on the proper elements of a
// domain, given as a table of length dom_size(d) + 1 whose last slot is the
// adjoined top mapped to itself.  A malformed or non-monotone table is
// rejected with std::invalid_argument.

// Stability: f(x meet y) == f(x) meet f(y) for every compatible pair
// (pairs with a join), the meet extended so that top is absorbed.
bool is_stable(const Dom& d, const std::vector<size_t>& table);

// Sequentiality on the leaf cells of the domain: wherever an output cell is
// blank, either no extension of the input ever fills it, or some currently
// blank input cell must be filled in every extension that does.  A top
// output counts as every cell filled.
bool is_sequential(const Dom& d, const std::vector<size_t>& table);

}  // namespace plab
