#include "plab/stability.hpp"

#include <stdexcept>

namespace plab {

namespace {

void validate_table(const Dom& d, const std::vector<size_t>& table) {
  const size_t n = dom_size(d);
  const size_t top = dom_top(d);
  if (table.size() != n + 1)
    throw std::invalid_argument("function table has the wrong length");
  if (table[n] != top)
    throw std::invalid_argument("function table must fix the top");
  for (size_t x = 0; x <= n; ++x)
    if (table[x] > top) throw std::invalid_argument("function table value out of range");
  auto leq_ext = [&](size_t a, size_t b) {
    if (a == top) return b == top;
    if (b == top) return true;
    return dom_leq(d, a, b);
  };
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      if (dom_leq(d, x, y) && !leq_ext(table[x], table[y]))
        throw std::invalid_argument("function table is not monotone");
}

}  // namespace

bool is_stable(const Dom& d, const std::vector<size_t>& table) {
  validate_table(d, table);
  const size_t n = dom_size(d);
  const size_t top = dom_top(d);
  auto meet_ext = [&](size_t a, size_t b) {
    if (a == top) return b;
    if (b == top) return a;
    return dom_meet(d, a, b);
  };
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      if (!dom_join(d, x, y)) continue;  // only compatible pairs constrain f
      if (table[dom_meet(d, x, y)] != meet_ext(table[x], table[y])) return false;
    }
  return true;
}

bool is_sequential(const Dom& d, const std::vector<size_t>& table) {
  validate_table(d, table);
  const size_t n = dom_size(d);
  const size_t top = dom_top(d);
  auto cells = flat_leaves(d);
  const size_t nc = cells.size();
  auto out_defined = [&](size_t fy, size_t c) {
    if (fy == top) return true;
    return leaf_split(d, fy)[c] != 0;
  };
  for (size_t x = 0; x < n; ++x) {
    if (table[x] == top) continue;
    auto xs = leaf_split(d, x);
    auto fxs = leaf_split(d, table[x]);
    for (size_t c = 0; c < nc; ++c) {
      if (fxs[c] != 0) continue;
      // Does any extension of x ever fill the output cell c?
      bool ever = false;
      for (size_t y = 0; y < n && !ever; ++y)
        if (dom_leq(d, x, y) && out_defined(table[y], c)) ever = true;
      if (!ever) continue;
      // Is there a blank input cell that every such extension fills?
      bool gated = false;
      for (size_t cp = 0; cp < nc && !gated; ++cp) {
        if (xs[cp] != 0) continue;
        bool gates = true;
        for (size_t y = 0; y < n && gates; ++y)
          if (dom_leq(d, x, y) && out_defined(table[y], c) &&
              leaf_split(d, y)[cp] == 0)
            gates = false;
        gated = gates;
      }
      if (!gated) return false;
    }
  }
  return true;
}

}  // namespace plab
