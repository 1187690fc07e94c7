#pragma once
// Shared helpers for the test binaries: seeded RNG (overridable via the
// POLARITY_LAB_SEED environment variable) and a random formula generator.

#include <cstdlib>
#include <random>
#include <string>

#include "plab/formula.hpp"

inline std::mt19937 seeded_rng(unsigned fallback = 20260822u) {
  if (const char* env = std::getenv("POLARITY_LAB_SEED")) {
    return std::mt19937(static_cast<unsigned>(std::strtoul(env, nullptr, 10)));
  }
  return std::mt19937(fallback);
}

inline plab::Formula random_formula(std::mt19937& rng, int depth) {
  static const std::string names[] = {"a", "b", "c"};
  std::uniform_int_distribution<int> leaf(0, 5);
  std::uniform_int_distribution<int> name_pick(0, 2);
  int k = (depth <= 0) ? (leaf(rng) % 2) : leaf(rng);
  const std::string& nm = names[name_pick(rng)];
  switch (k) {
    case 0: return plab::f_atom(nm);
    case 1: return plab::f_natom(nm);
    case 2: return plab::f_tensor(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3: return plab::f_par(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4: return plab::f_plus(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return plab::f_with(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

// Random formula built from additive connectives and literals only.
inline plab::Formula random_additive_formula(std::mt19937& rng, int depth) {
  static const std::string names[] = {"a", "b"};
  std::uniform_int_distribution<int> leaf(0, 3);
  std::uniform_int_distribution<int> name_pick(0, 1);
  int k = (depth <= 0) ? (leaf(rng) % 2) : leaf(rng);
  const std::string& nm = names[name_pick(rng)];
  switch (k) {
    case 0: return plab::f_atom(nm);
    case 1: return plab::f_natom(nm);
    case 2: return plab::f_plus(random_additive_formula(rng, depth - 1), random_additive_formula(rng, depth - 1));
    default: return plab::f_with(random_additive_formula(rng, depth - 1), random_additive_formula(rng, depth - 1));
  }
}
