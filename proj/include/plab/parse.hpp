#pragma once
// Text syntax for formulas and sequents.
//
//   formula  ::= term | term op term
//   term     ::= atom | "~" atom | "(" formula ")"
//   op       ::= "*" | "|" | "+" | "&"
//   atom     ::= [a-z][a-z0-9_]*
//   sequent  ::= "|-" [ formula ("," formula)* ]
//
// Binary connectives take explicit parentheses except for a single
// top-level occurrence, so "a * b" parses but "a * b * c" does not.
// Negation applies to atoms only. Whitespace is insignificant.
// Errors carry the byte offset and the set of tokens that were expected.

#include <stdexcept>
#include <string>
#include <vector>

#include "plab/formula.hpp"

namespace plab {

struct ParseError : std::runtime_error {
  size_t offset;
  std::vector<std::string> expected;
  ParseError(size_t offset, std::vector<std::string> expected, const std::string& message)
      : std::runtime_error(message), offset(offset), expected(std::move(expected)) {}
};

Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);

}  // namespace plab
