#pragma once
// Minimal s-expression reader used by the proof file format.
//
// An expression is a symbol (any run of characters other than whitespace,
// parentheses and ';') or a parenthesized list of expressions. Semicolon
// starts a comment running to end of line. Formula arguments inside proof
// files are ordinary formula syntax; the reader returns them as nested
// lists/symbols and to_text() reconstructs the flat source text for the
// formula parser.

#include <string>
#include <vector>

#include "plab/parse.hpp"

namespace plab {

struct SExpr {
  bool is_list = false;
  std::string sym;          // when !is_list
  std::vector<SExpr> items; // when is_list
};

// Parses exactly one expression (throws ParseError on trailing input).
SExpr parse_sexpr(const std::string& text);

// Flat text reconstruction: lists as "(a b c)", symbols verbatim.
std::string sexpr_to_text(const SExpr& e);

}  // namespace plab
