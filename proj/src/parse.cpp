#include "plab/parse.hpp"

#include <cctype>

namespace plab {

namespace {

bool atom_start(char c) { return c >= 'a' && c <= 'z'; }
bool atom_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; }
bool op_char(char c) { return c == '*' || c == '|' || c == '+' || c == '&'; }

FKind op_kind(char c) {
  switch (c) {
    case '*': return FKind::Tensor;
    case '|': return FKind::Par;
    case '+': return FKind::Plus;
    default: return FKind::With;
  }
}

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_end() const { return pos >= s.size(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "parse error at offset " + std::to_string(pos) + ": expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
      msg += "'" + expected[i] + "'";
    }
    throw ParseError(pos, std::move(expected), msg);
  }

  std::string lex_atom() {
    size_t start = pos;
    ++pos;
    while (pos < s.size() && atom_char(s[pos])) ++pos;
    return s.substr(start, pos - start);
  }

  Formula parse_term() {
    skip_ws();
    if (at_end()) fail({"~", "(", "atom"});
    char c = s[pos];
    if (c == '~') {
      ++pos;
      skip_ws();
      if (at_end() || !atom_start(s[pos])) fail({"atom"});
      return f_natom(lex_atom());
    }
    if (c == '(') {
      ++pos;
      Formula l = parse_term();
      skip_ws();
      if (at_end()) fail({"*", "|", "+", "&", ")"});
      if (s[pos] == ')') {
        ++pos;
        return l;  // redundant parentheses around a term are allowed
      }
      if (!op_char(s[pos])) fail({"*", "|", "+", "&", ")"});
      char op = s[pos];
      ++pos;
      Formula r = parse_term();
      skip_ws();
      if (at_end() || s[pos] != ')') fail({")"});
      ++pos;
      return make(op, l, r);
    }
    if (atom_start(c)) return f_atom(lex_atom());
    fail({"~", "(", "atom"});
  }

  static Formula make(char op, Formula l, Formula r) {
    switch (op_kind(op)) {
      case FKind::Tensor: return f_tensor(std::move(l), std::move(r));
      case FKind::Par: return f_par(std::move(l), std::move(r));
      case FKind::Plus: return f_plus(std::move(l), std::move(r));
      default: return f_with(std::move(l), std::move(r));
    }
  }

  // A formula with at most one unparenthesized top-level connective.
  // `allow_comma` adds "," to the stop set (sequent elements).
  Formula parse_formula_body(bool allow_comma) {
    Formula l = parse_term();
    skip_ws();
    if (at_end() || (allow_comma && s[pos] == ',')) return l;
    if (!op_char(s[pos])) {
      std::vector<std::string> exp = {"*", "|", "+", "&"};
      if (allow_comma) exp.push_back(",");
      exp.push_back("end of input");
      fail(std::move(exp));
    }
    char op = s[pos];
    ++pos;
    Formula r = parse_term();
    skip_ws();
    if (!at_end() && !(allow_comma && s[pos] == ',')) {
      fail(allow_comma ? std::vector<std::string>{",", "end of input"}
                       : std::vector<std::string>{"end of input"});
    }
    return make(op, l, r);
  }
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  return p.parse_formula_body(false);
}

Sequent parse_sequent(const std::string& text) {
  Parser p(text);
  p.skip_ws();
  if (p.s.compare(p.pos, 2, "|-") != 0) p.fail({"|-"});
  p.pos += 2;
  Sequent out;
  p.skip_ws();
  if (p.at_end()) return out;
  out.push_back(p.parse_formula_body(true));
  p.skip_ws();
  while (!p.at_end()) {
    if (p.s[p.pos] != ',') p.fail({",", "end of input"});
    ++p.pos;
    out.push_back(p.parse_formula_body(true));
    p.skip_ws();
  }
  return out;
}

}  // namespace plab
