#include "plab/sexpr.hpp"

#include <cctype>

namespace plab {

namespace {

struct SReader {
  const std::string& s;
  size_t pos = 0;

  explicit SReader(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      } else if (s[pos] == ';') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "parse error at offset " + std::to_string(pos) + ": expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
      msg += "'" + expected[i] + "'";
    }
    throw ParseError(pos, std::move(expected), msg);
  }

  static bool sym_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ';';
  }

  SExpr read() {
    skip_ws();
    if (pos >= s.size()) fail({"(", "symbol"});
    if (s[pos] == '(') {
      ++pos;
      SExpr out;
      out.is_list = true;
      while (true) {
        skip_ws();
        if (pos >= s.size()) fail({")"});
        if (s[pos] == ')') {
          ++pos;
          return out;
        }
        out.items.push_back(read());
      }
    }
    if (s[pos] == ')') fail({"(", "symbol"});
    SExpr out;
    size_t start = pos;
    while (pos < s.size() && sym_char(s[pos])) ++pos;
    out.sym = s.substr(start, pos - start);
    return out;
  }
};

}  // namespace

SExpr parse_sexpr(const std::string& text) {
  SReader r(text);
  SExpr e = r.read();
  r.skip_ws();
  if (r.pos < text.size()) r.fail({"end of input"});
  return e;
}

std::string sexpr_to_text(const SExpr& e) {
  if (!e.is_list) return e.sym;
  std::string out = "(";
  for (size_t i = 0; i < e.items.size(); ++i) {
    if (i > 0) out += " ";
    out += sexpr_to_text(e.items[i]);
  }
  out += ")";
  return out;
}

}  // namespace plab
