#include "plab/proc.hpp"

#include <cctype>
#include <sstream>

namespace plab {

namespace {

Proc mk(ProcNode n) { return std::make_shared<const ProcNode>(std::move(n)); }

}  // namespace

Proc p_input(const std::string& cell, const std::string& var, Proc body) {
  ProcNode n;
  n.kind = ProcKind::Input;
  n.cell = cell;
  n.var = var;
  n.parts = {std::move(body)};
  return mk(std::move(n));
}

Proc p_out_lit(const std::string& cell, size_t value) {
  ProcNode n;
  n.kind = ProcKind::Output;
  n.cell = cell;
  n.expr.is_var = false;
  n.expr.value = value;
  return mk(std::move(n));
}

Proc p_out_var(const std::string& cell, const std::string& var) {
  ProcNode n;
  n.kind = ProcKind::Output;
  n.cell = cell;
  n.expr.is_var = true;
  n.expr.var = var;
  return mk(std::move(n));
}

Proc p_par(Proc left, Proc right) {
  ProcNode n;
  n.kind = ProcKind::Par;
  n.parts = {std::move(left), std::move(right)};
  return mk(std::move(n));
}

Proc p_nil() {
  ProcNode n;
  n.kind = ProcKind::Nil;
  return mk(std::move(n));
}

Proc p_top() {
  ProcNode n;
  n.kind = ProcKind::Top;
  return mk(std::move(n));
}

Proc p_new(const std::string& cell, Proc body) {
  ProcNode n;
  n.kind = ProcKind::New;
  n.cell = cell;
  n.parts = {std::move(body)};
  return mk(std::move(n));
}

Proc p_pvar(const std::string& name) {
  ProcNode n;
  n.kind = ProcKind::Var;
  n.var = name;
  return mk(std::move(n));
}

Proc p_rec(const std::string& name, Proc body) {
  ProcNode n;
  n.kind = ProcKind::Rec;
  n.var = name;
  n.parts = {std::move(body)};
  return mk(std::move(n));
}

bool proc_equal(const Proc& a, const Proc& b) {
  if (a->kind != b->kind) return false;
  if (a->cell != b->cell || a->var != b->var) return false;
  if (a->kind == ProcKind::Output) {
    if (a->expr.is_var != b->expr.is_var) return false;
    if (a->expr.is_var ? a->expr.var != b->expr.var : a->expr.value != b->expr.value) {
      return false;
    }
  }
  if (a->parts.size() != b->parts.size()) return false;
  for (size_t i = 0; i < a->parts.size(); ++i) {
    if (!proc_equal(a->parts[i], b->parts[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { Ident, Number, Query, Bang, Arrow, Bar, Dot, LParen, RParen, End } kind;
  std::string text;
};

struct Lexer {
  std::string src;
  size_t pos = 0;
  Token cur;

  explicit Lexer(std::string s) : src(std::move(s)) { advance(); }

  void advance() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos >= src.size()) {
      cur = {Token::End, ""};
      return;
    }
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      cur = {Token::Number, src.substr(start, pos - start)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
        ++pos;
      }
      cur = {Token::Ident, src.substr(start, pos - start)};
      return;
    }
    if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
      pos += 2;
      cur = {Token::Arrow, "->"};
      return;
    }
    if (c == '|' && pos + 1 < src.size() && src[pos + 1] == '|') {
      pos += 2;
      cur = {Token::Bar, "||"};
      return;
    }
    switch (c) {
      case '?': ++pos; cur = {Token::Query, "?"}; return;
      case '!': ++pos; cur = {Token::Bang, "!"}; return;
      case '.': ++pos; cur = {Token::Dot, "."}; return;
      case '(': ++pos; cur = {Token::LParen, "("}; return;
      case ')': ++pos; cur = {Token::RParen, ")"}; return;
      default: throw ProcError(std::string("process parse: unexpected character '") + c + "'");
    }
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ProcError("process parse: expected " + what + " but found '" +
                    (cur.kind == Token::End ? "<end>" : cur.text) + "'");
  }

  std::string take_name(const std::string& what) {
    if (cur.kind != Token::Ident && cur.kind != Token::Number) fail(what);
    std::string s = cur.text;
    advance();
    return s;
  }

  void expect(Token::Kind k, const std::string& what) {
    if (cur.kind != k) fail(what);
    advance();
  }
};

Proc parse_par(Lexer& lx);

Proc parse_prefix(Lexer& lx) {
  if (lx.cur.kind == Token::LParen) {
    lx.advance();
    Proc inner = parse_par(lx);
    lx.expect(Token::RParen, "')'");
    return inner;
  }
  if (lx.cur.kind == Token::Number || lx.cur.kind == Token::Ident) {
    std::string name = lx.cur.text;
    bool numeric = lx.cur.kind == Token::Number;
    lx.advance();
    if (lx.cur.kind == Token::Query) {
      lx.advance();
      if (lx.cur.kind != Token::Ident) lx.fail("a variable name");
      std::string var = lx.cur.text;
      lx.advance();
      lx.expect(Token::Arrow, "'->'");
      return p_input(name, var, parse_prefix(lx));
    }
    if (lx.cur.kind == Token::Bang) {
      lx.advance();
      if (lx.cur.kind == Token::Number) {
        size_t v = static_cast<size_t>(std::stoull(lx.cur.text));
        lx.advance();
        return p_out_lit(name, v);
      }
      if (lx.cur.kind == Token::Ident) {
        std::string var = lx.cur.text;
        lx.advance();
        return p_out_var(name, var);
      }
      lx.fail("a value literal or variable");
    }
    if (numeric) {
      if (name == "0") return p_nil();
      lx.fail("'?' or '!' after a numeric cell");
    }
    if (name == "TOP") return p_top();
    return p_pvar(name);
  }
  lx.fail("a process");
}

Proc parse_seq(Lexer& lx) {
  if (lx.cur.kind == Token::Ident && lx.cur.text == "new") {
    lx.advance();
    std::string cell = lx.take_name("a cell name");
    lx.expect(Token::Dot, "'.'");
    return p_new(cell, parse_par(lx));
  }
  if (lx.cur.kind == Token::Ident && lx.cur.text == "rec") {
    lx.advance();
    if (lx.cur.kind != Token::Ident) lx.fail("a process variable");
    std::string name = lx.cur.text;
    lx.advance();
    lx.expect(Token::Dot, "'.'");
    return p_rec(name, parse_par(lx));
  }
  return parse_prefix(lx);
}

Proc parse_par(Lexer& lx) {
  std::vector<Proc> parts = {parse_seq(lx)};
  while (lx.cur.kind == Token::Bar) {
    lx.advance();
    parts.push_back(parse_seq(lx));
  }
  Proc out = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) out = p_par(parts[i], out);
  return out;
}

}  // namespace

Proc parse_proc(const std::string& text) {
  Lexer lx(text);
  Proc p = parse_par(lx);
  if (lx.cur.kind != Token::End) lx.fail("end of input");
  return p;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_into(const Proc& p, std::ostream& os);

// Parenthesize children whose extent would change under reparsing: new/rec
// swallow everything to their right, and a par cannot sit bare inside an
// input prefix body.
void print_child(const Proc& p, bool in_prefix, std::ostream& os) {
  bool parens = p->kind == ProcKind::New || p->kind == ProcKind::Rec ||
                (in_prefix && p->kind == ProcKind::Par);
  if (parens) os << '(';
  print_into(p, os);
  if (parens) os << ')';
}

void print_into(const Proc& p, std::ostream& os) {
  switch (p->kind) {
    case ProcKind::Input:
      os << p->cell << '?' << p->var << " -> ";
      print_child(p->parts[0], true, os);
      return;
    case ProcKind::Output:
      os << p->cell << '!';
      if (p->expr.is_var) {
        os << p->expr.var;
      } else {
        os << p->expr.value;
      }
      return;
    case ProcKind::Par:
      print_child(p->parts[0], false, os);
      os << " || ";
      print_child(p->parts[1], false, os);
      return;
    case ProcKind::Nil: os << '0'; return;
    case ProcKind::Top: os << "TOP"; return;
    case ProcKind::New:
      os << "new " << p->cell << ". ";
      print_into(p->parts[0], os);
      return;
    case ProcKind::Var: os << p->var; return;
    case ProcKind::Rec:
      os << "rec " << p->var << ". ";
      print_into(p->parts[0], os);
      return;
  }
}

}  // namespace

std::string print_proc(const Proc& p) {
  std::ostringstream os;
  print_into(p, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Well-formedness

namespace {

void collect_cells(const Proc& p, std::set<std::string>& hidden, std::set<std::string>& out) {
  switch (p->kind) {
    case ProcKind::Input:
    case ProcKind::Output:
      if (!hidden.count(p->cell)) out.insert(p->cell);
      if (!p->parts.empty()) collect_cells(p->parts[0], hidden, out);
      return;
    case ProcKind::New: {
      bool added = hidden.insert(p->cell).second;
      collect_cells(p->parts[0], hidden, out);
      if (added) hidden.erase(p->cell);
      return;
    }
    default:
      for (const auto& q : p->parts) collect_cells(q, hidden, out);
      return;
  }
}

// Every occurrence of process variable X must sit under an input prefix.
bool guarded_in(const Proc& p, const std::string& x, bool under_input) {
  switch (p->kind) {
    case ProcKind::Var: return p->var != x || under_input;
    case ProcKind::Input: return guarded_in(p->parts[0], x, true);
    case ProcKind::Rec:
      if (p->var == x) return true;  // shadowed
      return guarded_in(p->parts[0], x, under_input);
    default:
      for (const auto& q : p->parts) {
        if (!guarded_in(q, x, under_input)) return false;
      }
      return true;
  }
}

void check_rec(const Proc& p, std::set<std::string>& vvars, std::set<std::string>& pvars) {
  switch (p->kind) {
    case ProcKind::Input: {
      bool added = vvars.insert(p->var).second;
      check_rec(p->parts[0], vvars, pvars);
      if (added) vvars.erase(p->var);
      return;
    }
    case ProcKind::Output:
      if (p->expr.is_var && !vvars.count(p->expr.var)) {
        throw ProcError("process: unbound variable '" + p->expr.var + "'");
      }
      return;
    case ProcKind::Var:
      if (!pvars.count(p->var)) {
        throw ProcError("process: unbound process variable '" + p->var + "'");
      }
      return;
    case ProcKind::Rec: {
      if (!guarded_in(p->parts[0], p->var, false)) {
        throw ProcError("process: unguarded recursion on '" + p->var + "'");
      }
      bool added = pvars.insert(p->var).second;
      check_rec(p->parts[0], vvars, pvars);
      if (added) pvars.erase(p->var);
      return;
    }
    default:
      for (const auto& q : p->parts) check_rec(q, vvars, pvars);
      return;
  }
}

}  // namespace

std::set<std::string> free_cells(const Proc& p) {
  std::set<std::string> hidden, out;
  collect_cells(p, hidden, out);
  return out;
}

void check_proc(const Proc& p) {
  std::set<std::string> vvars, pvars;
  check_rec(p, vvars, pvars);
}

Proc subst_value(const Proc& p, const std::string& var, size_t value) {
  switch (p->kind) {
    case ProcKind::Input:
      if (p->var == var) return p;  // shadowed
      return p_input(p->cell, p->var, subst_value(p->parts[0], var, value));
    case ProcKind::Output:
      if (p->expr.is_var && p->expr.var == var) return p_out_lit(p->cell, value);
      return p;
    case ProcKind::Par:
      return p_par(subst_value(p->parts[0], var, value),
                   subst_value(p->parts[1], var, value));
    case ProcKind::New: return p_new(p->cell, subst_value(p->parts[0], var, value));
    case ProcKind::Rec: return p_rec(p->var, subst_value(p->parts[0], var, value));
    default: return p;
  }
}

Proc subst_procvar(const Proc& p, const std::string& name, const Proc& body) {
  switch (p->kind) {
    case ProcKind::Var: return p->var == name ? body : p;
    case ProcKind::Input: return p_input(p->cell, p->var, subst_procvar(p->parts[0], name, body));
    case ProcKind::Par:
      return p_par(subst_procvar(p->parts[0], name, body),
                   subst_procvar(p->parts[1], name, body));
    case ProcKind::New: return p_new(p->cell, subst_procvar(p->parts[0], name, body));
    case ProcKind::Rec:
      if (p->var == name) return p;  // shadowed
      return p_rec(p->var, subst_procvar(p->parts[0], name, body));
    default: return p;
  }
}

}  // namespace plab
