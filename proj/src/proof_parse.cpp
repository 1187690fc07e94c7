#include "plab/proof_parse.hpp"

#include <cctype>
#include <set>

namespace plab {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

const std::string& head(const SExpr& e) {
  static const std::string none;
  if (!e.is_list || e.items.empty() || e.items[0].is_list) return none;
  return e.items[0].sym;
}

void collect_tags(const SExpr& e, std::set<std::string>& tags) {
  if (!e.is_list) return;
  if (!e.items.empty() && !e.items[0].is_list) tags.insert(e.items[0].sym);
  for (const auto& i : e.items) collect_tags(i, tags);
}

size_t leftmost(const Sequent& s, const Formula& f, const std::string& what) {
  for (size_t k = 0; k < s.size(); ++k) {
    if (formula_equal(s[k], f)) return k;
  }
  throw ProofError("cut: premise " + print_sequent(s) + " has no occurrence of " +
                   print_formula(f) + " (" + what + ")");
}

}  // namespace

size_t parse_position(const SExpr& e, const std::string& rule) {
  if (e.is_list || !all_digits(e.sym)) {
    throw ProofError(rule + ": expected a 1-based position, got '" + sexpr_to_text(e) + "'");
  }
  size_t v = std::stoul(e.sym);
  if (v == 0) throw ProofError(rule + ": positions are 1-based");
  return v - 1;
}

Formula parse_formula_arg(const SExpr& e, const std::string& rule) {
  std::string text = sexpr_to_text(e);
  try {
    return parse_formula(text);
  } catch (const ParseError& err) {
    throw ProofError(rule + ": bad formula '" + text + "': " + err.what());
  }
}

ProofSystem detect_system(const SExpr& e) {
  static const std::set<std::string> foc_only = {"foc",     "shiftR",  "shiftL",
                                                "cutS",    "cutR",    "tensorS",
                                                "tensorL", "plusSL",  "plusSR"};
  static const std::set<std::string> mall_only = {"cut", "tensorR", "parR", "plusR", "withR"};
  std::set<std::string> tags;
  collect_tags(e, tags);
  for (const auto& t : tags) {
    if (foc_only.count(t)) return ProofSystem::Foc;
  }
  for (const auto& t : tags) {
    if (mall_only.count(t)) return ProofSystem::Mall;
  }
  return ProofSystem::Mall;
}

MallProof mall_proof_from_sexpr(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) {
    throw ProofError("expected a rule application, got '" + sexpr_to_text(e) + "'");
  }
  const std::string& tag = head(e);
  const auto& it = e.items;
  auto arity = [&](size_t n) {
    if (it.size() != n) {
      throw ProofError(tag + ": expected " + std::to_string(n - 1) + " arguments in '" +
                       sexpr_to_text(e) + "'");
    }
  };

  if (tag == "id") {
    arity(2);
    return mk_id(parse_formula_arg(it[1], tag));
  }
  if (tag == "cut") {
    if (it.size() == 4) {
      Formula f = parse_formula_arg(it[1], tag);
      MallProof p1 = mall_proof_from_sexpr(it[2]);
      MallProof p2 = mall_proof_from_sexpr(it[3]);
      size_t i = leftmost(p1->endsequent, f, "left premise");
      size_t j = leftmost(p2->endsequent, negate(f), "right premise");
      return mk_cut(f, p1, p2, i, j);
    }
    arity(6);
    Formula f = parse_formula_arg(it[1], tag);
    size_t i = parse_position(it[2], tag), j = parse_position(it[3], tag);
    return mk_cut(f, mall_proof_from_sexpr(it[4]), mall_proof_from_sexpr(it[5]), i, j);
  }
  if (tag == "tensorR") {
    arity(5);
    return mk_tensorR(parse_position(it[1], tag), parse_position(it[2], tag),
                      mall_proof_from_sexpr(it[3]), mall_proof_from_sexpr(it[4]));
  }
  if (tag == "parR") {
    if (it.size() == 3) {
      size_t i = parse_position(it[1], tag);
      return mk_parR(i, i + 1, mall_proof_from_sexpr(it[2]));
    }
    arity(4);
    return mk_parR(parse_position(it[1], tag), parse_position(it[2], tag),
                   mall_proof_from_sexpr(it[3]));
  }
  if (tag == "plusR" || tag == "plusL") {
    MallProof p;
    size_t i;
    Formula other;
    if (it.size() == 3) {
      i = parse_position(it[1], tag);
      p = mall_proof_from_sexpr(it[2]);
      if (i >= p->endsequent.size()) {
        throw ProofError(tag + ": position " + std::to_string(i + 1) + " out of range");
      }
      other = p->endsequent[i];
    } else {
      arity(4);
      i = parse_position(it[1], tag);
      other = parse_formula_arg(it[2], tag);
      p = mall_proof_from_sexpr(it[3]);
    }
    return tag == "plusR" ? mk_plusR(i, other, p) : mk_plusL(i, other, p);
  }
  if (tag == "withR") {
    arity(4);
    return mk_withR(parse_position(it[1], tag), mall_proof_from_sexpr(it[2]),
                    mall_proof_from_sexpr(it[3]));
  }
  throw ProofError("unknown rule tag '" + tag + "'");
}

MallProof parse_mall_proof(const std::string& text) {
  return mall_proof_from_sexpr(parse_sexpr(text));
}

}  // namespace plab
