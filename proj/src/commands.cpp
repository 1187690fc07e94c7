#include "plab/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "plab/blass_interp.hpp"
#include "plab/cg_interp.hpp"
#include "plab/cgame.hpp"
#include "plab/closure.hpp"
#include "plab/cut_elim.hpp"
#include "plab/dom.hpp"
#include "plab/foc.hpp"
#include "plab/formula.hpp"
#include "plab/goi.hpp"
#include "plab/parse.hpp"
#include "plab/proc.hpp"
#include "plab/proc_sem.hpp"
#include "plab/proof.hpp"
#include "plab/proof_parse.hpp"
#include "plab/sexpr.hpp"
#include "plab/table1.hpp"

namespace plab {

namespace {

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The three embedded proofs behind `counterexample` and `selftest`: two
// double-injection proofs differing only in rule order, and the case split
// that distinguishes them under sequential composition.
constexpr const char* kSigmaText = "(plusR 1 (plusR 2 (id ~a)))";
constexpr const char* kTauText =
    "(withR 2 (withR 1 (id ~a) (id ~a)) (withR 1 (id ~a) (id ~a)))";
constexpr const char* kThetaText = "(plusR 2 (plusR 1 (id ~a)))";

nlohmann::json closure_table_json(const ClosureOp& c) {
  nlohmann::json rows = nlohmann::json::array();
  size_t n = dom_size(c.dom);
  if (n > 4096) return nlohmann::json{{"omitted", "domain has " + std::to_string(n) + " elements"}};
  for (size_t x = 0; x < n; ++x) {
    size_t y = clo_apply(c, x);
    rows.push_back({{"in", print_elem(c.dom, x)},
                    {"out", y == dom_top(c.dom) ? std::string("T") : print_elem(c.dom, y)}});
  }
  return rows;
}

nlohmann::json board_json(const Board& b) {
  if (b.top) return nlohmann::json("TOP");
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [cell, value] : b.cells) obj[cell] = value;
  return obj;
}

Board parse_board_arg(const std::string& text) {
  Board b;
  if (text.empty()) return b;
  if (text == "TOP") return board_top();
  std::istringstream in(text);
  std::string entry;
  while (std::getline(in, entry, ',')) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
      throw std::runtime_error("bad --input entry '" + entry + "': expected cell=value");
    std::string cell = entry.substr(0, eq);
    std::string val = entry.substr(eq + 1);
    if (!std::all_of(val.begin(), val.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::runtime_error("bad --input value '" + val + "': expected a number");
    b.cells[cell] = std::stoul(val);
  }
  return b;
}

void max_output_literal(const Proc& p, size_t& m) {
  if (p->kind == ProcKind::Output && !p->expr.is_var) m = std::max(m, p->expr.value);
  for (const Proc& q : p->parts) max_output_literal(q, m);
}

}  // namespace

Report cmd_check(const std::string& path, const std::string& system) {
  Report r;
  r.command = "check";
  SExpr e = parse_sexpr(slurp_file(path));
  std::string sys = system;
  if (sys == "auto") sys = detect_system(e) == ProofSystem::Foc ? "foc" : "mall";
  r.artifacts["path"] = path;
  r.artifacts["system"] = sys;
  if (sys == "mall") {
    try {
      MallProof p = mall_proof_from_sexpr(e);
      add_verdict(r, "proof checks (plain calculus)", true,
                  print_sequent(p->endsequent));
      r.artifacts["endsequent"] = print_sequent(p->endsequent);
      r.artifacts["rules"] = proof_size(p);
      r.artifacts["cut_free"] = is_cut_free(p);
    } catch (const ProofError& err) {
      add_verdict(r, "proof checks (plain calculus)", false, err.what());
    }
  } else if (sys == "foc") {
    try {
      FocProof p = foc_proof_from_sexpr(e);
      add_verdict(r, "proof checks (focussed calculus)", true,
                  print_foc_sequent(p->endsequent));
      r.artifacts["endsequent"] = print_foc_sequent(p->endsequent);
    } catch (const ProofError& err) {
      add_verdict(r, "proof checks (focussed calculus)", false, err.what());
    }
  } else {
    throw std::runtime_error("unknown proof system '" + system + "' (use mall, foc or auto)");
  }
  return r;
}

Report cmd_interp(const std::string& path, const std::string& model) {
  Report r;
  r.command = "interp";
  MallProof p = parse_mall_proof(slurp_file(path));
  r.artifacts["path"] = path;
  r.artifacts["model"] = model;
  r.artifacts["endsequent"] = print_sequent(p->endsequent);
  if (model == "blass") {
    try {
      BlassDen den = interp_proof_blass(p);
      add_verdict(r, "proof interprets in the sequential model", true);
      add_verdict(r, "strategy is total on the endsequent game",
                  validate_strategy(den.game, Pol::P, den.strat));
      r.artifacts["strategy"] = print_strategy(den.strat);
      r.artifacts["positions"] = count_positions(den.game);
      auto fm = first_move(den.strat);
      if (fm)
        r.artifacts["first_move"] = print_move(*fm);
      else
        r.artifacts["first_move"] = nullptr;
    } catch (const std::exception& err) {
      add_verdict(r, "proof interprets in the sequential model", false, err.what());
    }
  } else if (model == "concurrent") {
    ClosureOp c = interpret_proof_cgame(p);
    add_verdict(r, "table is a closure operator", is_closure(c));
    r.artifacts["domain_size"] = dom_size(c.dom);
    r.artifacts["table"] = closure_table_json(c);
  } else {
    throw std::runtime_error("unknown model '" + model + "' (use blass or concurrent)");
  }
  return r;
}

Report cmd_compose(const std::string& left_path, const std::string& right_path,
                   const std::string& model) {
  Report r;
  r.command = "compose";
  MallProof lp = parse_mall_proof(slurp_file(left_path));
  MallProof rp = parse_mall_proof(slurp_file(right_path));
  if (lp->endsequent.empty() || rp->endsequent.empty())
    throw std::runtime_error("compose: a premise has an empty endsequent");
  Formula cutf = lp->endsequent.back();
  bool dual_ok = formula_equal(negate(cutf), rp->endsequent.front());
  add_verdict(r, "cut interfaces are dual", dual_ok,
              print_formula(cutf) + " against " + print_formula(rp->endsequent.front()));
  if (!dual_ok) return r;
  MallProof cut = mk_cut(cutf, lp, rp, lp->endsequent.size() - 1, 0);
  r.artifacts["endsequent"] = print_sequent(cut->endsequent);
  r.artifacts["cut_formula"] = print_formula(cutf);
  r.artifacts["model"] = model;
  if (model == "blass") {
    try {
      BlassDen den = interp_proof_blass(cut);
      add_verdict(r, "composite strategy is total", validate_strategy(den.game, Pol::P, den.strat));
      BlassDen nf = interp_proof_blass(eliminate_cuts(cut));
      add_verdict(r, "composition agrees with cut elimination",
                  strategy_equal(den.strat, nf.strat));
      r.artifacts["strategy"] = print_strategy(den.strat);
      auto fm = first_move(den.strat);
      r.artifacts["first_move"] = fm ? nlohmann::json(print_move(*fm)) : nlohmann::json(nullptr);
    } catch (const std::exception& err) {
      add_verdict(r, "composite interprets in the sequential model", false, err.what());
    }
  } else if (model == "concurrent") {
    try {
      ClosureOp sig = interpret_proof_cgame(lp);
      ClosureOp tau = interpret_proof_cgame(rp);
      ClosureOp comp = compose_closures(sig, tau);
      add_verdict(r, "composite table is a closure operator", is_closure(comp));
      add_verdict(r, "composite equals the interpreted cut",
                  closure_equal(comp, interpret_proof_cgame(cut)));
      r.artifacts["table"] = closure_table_json(comp);
    } catch (const std::exception& err) {
      add_verdict(r, "composite interprets in the concurrent model", false, err.what());
    }
  } else {
    throw std::runtime_error("unknown model '" + model + "' (use blass or concurrent)");
  }
  return r;
}

Report cmd_counterexample() {
  Report r;
  r.command = "counterexample";

  MallProof sigma = parse_mall_proof(kSigmaText);
  MallProof tau = parse_mall_proof(kTauText);
  MallProof theta = parse_mall_proof(kThetaText);
  Formula plus = parse_formula("(a + a)");
  Formula with = parse_formula("(a & a)");

  // ((sigma; tau); theta) and (sigma; (tau; theta)) as double-cut proofs.
  MallProof left = mk_cut(with, mk_cut(plus, sigma, tau, 1, 0), theta, 1, 0);
  MallProof right = mk_cut(plus, sigma, mk_cut(with, tau, theta, 1, 0), 1, 0);

  // Sequential back-end: the bracketings disagree, and they open on
  // opposite sides of the composite pairing.
  BlassDen dl = interp_proof_blass(left);
  BlassDen dr = interp_proof_blass(right);
  StrategyTree s1 = interp_proof_blass(sigma).strat;
  StrategyTree s3 = interp_proof_blass(theta).strat;
  add_verdict(r, "sequential: the two bracketings denote different strategies",
              !strategy_equal(dl.strat, dr.strat));
  auto fml = first_move(dl.strat);
  auto fmr = first_move(dr.strat);
  add_verdict(r, "sequential: left bracketing opens in the second component",
              fml.has_value() && (*fml)->kind == MKind::SideR,
              fml ? print_move(*fml) : "no opening move");
  add_verdict(r, "sequential: right bracketing opens in the first component",
              fmr.has_value() && (*fmr)->kind == MKind::SideL,
              fmr ? print_move(*fmr) : "no opening move");
  add_verdict(r, "sequential: left bracketing collapses to the third strategy",
              strategy_equal(dl.strat, s3));
  add_verdict(r, "sequential: right bracketing collapses to the first strategy",
              strategy_equal(dr.strat, s1));

  // Concurrent back-end: the same cuts as closure composition.
  ClosureOp c = interpret_proof_cgame(sigma);
  ClosureOp d = interpret_proof_cgame(tau);
  ClosureOp e = interpret_proof_cgame(theta);
  ClosureOp l3 = compose_closures(compose_closures(c, d), e);
  ClosureOp r3 = compose_closures(c, compose_closures(d, e));
  add_verdict(r, "concurrent: the two bracketings have identical tables",
              closure_equal(l3, r3));
  add_verdict(r, "concurrent: both equal the first factor", closure_equal(l3, c));
  add_verdict(r, "concurrent: both equal the last factor", closure_equal(r3, e));
  add_verdict(r, "concurrent: the composites are closure operators",
              is_closure(l3) && is_closure(r3));

  r.artifacts["sequential"] = {
      {"left_strategy", print_strategy(dl.strat)},
      {"right_strategy", print_strategy(dr.strat)},
      {"left_first_move", fml ? nlohmann::json(print_move(*fml)) : nlohmann::json(nullptr)},
      {"right_first_move", fmr ? nlohmann::json(print_move(*fmr)) : nlohmann::json(nullptr)},
  };
  r.artifacts["concurrent"] = {{"domain_size", dom_size(l3.dom)},
                               {"table", closure_table_json(l3)}};
  return r;
}

Report cmd_table1() {
  Report r;
  r.command = "table1";
  // Reference column: first mover for each polarity row, rows in binary
  // order over (A, B, C, D) with O before P.
  static const char* kExpected[16] = {"O", "theta", "O", "tau", "O", "ambiguous",
                                      "O", "sigma", "O", "O",   "O", "O",
                                      "O", "O",     "O", "O"};
  std::vector<Table1Row> rows = table1_rows();
  nlohmann::json printed = nlohmann::json::array();
  size_t ambiguous = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string pols;
    for (Pol p : rows[i].pol) pols += pol_char(p);
    add_verdict(r, "row " + std::to_string(i) + " (" + pols + ") first mover",
                rows[i].initial_mover == kExpected[i],
                rows[i].initial_mover);
    printed.push_back(print_table1_row(rows[i]));
    ambiguous += rows[i].initial_mover == "ambiguous";
  }
  add_verdict(r, "exactly one row is ambiguous",
              ambiguous == 1 && rows.size() == 16 && rows[5].initial_mover == "ambiguous",
              std::to_string(ambiguous) + " ambiguous row(s)");
  r.artifacts["rows"] = std::move(printed);
  return r;
}

Report cmd_goi_exec(const std::string& path) {
  Report r;
  r.command = "goi exec";
  MallProof p = parse_mall_proof(slurp_file(path));
  r.artifacts["path"] = path;
  r.artifacts["endsequent"] = print_sequent(p->endsequent);
  Linking l;
  try {
    l = linking_of_proof(p);
  } catch (const std::exception& err) {
    add_verdict(r, "proof is multiplicative (id, parR, tensorR, cut)", false, err.what());
    return r;
  }
  add_verdict(r, "proof is multiplicative (id, parR, tensorR, cut)", true,
              print_linking(l));
  Linking ex = execute_linking(l);
  add_verdict(r, "execution eliminates every cut pair",
              ex.cuts.empty() && ex.n_total == ex.n_external, print_linking(ex));
  add_verdict(r, "executed linking induces the proof's concurrent meaning",
              closure_equal(closure_of_linking(ex), interpret_proof_cgame(p)));
  r.artifacts["before"] = print_linking(l);
  r.artifacts["after"] = print_linking(ex);
  r.artifacts["permutation"] = permutation_table(ex);
  return r;
}

Report cmd_proc_run(const std::string& path, const std::string& input) {
  Report r;
  r.command = "proc run";
  Proc p = parse_proc(slurp_file(path));
  Board in = parse_board_arg(input);
  r.artifacts["path"] = path;
  r.artifacts["input"] = board_json(in);
  try {
    check_proc(p);
    add_verdict(r, "process is closed with guarded recursion", true);
  } catch (const ProcError& err) {
    add_verdict(r, "process is closed with guarded recursion", false, err.what());
    return r;
  }
  r.artifacts["normal_form"] = print_proc(normalize_struct(p));
  Board out;
  try {
    out = run(p, in);
    add_verdict(r, "reduction reaches a unique terminal board", true, print_board(out));
  } catch (const std::exception& err) {
    add_verdict(r, "reduction reaches a unique terminal board", false, err.what());
    return r;
  }
  r.artifacts["board"] = board_json(out);

  // Cross-check against the denotational semantics when the board lattice
  // stays enumerable.
  std::vector<std::string> cells;
  for (const std::string& c : free_cells(p)) cells.push_back(c);
  if (!in.top)
    for (const auto& [c, v] : in.cells) cells.push_back(c);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  size_t max_val = 2;
  max_output_literal(p, max_val);
  if (!in.top)
    for (const auto& [c, v] : in.cells) max_val = std::max(max_val, v);
  size_t n_values = max_val + 1;
  double lattice = 1;
  for (size_t i = 0; i < cells.size(); ++i) lattice *= double(n_values) + 1;
  if (lattice <= 100000.0) {
    Dom d = board_dom(cells, n_values);
    ClosureOp den = denote(p, cells, n_values);
    Board via = decode_board(d, cells, clo_apply(den, encode_board(d, cells, in)));
    add_verdict(r, "run agrees with the denotational semantics at this input",
                board_equal(out, via), print_board(via));
  } else {
    r.artifacts["denotation_check"] = "skipped: board lattice too large";
  }
  return r;
}

Report cmd_selftest(std::uint64_t seed) {
  Report r;
  r.command = "selftest";
  r.artifacts["seed"] = seed;
  std::mt19937_64 rng(seed);

  // Random formula generator over two atoms, bounded depth.
  std::function<Formula(int)> gen = [&](int depth) -> Formula {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
    switch (pick(rng)) {
      case 0: return f_atom(rng() & 1 ? "a" : "b");
      case 1: return f_natom(rng() & 1 ? "a" : "b");
      case 2: return f_tensor(gen(depth - 1), gen(depth - 1));
      case 3: return f_par(gen(depth - 1), gen(depth - 1));
      case 4: return f_plus(gen(depth - 1), gen(depth - 1));
      default: return f_with(gen(depth - 1), gen(depth - 1));
    }
  };

  {
    bool ok = true;
    const size_t kFormulas = 200;
    for (size_t i = 0; i < kFormulas && ok; ++i) {
      Formula f = gen(3);
      ok = ok && formula_equal(negate(negate(f)), f);
      ok = ok && formula_equal(parse_formula(print_formula(f)), f);
      ok = ok && root_polarity(negate(f)) == dual(root_polarity(f));
    }
    add_verdict(r, "negation is an involution and printing round-trips", ok,
                std::to_string(kFormulas) + " random formulas");
  }

  {
    bool ok = true;
    size_t checked = 0;
    auto join_opt = [](const Dom& d, std::optional<size_t> x, size_t y) -> std::optional<size_t> {
      if (!x) return std::nullopt;
      return dom_join(d, *x, y);
    };
    for (size_t i = 0; i < 40 && ok; ++i) {
      Dom d = dom_of_formula(gen(2));
      std::uniform_int_distribution<size_t> el(0, dom_size(d) - 1);
      for (size_t k = 0; k < 20 && ok; ++k) {
        size_t x = el(rng), y = el(rng), z = el(rng);
        ok = ok && dom_join(d, x, x) == std::optional<size_t>(x);
        ok = ok && dom_join(d, x, y) == dom_join(d, y, x);
        ok = ok && join_opt(d, dom_join(d, x, y), z) == join_opt(d, dom_join(d, y, z), x);
        auto j = dom_join(d, x, y);
        ok = ok && (!j || (dom_leq(d, x, *j) && dom_leq(d, y, *j)));
        ++checked;
      }
    }
    add_verdict(r, "domain joins are idempotent, commutative and associative", ok,
                std::to_string(checked) + " random triples");
  }

  // A pool of closures on one product domain: the three embedded proof
  // denotations plus random join-with-a-point closures.
  ClosureOp c = interpret_proof_cgame(parse_mall_proof(kSigmaText));
  ClosureOp d = interpret_proof_cgame(parse_mall_proof(kTauText));
  ClosureOp e = interpret_proof_cgame(parse_mall_proof(kThetaText));
  std::vector<ClosureOp> pool = {c, d, e, clo_identity(c.dom)};
  {
    bool ok = true;
    std::uniform_int_distribution<size_t> el(0, dom_size(c.dom) - 1);
    for (size_t i = 0; i < 4; ++i) {
      size_t point = el(rng);
      std::vector<size_t> base;
      for (size_t x = 0; x < dom_size(c.dom); ++x) {
        auto j = dom_join(c.dom, x, point);
        base.push_back(j ? *j : dom_top(c.dom));
      }
      base.push_back(dom_top(c.dom));
      ClosureOp lifted = lift_function(c.dom, base);
      ok = ok && is_closure(lifted);
      pool.push_back(lifted);
    }
    add_verdict(r, "lifted join-with-a-point functions are closure operators", ok,
                "4 random points");
  }

  {
    bool ok = true;
    size_t triples = 0;
    for (const ClosureOp& s : pool)
      for (const ClosureOp& t : pool)
        for (const ClosureOp& u : pool) {
          ok = ok && closure_equal(compose_closures(compose_closures(s, t), u),
                                   compose_closures(s, compose_closures(t, u)));
          ++triples;
          if (!ok) break;
        }
    add_verdict(r, "closure composition is associative across the pool", ok,
                std::to_string(triples) + " triples");
  }

  {
    bool ok = true;
    size_t pairs = 0;
    for (const ClosureOp& s : pool)
      for (const ClosureOp& t : pool) {
        ok = ok && play_closures(s, t) == play_closures(t, s);
        ++pairs;
      }
    add_verdict(r, "playing two closures is symmetric", ok,
                std::to_string(pairs) + " pairs");
  }

  {
    bool ok = true;
    size_t boards = 0;
    std::vector<Proc> procs = {copycat_process({"1"}),
                               parse_proc("c?x -> d!x"),
                               parse_proc("c!1 || (c?x -> a!x) || (c?y -> b!y)")};
    for (const Proc& p : procs) {
      std::set<std::string> fc = free_cells(p);
      std::vector<std::string> cells(fc.begin(), fc.end());
      Dom bd = board_dom(cells);
      ClosureOp den = denote(p, cells);
      std::uniform_int_distribution<size_t> el(0, dom_size(bd) - 1);
      for (size_t k = 0; k < 25 && ok; ++k) {
        size_t x = el(rng);
        ok = ok && board_equal(run(p, decode_board(bd, cells, x)),
                               decode_board(bd, cells, clo_apply(den, x)));
        ++boards;
      }
    }
    add_verdict(r, "process runs agree with their denotations", ok,
                std::to_string(boards) + " sampled boards");
  }
  return r;
}

}  // namespace plab
