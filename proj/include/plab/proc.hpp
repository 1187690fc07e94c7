#pragma once

// A small process calculus with persistent outputs.
//
//   P ::= c?x -> P        receive: read cell c, bind its value to x
//       | c!e             emit: write value e (a literal or a bound variable)
//       | P || Q          parallel composition
//       | 0               inert process
//       | TOP             failure (clash): absorbing for ||
//       | new c. P        hide cell c inside P
//       | X | rec X. P    guarded recursion
//
// Cells are named by identifiers or naturals.  An input prefix's body binds
// tighter than ||, so `c?x -> d!x || e!1` is `(c?x -> d!x) || e!1`; the
// bodies of `new` and `rec` extend as far right as possible.  Recursion must
// be guarded: every occurrence of a process variable sits under at least one
// input prefix of its binder's body.

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace plab {

struct ProcError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ProcKind { Input, Output, Par, Nil, Top, New, Var, Rec };

struct ProcNode;
using Proc = std::shared_ptr<const ProcNode>;

// An output payload: a value literal, or a variable bound by an input prefix.
struct PExpr {
  bool is_var = false;
  size_t value = 0;
  std::string var;
};

struct ProcNode {
  ProcKind kind;
  std::string cell;          // Input/Output/New
  std::string var;           // Input: bound value variable; Var/Rec: process variable
  PExpr expr;                // Output
  std::vector<Proc> parts;   // Par: {left, right}; Input/New/Rec: {body}
};

Proc p_input(const std::string& cell, const std::string& var, Proc body);
Proc p_out_lit(const std::string& cell, size_t value);
Proc p_out_var(const std::string& cell, const std::string& var);
Proc p_par(Proc left, Proc right);
Proc p_nil();
Proc p_top();
Proc p_new(const std::string& cell, Proc body);
Proc p_pvar(const std::string& name);
Proc p_rec(const std::string& name, Proc body);

bool proc_equal(const Proc& a, const Proc& b);

Proc parse_proc(const std::string& text);
std::string print_proc(const Proc& p);

// Cells read or written, with hidden (new-bound) cells excluded.
std::set<std::string> free_cells(const Proc& p);

// Throws ProcError unless the term is closed (no free value or process
// variables) and every recursion is guarded.
void check_proc(const Proc& p);

// Capture-avoiding substitutions (binders shadow).
Proc subst_value(const Proc& p, const std::string& var, size_t value);
Proc subst_procvar(const Proc& p, const std::string& name, const Proc& body);

}  // namespace plab
