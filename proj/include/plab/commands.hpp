#pragma once
// The CLI's command bodies, callable directly from tests.  Each command
// returns a Report; IO and syntax errors throw (nonzero exit at the top
// level), while semantic rejections — a proof that fails its checker, a
// back-end that cannot interpret a rule — become failing verdicts so the
// diagnostic reaches the report.

#include <cstdint>
#include <string>

#include "plab/report.hpp"

namespace plab {

// Checks the proof in `path`.  `system` is "mall", "foc", or "auto"
// (detect from the rule tags used in the file).
Report cmd_check(const std::string& path, const std::string& system);

// Interprets a plain proof in one model: "blass" emits the strategy tree,
// "concurrent" the closure-operator table.
Report cmd_interp(const std::string& path, const std::string& model);

// Cuts the last formula of `left_path`'s endsequent against the first
// formula of `right_path`'s, interprets the cut in the chosen model, and
// cross-checks the composite (against cut elimination in the sequential
// model, against closure composition in the concurrent one).
Report cmd_compose(const std::string& left_path, const std::string& right_path,
                   const std::string& model);

// The associativity story in one command: the three embedded proofs are
// composed in both bracketings in the sequential back-end (distinct
// strategies, distinct opening sides) and in the concurrent back-end
// (identical tables, equal to both outer factors).
Report cmd_counterexample();

// Prints the sixteen-row polarity analysis of a three-strategy chain and
// diffs it against the embedded reference table.
Report cmd_table1();

// Reads the axiom linking off a multiplicative proof, executes its cuts,
// and checks the result against the closure interpretation.
Report cmd_goi_exec(const std::string& path);

// Runs a process to its terminal board.  `input` is "cell=value,..." or
// empty; the final board lands in artifacts["board"] (object, or "TOP").
Report cmd_proc_run(const std::string& path, const std::string& input);

// Seeded randomized property sweep across the library (formula involutions,
// lattice laws, closure laws, play symmetry, process adequacy samples).
Report cmd_selftest(std::uint64_t seed);

}  // namespace plab
