// plab — proofs of multiplicative-additive linear logic under two game
// semantics (sequential strategies and concurrent closure operators),
// with a focussed checker, axiom-linking execution, and a small
// shared-memory process calculus.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "plab/commands.hpp"
#include "plab/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Two game semantics for multiplicative-additive linear logic"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::optional<plab::Report> report;
  std::string command_name = argc > 1 ? argv[1] : "";

  std::string check_path, check_system = "auto";
  CLI::App* check = app.add_subcommand("check", "Check a proof file (.llp)");
  check->fallthrough();
  check->add_option("path", check_path, "Proof file")->required();
  check->add_option("--system", check_system, "Proof system: mall, foc or auto")
      ->check(CLI::IsMember({"mall", "foc", "auto"}));
  check->callback([&] { report = plab::cmd_check(check_path, check_system); });

  std::string interp_path, interp_model = "concurrent";
  CLI::App* interp = app.add_subcommand("interp", "Interpret a proof in one model");
  interp->fallthrough();
  interp->add_option("path", interp_path, "Proof file")->required();
  interp->add_option("--model", interp_model, "Back-end: blass or concurrent")
      ->check(CLI::IsMember({"blass", "concurrent"}));
  interp->callback([&] { report = plab::cmd_interp(interp_path, interp_model); });

  std::string comp_left, comp_right, comp_model = "concurrent";
  CLI::App* compose = app.add_subcommand(
      "compose", "Cut two proofs together (last formula of the first against "
                 "first formula of the second) and interpret the composite");
  compose->fallthrough();
  compose->add_option("left", comp_left, "Left proof file")->required();
  compose->add_option("right", comp_right, "Right proof file")->required();
  compose->add_option("--model", comp_model, "Back-end: blass or concurrent")
      ->check(CLI::IsMember({"blass", "concurrent"}));
  compose->callback([&] { report = plab::cmd_compose(comp_left, comp_right, comp_model); });

  CLI::App* counter = app.add_subcommand(
      "counterexample", "Compose three strategies in both bracketings: "
                        "sequentially they differ, concurrently they agree");
  counter->fallthrough();
  counter->callback([&] { report = plab::cmd_counterexample(); });

  CLI::App* table1 = app.add_subcommand(
      "table1", "Sixteen-row analysis of who moves first in a three-strategy chain");
  table1->fallthrough();
  table1->callback([&] { report = plab::cmd_table1(); });

  CLI::App* goi = app.add_subcommand("goi", "Axiom-linking views of multiplicative proofs");
  goi->require_subcommand(1);
  goi->fallthrough();
  std::string goi_path;
  CLI::App* goi_exec = goi->add_subcommand("exec", "Execute the cuts of a proof's linking");
  goi_exec->fallthrough();
  goi_exec->add_option("path", goi_path, "Proof file")->required();
  goi_exec->callback([&] { report = plab::cmd_goi_exec(goi_path); });

  CLI::App* proc = app.add_subcommand("proc", "Shared-memory process calculus");
  proc->require_subcommand(1);
  proc->fallthrough();
  std::string proc_path, proc_input;
  CLI::App* proc_run = proc->add_subcommand("run", "Run a process to its terminal board");
  proc_run->fallthrough();
  proc_run->add_option("path", proc_path, "Process file (.proc)")->required();
  proc_run->add_option("--input", proc_input,
                       "Initial board as cell=value,... (or TOP)");
  proc_run->callback([&] { report = plab::cmd_proc_run(proc_path, proc_input); });

  std::uint64_t seed = 2026;
  CLI::App* selftest = app.add_subcommand("selftest", "Seeded randomized property sweep");
  selftest->fallthrough();
  selftest->add_option("--seed", seed, "Random seed")->envname("POLARITY_LAB_SEED");
  selftest->callback([&] { report = plab::cmd_selftest(seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    if (format == "json") {
      nlohmann::json err = {{"command", command_name}, {"error", e.what()}, {"ok", false}};
      std::printf("%s\n", err.dump(2).c_str());
    } else {
      std::fprintf(stderr, "error: %s\n", e.what());
    }
    return 2;
  }

  if (!report) return 0;
  if (format == "json")
    std::printf("%s\n", plab::report_to_json(*report).dump(2).c_str());
  else
    std::fputs(plab::report_to_text(*report).c_str(), stdout);
  return plab::report_ok(*report) ? 0 : 1;
}
