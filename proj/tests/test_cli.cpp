// The command layer: report structure, verdict outcomes, artifact payloads,
// and one end-to-end run of the installed binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "plab/commands.hpp"
#include "plab/report.hpp"

using namespace plab;

static std::string corpus(const std::string& rel) {
  return std::string(PLAB_CORPUS_DIR) + "/" + rel;
}

static const Verdict* find_verdict(const Report& r, const std::string& needle) {
  for (const Verdict& v : r.verdicts)
    if (v.name.find(needle) != std::string::npos) return &v;
  return nullptr;
}

TEST_CASE("check reports pass and fail with diagnostics") {
  Report ok = cmd_check(corpus("pi1.llp"), "mall");
  CHECK(report_ok(ok));
  CHECK(ok.command == "check");
  CHECK(ok.artifacts["endsequent"] == "|- (~a + ~a), (a + a)");
  CHECK(ok.artifacts["cut_free"] == true);

  // System auto-detection from the rule tags.
  Report foc = cmd_check(corpus("pi1p.llp"), "auto");
  CHECK(report_ok(foc));
  CHECK(foc.artifacts["system"] == "foc");

  Report bad = cmd_check(corpus("bad_last_plusR.llp"), "foc");
  CHECK_FALSE(report_ok(bad));
  REQUIRE(bad.verdicts.size() == 1);
  CHECK(bad.verdicts[0].detail.find("stoup") != std::string::npos);

  CHECK_THROWS_AS(cmd_check(corpus("no_such_file.llp"), "mall"), std::runtime_error);
  CHECK_THROWS_AS(cmd_check(corpus("pi1.llp"), "weird"), std::runtime_error);

  // Rendering: text carries the verdict lines, json the structured form.
  std::string text = report_to_text(ok);
  CHECK(text.find("command: check") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);
  nlohmann::json j = report_to_json(bad);
  CHECK(j["ok"] == false);
  CHECK(j["command"] == "check");
  CHECK(j["verdicts"].size() == 1);
  CHECK(j["verdicts"][0]["pass"] == false);
}

TEST_CASE("interp emits strategies and closure tables") {
  Report blass = cmd_interp(corpus("pi1.llp"), "blass");
  CHECK(report_ok(blass));
  CHECK(blass.artifacts["first_move"] == "L(r)");
  CHECK(blass.artifacts["strategy"].get<std::string>().find("out L(r).") == 0);

  // Tensor contexts are outside the sequential back-end: a diagnostic, not a crash.
  Report unsupported = cmd_interp(corpus("goi_id.llp"), "blass");
  CHECK_FALSE(report_ok(unsupported));
  REQUIRE(!unsupported.verdicts.empty());
  CHECK(unsupported.verdicts[0].detail.find("tensorR") != std::string::npos);

  Report conc = cmd_interp(corpus("pi2.llp"), "concurrent");
  CHECK(report_ok(conc));
  CHECK(conc.artifacts["table"].size() == conc.artifacts["domain_size"].get<size_t>());
}

TEST_CASE("compose cuts the interface formulas and cross-checks the composite") {
  Report conc = cmd_compose(corpus("pi1.llp"), corpus("pi2.llp"), "concurrent");
  CHECK(report_ok(conc));
  CHECK(conc.verdicts.size() == 3);
  CHECK(find_verdict(conc, "equals the interpreted cut") != nullptr);

  Report blass = cmd_compose(corpus("pi1.llp"), corpus("pi2.llp"), "blass");
  CHECK(report_ok(blass));
  CHECK(find_verdict(blass, "agrees with cut elimination") != nullptr);

  // Non-dual interfaces stop at the first verdict.
  Report nondual = cmd_compose(corpus("pi1.llp"), corpus("pi3.llp"), "concurrent");
  CHECK_FALSE(report_ok(nondual));
  CHECK(nondual.verdicts.size() == 1);
}

TEST_CASE("counterexample confirms both the failure and the repair") {
  Report r = cmd_counterexample();
  CHECK(report_ok(r));
  CHECK(r.verdicts.size() == 9);
  CHECK(r.artifacts["sequential"]["left_first_move"] == "R(r)");
  CHECK(r.artifacts["sequential"]["right_first_move"] == "L(r)");
  CHECK(r.artifacts["concurrent"]["table"].is_array());
}

TEST_CASE("table1 reproduces the embedded reference rows") {
  Report r = cmd_table1();
  CHECK(report_ok(r));
  CHECK(r.verdicts.size() == 17);  // 16 rows + uniqueness of the ambiguous one
  CHECK(r.artifacts["rows"].size() == 16);
  const Verdict* amb = find_verdict(r, "row 5");
  REQUIRE(amb != nullptr);
  CHECK(amb->detail == "ambiguous");
}

TEST_CASE("goi exec runs the cuts out of a linking") {
  Report r = cmd_goi_exec(corpus("goi_twist_cut_twist.llp"));
  CHECK(report_ok(r));
  CHECK(r.artifacts["before"] ==
        "leaves 4 + 4 internal; links 0-5 1-4 2-7 3-6; cuts 4-6 5-7");
  CHECK(r.artifacts["after"] == "leaves 4; links 0-2 1-3");

  Report additive = cmd_goi_exec(corpus("pi1.llp"));
  CHECK_FALSE(report_ok(additive));
}

TEST_CASE("proc run prints boards and hides restricted cells") {
  Report relay = cmd_proc_run(corpus("relay.proc"), "c=2");
  CHECK(report_ok(relay));
  CHECK(relay.artifacts["board"]["c"] == 2);
  CHECK(relay.artifacts["board"]["d"] == 2);

  Report clash = cmd_proc_run(corpus("clash.proc"), "");
  CHECK(report_ok(clash));
  CHECK(clash.artifacts["board"] == "TOP");

  Report hide = cmd_proc_run(corpus("hide_relay.proc"), "c=1");
  CHECK(report_ok(hide));
  CHECK(hide.artifacts["board"]["c"] == 1);
  CHECK(hide.artifacts["board"]["d"] == 1);
  CHECK(hide.artifacts["board"].size() == 2);  // the hidden cell never leaks

  CHECK_THROWS_AS(cmd_proc_run(corpus("relay.proc"), "c=x"), std::runtime_error);
  CHECK_THROWS_AS(cmd_proc_run(corpus("missing.proc"), ""), std::runtime_error);
}

TEST_CASE("selftest is deterministic for a fixed seed") {
  Report a = cmd_selftest(7);
  Report b = cmd_selftest(7);
  CHECK(report_ok(a));
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(a.verdicts.size() == 6);
}

// ---------------------------------------------------------------------------
// One pass through the real binary: flags, json output, exit codes.
// ---------------------------------------------------------------------------

static std::pair<int, std::string> run_binary(const std::string& args) {
  std::string cmd = std::string(PLAB_BIN_DIR) + "/plab " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST_CASE("the binary speaks json and sets exit codes by verdict") {
  auto [code, out] = run_binary("table1 --format json");
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(out);
  CHECK(j["command"] == "table1");
  CHECK(j["ok"] == true);
  CHECK(j["verdicts"].size() == 17);

  auto [bad_code, bad_out] =
      run_binary("check " + corpus("bad_last_plusR.llp") + " --system foc --format json");
  CHECK(bad_code == 1);
  CHECK(nlohmann::json::parse(bad_out)["ok"] == false);

  auto [err_code, err_out] = run_binary("check " + corpus("missing.llp") + " --format json");
  CHECK(err_code == 2);
  CHECK(nlohmann::json::parse(err_out).contains("error"));

  auto [run_code, run_out] =
      run_binary("proc run " + corpus("rec_relay.proc") + " --input c=2 --format json");
  CHECK(run_code == 0);
  nlohmann::json board = nlohmann::json::parse(run_out)["artifacts"]["board"];
  CHECK(board["c"] == 2);
  CHECK(board["d"] == 2);
}
