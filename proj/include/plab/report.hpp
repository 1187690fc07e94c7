#pragma once
// Command reports: every CLI command produces one Report — a list of named
// pass/fail verdicts plus a JSON artifact payload (tables, traces, boards).
// A report renders either as indented text or as a JSON document, and the
// process exit code is 0 exactly when every verdict passes.

#include <string>
#include <vector>

#include <json.hpp>

namespace plab {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;  // diagnostic on failure, context on success; may be empty
};

struct Report {
  std::string command;
  std::vector<Verdict> verdicts;
  nlohmann::json artifacts = nlohmann::json::object();
};

// Appends a verdict and returns its pass flag (handy for early-out chains).
bool add_verdict(Report& r, const std::string& name, bool pass,
                 const std::string& detail = "");

bool report_ok(const Report& r);

nlohmann::json report_to_json(const Report& r);

// Text layout: one line per verdict, artifacts pretty-printed underneath,
// final "result:" line with the pass count.
std::string report_to_text(const Report& r);

}  // namespace plab
