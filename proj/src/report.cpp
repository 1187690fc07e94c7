#include "plab/report.hpp"

#include <sstream>

namespace plab {

bool add_verdict(Report& r, const std::string& name, bool pass,
                 const std::string& detail) {
  r.verdicts.push_back({name, pass, detail});
  return pass;
}

bool report_ok(const Report& r) {
  for (const Verdict& v : r.verdicts)
    if (!v.pass) return false;
  return true;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const Verdict& v : r.verdicts) {
    nlohmann::json jv = {{"name", v.name}, {"pass", v.pass}};
    if (!v.detail.empty()) jv["detail"] = v.detail;
    verdicts.push_back(std::move(jv));
  }
  return nlohmann::json{{"command", r.command},
                        {"verdicts", std::move(verdicts)},
                        {"artifacts", r.artifacts},
                        {"ok", report_ok(r)}};
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  size_t passed = 0;
  for (const Verdict& v : r.verdicts) {
    passed += v.pass;
    out << "  [" << (v.pass ? "pass" : "FAIL") << "] " << v.name;
    if (!v.detail.empty()) out << " — " << v.detail;
    out << "\n";
  }
  if (!r.artifacts.empty()) {
    out << "artifacts:\n";
    std::istringstream lines(r.artifacts.dump(2));
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
  }
  out << "result: " << (report_ok(r) ? "PASS" : "FAIL") << " (" << passed << "/"
      << r.verdicts.size() << " verdicts)\n";
  return out.str();
}

}  // namespace plab
