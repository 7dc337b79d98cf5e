#include "settop/report.hpp"

#include <sstream>

#include <json.hpp>

namespace settop {

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

void Report::add(std::string name, bool pass, std::string detail,
                 std::vector<std::string> witnesses) {
  add_verdict(std::move(name), pass ? "pass" : "fail", std::move(detail), std::move(witnesses));
}

void Report::add_verdict(std::string name, std::string verdict, std::string detail,
                         std::vector<std::string> witnesses) {
  checks.push_back(Check{std::move(name), std::move(verdict), std::move(detail),
                         std::move(witnesses)});
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["seed"] = seed;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["verdict"] = c.verdict;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (!c.witnesses.empty()) cj["witnesses"] = c.witnesses;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  j["ok"] = ok();
  return j.dump(2) + "\n";
}

std::string Report::to_text(double elapsed_seconds) const {
  std::ostringstream out;
  out << "# " << command << " (seed " << seed << ")\n";
  for (const auto& c : checks) {
    out << (c.verdict == "pass"      ? "PASS"
            : c.verdict == "fail"    ? "FAIL"
            : c.verdict == "vacuous" ? "VACUOUS"
                                     : "OUT-OF-BOUND")
        << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
    for (const auto& w : c.witnesses) out << "        witness: " << w << "\n";
  }
  out << (ok() ? "ok" : "FAILED") << " in " << elapsed_seconds << "s\n";
  return out.str();
}

}  // namespace settop
