#ifndef SETTOP_REPORT_HPP
#define SETTOP_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace settop {

// One verdict line of a batch run.
struct Check {
  std::string name;
  std::string verdict;  // pass | fail | vacuous | out-of-bound
  std::string detail;
  std::vector<std::string> witnesses;

  bool passed() const { return verdict != "fail"; }
};

// Deterministic run report: the same argv and seed always serialise to the
// same bytes, so timing lives only in the human rendering.
struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool ok() const;
  void add(std::string name, bool pass, std::string detail = "",
           std::vector<std::string> witnesses = {});
  void add_verdict(std::string name, std::string verdict, std::string detail = "",
                   std::vector<std::string> witnesses = {});

  std::string to_json() const;
  std::string to_text(double elapsed_seconds) const;
};

}  // namespace settop

#endif  // SETTOP_REPORT_HPP
