#ifndef SETTOP_ACCEPTANCE_HPP
#define SETTOP_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace settop::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// The nine batch verifications, each exhaustive or seeded exactly as
// specified by its tolerance.  Criteria 3, 7 and 8 consume the seed; the
// others are deterministic regardless.
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_all(std::uint64_t seed);

}  // namespace settop::acceptance

#endif  // SETTOP_ACCEPTANCE_HPP
