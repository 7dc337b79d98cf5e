#include <cstdio>
#include <cstdlib>
#include <string>

#include "settop/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("SETTOP_SEED")) seed = std::strtoull(env, nullptr, 10);
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  bool ok = true;
  for (const auto& r : settop::acceptance::run_all(seed)) {
    std::printf("%s  criterion %d: %s — %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
