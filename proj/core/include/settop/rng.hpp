#ifndef SETTOP_RNG_HPP
#define SETTOP_RNG_HPP

#include <cstdint>

namespace settop {

// splitmix64; identical sequences on every platform, which keeps seeded
// reports byte-stable.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return next() & 1u; }

private:
  std::uint64_t state_;
};

}  // namespace settop

#endif  // SETTOP_RNG_HPP
