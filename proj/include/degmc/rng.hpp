#pragma once

#include <cstdint>
#include <random>

namespace degmc {

// mt19937_64 seeded through splitmix64; split() derives an independent stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (engine_() >> 63) != 0; }
  double uniform01();
  Rng split();

 private:
  std::mt19937_64 engine_;
  std::uint64_t mix_state_;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace degmc
