#include "degmc/rng.hpp"

namespace degmc {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : mix_state_(seed) {
  std::uint64_t s = seed;
  engine_.seed(splitmix64(s));
  mix_state_ = s;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // rejection keeps the draw exactly uniform and portable across stdlibs
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Rng Rng::split() {
  return Rng(splitmix64(mix_state_) ^ engine_());
}

}  // namespace degmc
