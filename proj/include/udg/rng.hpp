#pragma once

#include <cstdint>
#include <random>

namespace udg {

// Deterministic random source. Sampling is done from raw mt19937_64 bits so
// that results do not depend on standard-library distribution internals and
// identical seeds reproduce identical runs everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // uniform in [0, 1) with 53-bit resolution
  double uniform01() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n), n > 0
  std::uint64_t below(std::uint64_t n);

  // standard normal via polar Box-Muller
  double gaussian();

  // independent stream derived from this one's seed material and a salt
  Rng fork(std::uint64_t salt);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// splitmix64 finalizer; used for seed derivation
std::uint64_t mix64(std::uint64_t x);

}  // namespace udg
