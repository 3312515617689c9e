#pragma once

#include <cstdint>

namespace lapbound {

// Counter-indexed access into the SplitMix64 output stream (Steele, Lea,
// Flood 2014): element `index` of the stream seeded by `seed`. Pure function
// of (seed, index), so any element can be drawn in any order by any thread
// with identical results.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Deterministic counter-based random stream.
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t index) const { return splitmix64_at(seed_, index); }
  double u01(std::uint64_t index) const { return uniform01(bits(index)); }

  // Uniform integer in [lo, hi] (inclusive); span must be modest, bias is
  // negligible for the generator's uses here.
  int uniform_int(std::uint64_t index, int lo, int hi) const {
    return lo + static_cast<int>(bits(index) % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Independent sub-stream for a separate generation phase.
  CounterStream fork(std::uint64_t tag) const {
    return CounterStream(splitmix64_at(seed_ ^ 0xD1B54A32D192ED03ULL, tag));
  }

 private:
  std::uint64_t seed_;
};

// Per-trial seed derivation used by every randomized driver.
inline std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return splitmix64_at(master_seed, trial_index);
}

}  // namespace lapbound
