#pragma once

#include <cstdint>
#include <vector>

#include "convextest/point_set.hpp"

namespace convextest {

// 64-bit seed. Every randomized routine takes one explicitly; nothing reads
// global state, so runs are reproducible bit for bit.
struct Seed {
  std::uint64_t value = 0;
};

// splitmix64: tiny, fast, and passes BigCrush-level tests for this use.
// The finalizer is a bijection, which split_seed leans on below.
class Rng {
 public:
  explicit Rng(Seed seed) : state_(seed.value) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound), exactly unbiased (Lemire's method).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Deterministic derivation of per-trial seeds from a master seed. Distinct
// trial indices always yield distinct seeds for a fixed master: the state
// offset (trial+1)*phi is injective mod 2^64 (phi is odd) and the splitmix
// finalizer is a bijection.
Seed split_seed(Seed master, std::uint64_t trial_index);

struct SampleRecord {
  Seed seed;
  std::uint32_t s = 0;
  std::vector<Index> indices;  // ascending, distinct
};

// Uniform random s-subset of {0,...,n-1} via Floyd's algorithm: O(s)
// draws regardless of n, each subset equally likely.
SampleRecord random_subset(Index n, std::uint32_t s, Seed seed);

}  // namespace convextest
