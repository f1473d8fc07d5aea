#include "convextest/sampler.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace convextest {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  std::uint64_t x = next();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = next();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Seed split_seed(Seed master, std::uint64_t trial_index) {
  std::uint64_t state = master.value + (trial_index + 1) * 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return Seed{z ^ (z >> 31)};
}

SampleRecord random_subset(Index n, std::uint32_t s, Seed seed) {
  if (s > n) throw std::invalid_argument("sample size exceeds population");
  SampleRecord record;
  record.seed = seed;
  record.s = s;

  Rng rng(seed);
  std::unordered_set<Index> chosen;
  chosen.reserve(s * 2);
  for (Index j = n - s; j < n; ++j) {
    const auto t = static_cast<Index>(rng.below(j + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  record.indices.assign(chosen.begin(), chosen.end());
  std::sort(record.indices.begin(), record.indices.end());
  return record;
}

}  // namespace convextest
