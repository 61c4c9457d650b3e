#pragma once

#include <cstdint>
#include <random>

namespace hornup {

template <typename Fn>
bool all_subsets_satisfy(std::size_t n, std::uint64_t seed, Fn&& fn) {
  if (n <= kExhaustiveLimit) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      if (!fn(AttrSet::from_bits(bits))) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = AttrSet::full(n).bits();
  for (std::size_t i = 0; i < kSampledSubsets; ++i) {
    if (!fn(AttrSet::from_bits(rng() & mask))) return false;
  }
  return true;
}

}  // namespace hornup
