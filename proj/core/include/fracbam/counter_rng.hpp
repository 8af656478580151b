#pragma once

// Counter-based generator built on the SplitMix64 finalizer. Draw i of
// stream s under seed k is
//
//   mix(k + G * (s * 2^32 + i + 1))      (all arithmetic mod 2^64)
//
// with G = 0x9E3779B97F4A7C15 and
//
//   mix(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//           z ^= z >> 27; z *= 0x94D049BB133111EB;
//           z ^= z >> 31.
//
// Uniform doubles are (bits >> 11) * 2^-53 in [0, 1). Integers below n use
// the high 64 bits of bits * n.

#include <cstdint>

namespace fracbam {

std::uint64_t splitmix_mix(std::uint64_t z);

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  std::uint64_t bits(std::uint64_t counter) const;
  double uniform(std::uint64_t counter) const;
  std::uint64_t below(std::uint64_t counter, std::uint64_t n) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace fracbam
