#include "fracbam/counter_rng.hpp"

namespace fracbam {

std::uint64_t splitmix_mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  return splitmix_mix(seed_ + kGolden * ((stream_ << 32) + counter + 1));
}

double CounterRng::uniform(std::uint64_t counter) const {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(std::uint64_t counter, std::uint64_t n) const {
  // High word of the 128-bit product, from 32-bit halves.
  const std::uint64_t a = bits(counter);
  const std::uint64_t a_lo = a & 0xFFFFFFFFULL, a_hi = a >> 32;
  const std::uint64_t n_lo = n & 0xFFFFFFFFULL, n_hi = n >> 32;
  const std::uint64_t lo_lo = a_lo * n_lo;
  const std::uint64_t hi_lo = a_hi * n_lo;
  const std::uint64_t lo_hi = a_lo * n_hi;
  const std::uint64_t hi_hi = a_hi * n_hi;
  const std::uint64_t mid = (lo_lo >> 32) + (hi_lo & 0xFFFFFFFFULL) + lo_hi;
  return hi_hi + (hi_lo >> 32) + (mid >> 32);
}

}  // namespace fracbam
