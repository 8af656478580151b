#include "fracbam/lhs.hpp"

#include <cmath>
#include <numeric>

#include "fracbam/counter_rng.hpp"
#include "fracbam/errors.hpp"

namespace fracbam {

std::vector<double> LhsDesign::column(std::size_t dim) const {
  std::vector<double> out(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) out[i] = at(i, dim);
  return out;
}

LhsDesign lhs_sample(const std::vector<std::pair<double, double>>& ranges, std::size_t n,
                     std::uint64_t seed) {
  if (n < 2) throw ConfigError("Latin hypercube needs at least two samples");
  if (ranges.empty()) throw ConfigError("Latin hypercube needs at least one input range");
  for (const auto& [lo, hi] : ranges)
    if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi))
      throw ConfigError("Latin hypercube ranges must satisfy low < high");

  LhsDesign out;
  out.sample_count = n;
  out.ranges = ranges;
  out.seed = seed;
  const std::size_t k = ranges.size();
  out.matrix.assign(n * k, 0.0);
  std::vector<std::size_t> perm(n);
  for (std::size_t d = 0; d < k; ++d) {
    const CounterRng shuffle(seed, 2 * d), jitter(seed, 2 * d + 1);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(shuffle.below(n - 1 - i, i + 1));
      std::swap(perm[i], perm[j]);
    }
    const auto [lo, hi] = ranges[d];
    for (std::size_t i = 0; i < n; ++i) {
      const double u = jitter.uniform(i);
      double v = lo + (hi - lo) * (static_cast<double>(perm[i]) + u) / static_cast<double>(n);
      if (v > hi) v = hi;
      out.matrix[i * k + d] = v;
    }
  }
  return out;
}

}  // namespace fracbam
