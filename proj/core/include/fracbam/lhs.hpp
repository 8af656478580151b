#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fracbam {

struct LhsDesign {
  std::size_t sample_count = 0;
  std::vector<std::pair<double, double>> ranges;
  std::uint64_t seed = 0;
  /// Row-major N x k.
  std::vector<double> matrix;

  std::size_t dims() const noexcept { return ranges.size(); }
  double at(std::size_t row, std::size_t dim) const { return matrix[row * ranges.size() + dim]; }
  std::vector<double> column(std::size_t dim) const;
};

/// Latin hypercube over the box `ranges`: dimension d uses a Fisher-Yates
/// permutation of the N strata from stream 2d and the in-stratum jitter from
/// stream 2d+1 of CounterRng(seed, .). Row i of dimension d is
///   lo + (hi - lo) * (perm[i] + u_i) / N.
/// Throws ConfigError for N < 2 or an empty / degenerate range.
LhsDesign lhs_sample(const std::vector<std::pair<double, double>>& ranges, std::size_t n,
                     std::uint64_t seed);

}  // namespace fracbam
