#pragma once

#include <optional>
#include <span>
#include <vector>

namespace fracbam {

/// 1-based ranks, ties get the average of the ranks they span.
std::vector<double> average_ranks(std::span<const double> x);

/// Pearson correlation; nullopt when either vector has zero variance.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

struct PrccTable {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  /// inputs x outputs, row-major; nullopt marks an undefined pair.
  std::vector<std::optional<double>> values;

  const std::optional<double>& at(std::size_t input, std::size_t output) const {
    return values[input * outputs + output];
  }
};

/// Partial rank correlation of each input column with each output column,
/// controlling for the remaining inputs. Columns have equal length N, which
/// must exceed the input count + 1 (ConfigError otherwise). A constant input
/// or output column leaves the affected cells undefined.
PrccTable prcc(const std::vector<std::vector<double>>& inputs,
               const std::vector<std::vector<double>>& outputs);

}  // namespace fracbam
