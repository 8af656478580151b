#pragma once

// Fixed-step fractional Adams-Bashforth-Moulton solver for Caputo systems
//   D^theta x(t) = F(t, x(t - tau_1), ..., x(t - tau_m)),  0 < theta <= 1,
// with constant history on t <= 0.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fracbam {

enum class MemoryMode { full, windowed };

struct FdeConfig {
  double order = 1.0;     // theta
  double step = 0.01;     // h
  double horizon = 1.0;   // T
  std::vector<double> delays;
  /// Constant value on t <= 0; empty means "use the initial state".
  std::vector<double> history;
  MemoryMode memory_mode = MemoryMode::full;
  /// Only read in windowed mode.
  double window_length = 0.0;
  /// Any |x| above this aborts the run.
  double divergence_bound = 1e6;

  /// Throws ConfigError on the first violated invariant.
  void validate() const;
  /// floor(T/h) + 1, with a tiny tolerance so that T = n*h in decimal counts n.
  std::size_t point_count() const;
  /// Integer lag (in steps) of delay j. Throws ConfigError when off-grid.
  std::size_t delay_steps(std::size_t j) const;
};

struct Trajectory {
  std::vector<double> times;
  /// Row-major, times.size() x dimension.
  std::vector<double> states;
  std::size_t dimension = 0;
  FdeConfig config;
  std::string model;

  std::size_t size() const noexcept { return times.size(); }
  std::span<const double> state(std::size_t i) const {
    return {states.data() + i * dimension, dimension};
  }
  double at(std::size_t i, std::size_t component) const {
    return states[i * dimension + component];
  }
};

/// Lagged states handed to the vector field: lags[j] is x(t - tau_j), each of
/// length `dimension`.
struct LaggedStates {
  std::span<const double* const> lags;
  std::size_t dimension;
  std::span<const double> operator[](std::size_t j) const { return {lags[j], dimension}; }
};

/// Writes dx (length dimension) given t and the lagged states.
using DelayedField =
    std::function<void(double t, const LaggedStates& lags, std::span<double> dx)>;

/// Diethelm-style fractional PECE scheme with product-rectangle predictor and
/// product-trapezoid corrector. Deterministic: identical inputs give
/// identical bytes. Throws ConfigError or DivergenceError.
Trajectory solve(const DelayedField& rhs, const FdeConfig& config,
                 std::span<const double> initial, std::string model = {});

}  // namespace fracbam
