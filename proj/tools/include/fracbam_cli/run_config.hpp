#pragma once

// Run configuration shared by every subcommand. One JSON document with four
// sections; see configs/*.json for annotated examples.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fracbam/bam_model.hpp"
#include "fracbam/fde.hpp"

namespace fracbam::cli {

struct ActivationSpec {
  std::string kind = "tanh";  // tanh | identity | scaled_tanh
  double scale = 1.0;         // scaled_tanh only

  Activation build() const;
  bool operator==(const ActivationSpec&) const = default;
};

struct ModelSpec {
  std::array<double, 6> decay{};
  Matrix3 weights_i_to_j{};  // n_ij
  Matrix3 weights_j_to_i{};  // m_ij
  ActivationSpec f;
  ActivationSpec g;

  NetworkParams build() const;
  bool operator==(const ModelSpec&) const = default;
};

struct SolverSpec {
  double order = 0.91;
  double step = 0.01;
  double horizon = 200.0;
  MemoryMode memory = MemoryMode::full;
  double window_length = 0.0;
  double divergence_bound = 1e6;

  bool operator==(const SolverSpec&) const = default;
};

struct SimulateSpec {
  double tau1 = 0.1;
  double tau2 = 0.1;
  std::array<double, 6> initial = reference_initial_a();

  bool operator==(const SimulateSpec&) const = default;
};

struct HopfSpec {
  std::string mode = "tau3";  // tau3 | tau4
  std::optional<double> fix_tau1;
  std::optional<double> fix_tau2;
  int grid_points = 2000;
  /// Bracketing runs for --verify, as multiples of the critical delay unless
  /// explicit delays are given.
  double verify_below_factor = 0.75;
  double verify_above_factor = 1.25;
  std::optional<double> verify_below;
  std::optional<double> verify_above;
  std::array<double, 6> initial = reference_initial_a();

  bool operator==(const HopfSpec&) const = default;
};

struct OrderSweepSpec {
  double start = 0.5;
  double stop = 1.0;
  double step = 0.01;

  /// start, start + step, ..., stop (inclusive within 1e-9 of a step),
  /// rounded to 12 decimals.
  std::vector<double> orders() const;
  bool operator==(const OrderSweepSpec&) const = default;
};

struct SensitivitySpec {
  std::size_t samples = 1000;
  std::pair<double, double> tau1_range{0.1, 0.6};
  std::pair<double, double> tau2_range{0.1, 0.6};
  double transient_fraction = 0.5;
  std::uint64_t seed = 20240601;
  std::array<double, 6> initial = reference_initial_a();
  double steadiness_tol = 0.10;
  double decay_tol = 1e-3;

  bool operator==(const SensitivitySpec&) const = default;
};

struct OutputSpec {
  std::string directory = "out";
  bool print_summary = true;

  bool operator==(const OutputSpec&) const = default;
};

struct RunConfig {
  ModelSpec model;
  SolverSpec solver;
  SimulateSpec simulate;
  HopfSpec hopf;
  OrderSweepSpec order_sweep;
  SensitivitySpec sensitivity;
  OutputSpec output;

  /// Checks every section. Throws ConfigError.
  void validate() const;
  bool operator==(const RunConfig&) const = default;
};

/// The reference network with the default solver and analysis settings.
RunConfig default_config();

/// Missing keys take their defaults; unknown keys are rejected. Throws
/// ConfigError on malformed input.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace fracbam::cli
