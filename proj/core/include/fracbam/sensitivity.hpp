#pragma once

// Delay sensitivity of the oscillation amplitude: Latin hypercube over
// (tau1, tau2), one simulation per row, tail amplitudes, PRCC.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fracbam/bam_model.hpp"
#include "fracbam/lhs.hpp"
#include "fracbam/prcc.hpp"

namespace fracbam {

struct AmplitudeOptions {
  /// Relative change between the last two tail quarters that flags the
  /// sample as not yet periodic.
  double steadiness_tol = 0.10;
  /// A sample counts as decayed (amplitude reported as 0) when every
  /// component's last-quarter amplitude is below this and still shrinking.
  double decay_tol = 1e-3;
};

struct AmplitudeResult {
  std::vector<double> amplitude;
  /// Per component: |A4 - A3| / max(A3, A4) for the last two tail quarters.
  std::vector<double> quarter_change;
  bool steady = true;
  bool decayed = false;
};

/// (max - min) / 2 per component over t >= transient_fraction * T.
AmplitudeResult amplitude(const Trajectory& traj, double transient_fraction,
                          const AmplitudeOptions& opt = {});

/// Largest |x| over t >= from_time, all components.
double tail_sup_norm(const Trajectory& traj, double from_time);

enum class SampleFlag { ok, nonsteady, decayed, diverged, failed };
const char* sample_flag_name(SampleFlag f);
inline bool excluded(SampleFlag f) { return f == SampleFlag::diverged || f == SampleFlag::failed; }

struct SampleResult {
  SampleFlag flag = SampleFlag::ok;
  double tau1 = 0.0;  // delays actually simulated (snapped to the step grid)
  double tau2 = 0.0;
  std::array<double, 6> amplitude{};
  std::string message;
};

struct SensitivityConfig {
  NetworkParams params = reference_network();
  double order = 0.91;
  double horizon = 200.0;
  double step = 0.01;
  double transient_fraction = 0.5;
  std::array<double, 6> initial = reference_initial_a();
  std::vector<std::pair<double, double>> ranges = {{0.1, 0.6}, {0.1, 0.6}};
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  MemoryMode memory = MemoryMode::full;
  double window_length = 0.0;
  AmplitudeOptions amplitude;
};

struct SensitivityReport {
  LhsDesign design;
  std::vector<SampleResult> samples;
  std::size_t excluded_count = 0;
  /// Over the non-excluded rows: 2 inputs x 6 amplitudes.
  PrccTable prcc;
};

/// Sampled delays are snapped to the nearest multiple of the step before
/// simulating; PRCC uses the sampled design values. Output is independent of
/// the thread count.
SensitivityReport run_sensitivity(const SensitivityConfig& cfg);

/// Design + simulated outcome for one row of the scatter file.
SampleResult simulate_sample(const SensitivityConfig& cfg, double tau1, double tau2);

inline constexpr const char* kScatterHeader =
    "tau1,tau2,amp_x1,amp_x2,amp_x3,amp_y1,amp_y2,amp_y3,flag";
inline constexpr const char* kPrccHeader = "input,amp_x1,amp_x2,amp_x3,amp_y1,amp_y2,amp_y3";

/// "%.9g".
std::string format_number(double v);

/// Header plus one LF-terminated row per design row; excluded rows keep the
/// delays and flag but leave the amplitude fields empty.
std::string scatter_csv(const LhsDesign& design, const std::vector<SampleResult>& samples);
std::string prcc_csv(const PrccTable& table, const std::vector<std::string>& input_names);

}  // namespace fracbam
