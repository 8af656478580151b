#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracbam_cli/run_config.hpp"

namespace fracbam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitDivergence = 3;

/// Each command computes everything first and only then writes its files
/// into cfg.output.directory. Errors propagate as ConfigError,
/// NumericalError or DivergenceError; the return value is the exit code for
/// completed runs.
int cmd_simulate(const RunConfig& cfg, std::ostream& log);
int cmd_stability(const RunConfig& cfg, std::ostream& log);
int cmd_hopf(const RunConfig& cfg, bool verify, std::ostream& log);
int cmd_order_sweep(const RunConfig& cfg, std::ostream& log);
int cmd_sensitivity(const RunConfig& cfg, std::ostream& log);

/// Phase-space projections written to phase.csv, as state indices.
struct Projection {
  const char* name;
  int u, v, w;
};
const std::vector<Projection>& phase_projections();

std::string trajectory_csv(const Trajectory& traj);
std::string phase_csv(const Trajectory& traj);

/// Full command-line entry point: parses arguments, runs the subcommand and
/// maps exceptions to exit codes. Messages go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracbam::cli
