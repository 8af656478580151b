#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fracbam {

/// Invalid user-supplied settings (bad order, off-grid delay, non-positive decay, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to converge or could not certify its result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The integrated state left the admissible region. Carries the valid prefix.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, double last_valid_time,
                  std::vector<double> times, std::vector<std::vector<double>> states)
      : std::runtime_error(what),
        last_valid_time_(last_valid_time),
        times_(std::move(times)),
        states_(std::move(states)) {}

  double last_valid_time() const noexcept { return last_valid_time_; }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<std::vector<double>>& states() const noexcept { return states_; }

 private:
  double last_valid_time_;
  std::vector<double> times_;
  std::vector<std::vector<double>> states_;
};

}  // namespace fracbam
