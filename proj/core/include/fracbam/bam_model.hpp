#pragma once

// Six-neuron bidirectional associative memory network with leakage delay
// tau1 and communication delay tau2. State order: (x1, x2, x3, y1, y2, y3).
//
//   D^theta x_i = -k_i     x_i(t - tau1) + sum_j m_ij f(y_j(t - tau2))
//   D^theta y_i = -k_{3+i} y_i(t - tau1) + sum_j n_ij g(x_j(t - tau2))

#include <array>
#include <functional>
#include <span>
#include <string>

#include "fracbam/fde.hpp"

namespace fracbam {

using Matrix3 = std::array<std::array<double, 3>, 3>;
inline constexpr std::size_t kNeurons = 6;

struct Activation {
  std::string name;
  std::function<double(double)> value;
  double slope_at_zero = 1.0;

  static Activation tanh();
  static Activation identity();
  /// scale * tanh(x); slope at zero is `scale`.
  static Activation scaled_tanh(double scale);
  static Activation custom(std::string name, std::function<double(double)> value,
                           double slope_at_zero);
};

struct NetworkParams {
  std::array<double, 6> decay{};  // k1..k6
  Matrix3 weights_i_to_j{};       // n_ij: x_j -> y_i
  Matrix3 weights_j_to_i{};       // m_ij: y_j -> x_i
  Activation f = Activation::tanh();
  Activation g = Activation::tanh();

  /// Positive decay rates, finite weights, f(0)=g(0)=0 and sign preservation
  /// on a few sample points. Throws ConfigError.
  void validate() const;
};

struct LinearGains {
  Matrix3 phi{};     // m_ij f'(0)
  Matrix3 varphi{};  // n_ij g'(0)
};

LinearGains linearize(const NetworkParams& params);

/// dx = field(lag1, lag2); all spans of length 6.
void evaluate_rhs(const NetworkParams& params, std::span<const double> lag1,
                  std::span<const double> lag2, std::span<double> dx);

/// Linearized field at the origin: the same structure with f, g replaced by
/// their slopes.
void evaluate_linear_rhs(const std::array<double, 6>& decay, const LinearGains& gains,
                         std::span<const double> lag1, std::span<const double> lag2,
                         std::span<double> dx);

/// Solver adaptor. Expects config.delays == {tau1, tau2}. `params` is copied.
DelayedField make_rhs(NetworkParams params);
DelayedField make_linear_rhs(const std::array<double, 6>& decay, const LinearGains& gains);

/// Convenience wrapper around solve() for the network with delays (tau1, tau2).
Trajectory simulate(const NetworkParams& params, double order, double tau1, double tau2,
                    double horizon, double step, std::span<const double> initial,
                    MemoryMode memory = MemoryMode::full, double window_length = 0.0);

/// The reference 3+3 network with tanh activations used by the shipped configs.
NetworkParams reference_network();
/// Initial values used for the equal-delay runs.
std::array<double, 6> reference_initial_a();
/// Initial values used for the unequal-delay runs.
std::array<double, 6> reference_initial_b();

}  // namespace fracbam
