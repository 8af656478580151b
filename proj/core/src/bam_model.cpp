#include "fracbam/bam_model.hpp"

#include <cmath>
#include <cstdio>

#include "fracbam/errors.hpp"

namespace fracbam {

Activation Activation::tanh() {
  return {"tanh", [](double x) { return std::tanh(x); }, 1.0};
}

Activation Activation::identity() {
  return {"identity", [](double x) { return x; }, 1.0};
}

Activation Activation::scaled_tanh(double scale) {
  return {"scaled_tanh", [scale](double x) { return scale * std::tanh(x); }, scale};
}

Activation Activation::custom(std::string name, std::function<double(double)> value,
                              double slope_at_zero) {
  return {std::move(name), std::move(value), slope_at_zero};
}

namespace {

void check_activation(const Activation& a, const char* which) {
  if (!a.value) throw ConfigError(std::string("activation ") + which + " has no value function");
  if (!std::isfinite(a.slope_at_zero))
    throw ConfigError(std::string("activation ") + which + " has a non-finite slope at zero");
  if (a.value(0.0) != 0.0)
    throw ConfigError(std::string("activation ") + which + " must vanish at zero");
  for (double x : {1e-3, 0.1, 0.5, 1.0, 3.0, 10.0}) {
    const double p = a.value(x), q = a.value(-x);
    if (!std::isfinite(p) || !std::isfinite(q))
      throw ConfigError(std::string("activation ") + which + " is not finite on samples");
    // Sign preservation, allowing an all-zero (disconnected) activation.
    if (p * x < 0.0 || q * -x < 0.0)
      throw ConfigError(std::string("activation ") + which + " does not preserve sign");
  }
}

}  // namespace

void NetworkParams::validate() const {
  for (std::size_t l = 0; l < 6; ++l) {
    if (!(decay[l] > 0.0) || !std::isfinite(decay[l])) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "decay rate k%zu must be > 0, got %g", l + 1, decay[l]);
      throw ConfigError(buf);
    }
  }
  for (const auto* w : {&weights_i_to_j, &weights_j_to_i})
    for (const auto& row : *w)
      for (double v : row)
        if (!std::isfinite(v)) throw ConfigError("connection weights must be finite");
  check_activation(f, "f");
  check_activation(g, "g");
}

LinearGains linearize(const NetworkParams& params) {
  LinearGains out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out.phi[i][j] = params.weights_j_to_i[i][j] * params.f.slope_at_zero;
      out.varphi[i][j] = params.weights_i_to_j[i][j] * params.g.slope_at_zero;
    }
  return out;
}

void evaluate_rhs(const NetworkParams& params, std::span<const double> lag1,
                  std::span<const double> lag2, std::span<double> dx) {
  double fy[3], gx[3];
  for (int j = 0; j < 3; ++j) {
    fy[j] = params.f.value(lag2[3 + j]);
    gx[j] = params.g.value(lag2[j]);
  }
  for (int i = 0; i < 3; ++i) {
    double sx = -params.decay[i] * lag1[i];
    double sy = -params.decay[3 + i] * lag1[3 + i];
    for (int j = 0; j < 3; ++j) {
      sx += params.weights_j_to_i[i][j] * fy[j];
      sy += params.weights_i_to_j[i][j] * gx[j];
    }
    dx[i] = sx;
    dx[3 + i] = sy;
  }
}

void evaluate_linear_rhs(const std::array<double, 6>& decay, const LinearGains& gains,
                         std::span<const double> lag1, std::span<const double> lag2,
                         std::span<double> dx) {
  for (int i = 0; i < 3; ++i) {
    double sx = -decay[i] * lag1[i];
    double sy = -decay[3 + i] * lag1[3 + i];
    for (int j = 0; j < 3; ++j) {
      sx += gains.phi[i][j] * lag2[3 + j];
      sy += gains.varphi[i][j] * lag2[j];
    }
    dx[i] = sx;
    dx[3 + i] = sy;
  }
}

DelayedField make_rhs(NetworkParams params) {
  return [p = std::move(params)](double, const LaggedStates& lags, std::span<double> dx) {
    evaluate_rhs(p, lags[0], lags[1], dx);
  };
}

DelayedField make_linear_rhs(const std::array<double, 6>& decay, const LinearGains& gains) {
  return [decay, gains](double, const LaggedStates& lags, std::span<double> dx) {
    evaluate_linear_rhs(decay, gains, lags[0], lags[1], dx);
  };
}

Trajectory simulate(const NetworkParams& params, double order, double tau1, double tau2,
                    double horizon, double step, std::span<const double> initial,
                    MemoryMode memory, double window_length) {
  params.validate();
  if (initial.size() != kNeurons) throw ConfigError("the network has six state components");
  FdeConfig cfg;
  cfg.order = order;
  cfg.step = step;
  cfg.horizon = horizon;
  cfg.delays = {tau1, tau2};
  cfg.memory_mode = memory;
  cfg.window_length = window_length;
  return solve(make_rhs(params), cfg, initial, "bam6");
}

NetworkParams reference_network() {
  NetworkParams p;
  p.decay = {0.4, 0.6, 0.5, 0.7, 0.8, 0.3};
  p.weights_j_to_i = {{{-0.8, -1.5, -0.7}, {-0.5, -0.6, -0.8}, {-1.2, -1.3, 0.8}}};
  p.weights_i_to_j = {{{-0.5, 1.8, 1.5}, {-0.5, 1.2, 1.5}, {1.5, 1.6, 1.2}}};
  return p;
}

std::array<double, 6> reference_initial_a() { return {0.2, 0.4, -0.3, 0.3, -0.5, -0.4}; }
std::array<double, 6> reference_initial_b() { return {-1.4, 0.6, -0.3, 0.5, 1.2, -0.7}; }

}  // namespace fracbam
