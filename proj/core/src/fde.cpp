#include "fracbam/fde.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fracbam/errors.hpp"

namespace fracbam {

namespace {

constexpr double kGridTol = 1e-9;

// Eight fixed-order partial sums: the order is independent of the machine,
// and the compiler can keep the lanes in vector registers.
inline void dot2(const double* w1, const double* w2, const double* f, std::size_t n,
                 double& out1, double& out2) {
  double a[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  double b[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    for (int l = 0; l < 8; ++l) {
      a[l] += w1[j + l] * f[j + l];
      b[l] += w2[j + l] * f[j + l];
    }
  }
  for (int l = 0; j < n; ++j, ++l) {
    a[l] += w1[j] * f[j];
    b[l] += w2[j] * f[j];
  }
  out1 = ((a[0] + a[1]) + (a[2] + a[3])) + ((a[4] + a[5]) + (a[6] + a[7]));
  out2 = ((b[0] + b[1]) + (b[2] + b[3])) + ((b[4] + b[5]) + (b[6] + b[7]));
}

std::string fmt(const char* f, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

void FdeConfig::validate() const {
  if (!(order > 0.0 && order <= 1.0)) throw ConfigError(fmt("order must lie in (0,1], got %g", order));
  if (!(step > 0.0) || !std::isfinite(step)) throw ConfigError(fmt("step must be > 0, got %g", step));
  if (!(horizon >= step) || !std::isfinite(horizon))
    throw ConfigError(fmt("horizon must be >= step, got %g", horizon));
  for (std::size_t j = 0; j < delays.size(); ++j) {
    if (!(delays[j] >= 0.0) || !std::isfinite(delays[j]))
      throw ConfigError(fmt("delays must be non-negative, got %g", delays[j]));
    (void)delay_steps(j);
  }
  for (double v : history)
    if (!std::isfinite(v)) throw ConfigError("history values must be finite");
  if (memory_mode == MemoryMode::windowed && !(window_length >= step))
    throw ConfigError(fmt("window length must be >= step, got %g", window_length));
  if (!(divergence_bound > 0.0)) throw ConfigError("divergence bound must be positive");
}

std::size_t FdeConfig::point_count() const {
  return static_cast<std::size_t>(std::floor(horizon / step + 1e-9)) + 1;
}

std::size_t FdeConfig::delay_steps(std::size_t j) const {
  const double tau = delays.at(j);
  const double m = std::round(tau / step);
  if (std::abs(tau - m * step) > kGridTol * std::max(tau, step)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "delay %.12g is not an integer multiple of step %.12g", tau,
                  step);
    throw ConfigError(buf);
  }
  return static_cast<std::size_t>(m);
}

Trajectory solve(const DelayedField& rhs, const FdeConfig& config,
                 std::span<const double> initial, std::string model) {
  config.validate();
  const std::size_t dim = initial.size();
  if (dim == 0) throw ConfigError("initial state must not be empty");
  if (!config.history.empty() && config.history.size() != dim)
    throw ConfigError("history length does not match the state dimension");
  for (double v : initial)
    if (!std::isfinite(v)) throw ConfigError("initial values must be finite");

  const std::size_t n_pts = config.point_count();
  const double h = config.step;
  const double th = config.order;
  const std::vector<double> hist =
      config.history.empty() ? std::vector<double>(initial.begin(), initial.end()) : config.history;

  const std::size_t m = config.delays.size();
  std::vector<std::size_t> lag(m);
  for (std::size_t j = 0; j < m; ++j) lag[j] = config.delay_steps(j);

  std::size_t window = n_pts + 1;
  if (config.memory_mode == MemoryMode::windowed) {
    const double w = std::floor(config.window_length / h + 1e-9);
    if (w < static_cast<double>(n_pts)) window = std::max<std::size_t>(1, static_cast<std::size_t>(w));
  }

  // Reversed weights: P[base + j] = b_{n-j}, C[base + j] = c_{n-j} with base = N-1-n.
  const std::size_t N = n_pts;
  std::vector<double> P(N), C(N), a0(N);
  for (std::size_t k = 0; k < N; ++k) {
    const double kd = static_cast<double>(k);
    const double b = std::pow(kd + 1.0, th) - std::pow(kd, th);
    const double c = std::pow(kd + 2.0, th + 1.0) + std::pow(kd, th + 1.0) -
                     2.0 * std::pow(kd + 1.0, th + 1.0);
    P[N - 1 - k] = b;
    C[N - 1 - k] = c;
    a0[k] = std::pow(kd, th + 1.0) - (kd - th) * std::pow(kd + 1.0, th);
  }
  const double sp = std::pow(h, th) / std::tgamma(th + 1.0);
  const double sc = std::pow(h, th) / std::tgamma(th + 2.0);

  Trajectory out;
  out.dimension = dim;
  out.config = config;
  out.model = std::move(model);
  out.times.resize(n_pts);
  out.states.resize(n_pts * dim);
  for (std::size_t i = 0; i < n_pts; ++i) out.times[i] = static_cast<double>(i) * h;
  std::copy(initial.begin(), initial.end(), out.states.begin());

  // f stored component-major so the history sums stream contiguously.
  std::vector<double> f(dim * n_pts, 0.0);
  std::vector<const double*> lag_ptr(m);
  std::vector<double> dx(dim), pred(dim);

  auto eval = [&](std::size_t idx, const double* current, double t) {
    for (std::size_t j = 0; j < m; ++j) {
      if (lag[j] == 0) {
        lag_ptr[j] = current;
      } else if (idx <= lag[j]) {
        lag_ptr[j] = hist.data();
      } else {
        lag_ptr[j] = out.states.data() + (idx - lag[j]) * dim;
      }
    }
    LaggedStates ls{lag_ptr, dim};
    rhs(t, ls, dx);
  };

  eval(0, out.states.data(), 0.0);
  for (std::size_t c = 0; c < dim; ++c) f[c * n_pts] = dx[c];

  const double bound = config.divergence_bound;
  for (std::size_t n = 0; n + 1 < n_pts; ++n) {
    const std::size_t lo = (n + 1 > window) ? n + 1 - window : 0;
    const std::size_t base = N - 1 - n;
    for (std::size_t c = 0; c < dim; ++c) {
      const double* fc = f.data() + c * n_pts;
      double sum_p = 0.0, sum_c = 0.0;
      if (lo == 0) {
        // j = 0 carries the special corrector end weight.
        double sp1 = 0.0, sc1 = 0.0;
        if (n >= 1) dot2(P.data() + base + 1, C.data() + base + 1, fc + 1, n, sp1, sc1);
        sum_p = P[base] * fc[0] + sp1;
        sum_c = a0[n] * fc[0] + sc1;
      } else {
        dot2(P.data() + base + lo, C.data() + base + lo, fc + lo, n + 1 - lo, sum_p, sum_c);
      }
      pred[c] = initial[c] + sp * sum_p;
      out.states[(n + 1) * dim + c] = sum_c;  // stash the corrector history sum
    }
    const double t1 = out.times[n + 1];
    eval(n + 1, pred.data(), t1);
    double* xn = out.states.data() + (n + 1) * dim;
    bool bad = false;
    for (std::size_t c = 0; c < dim; ++c) {
      xn[c] = initial[c] + sc * (dx[c] + xn[c]);
      if (!std::isfinite(xn[c]) || std::abs(xn[c]) > bound) bad = true;
    }
    if (bad) {
      std::vector<double> times(out.times.begin(), out.times.begin() + static_cast<long>(n + 1));
      std::vector<std::vector<double>> states(n + 1);
      for (std::size_t i = 0; i <= n; ++i)
        states[i].assign(out.states.begin() + static_cast<long>(i * dim),
                         out.states.begin() + static_cast<long>((i + 1) * dim));
      char buf[160];
      std::snprintf(buf, sizeof buf, "state left the bound %g at t = %.6g", bound, t1);
      throw DivergenceError(buf, out.times[n], std::move(times), std::move(states));
    }
    eval(n + 1, xn, t1);
    for (std::size_t c = 0; c < dim; ++c) f[c * n_pts + n + 1] = dx[c];
  }
  return out;
}

}  // namespace fracbam
