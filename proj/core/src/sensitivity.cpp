#include "fracbam/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fracbam/errors.hpp"
#include "fracbam/parallel.hpp"

namespace fracbam {

namespace {

double half_range(const Trajectory& traj, std::size_t c, std::size_t from, std::size_t to) {
  if (from >= to) return 0.0;
  double lo = traj.at(from, c), hi = lo;
  for (std::size_t i = from + 1; i < to; ++i) {
    const double v = traj.at(i, c);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return 0.5 * (hi - lo);
}

std::size_t first_index_at(const Trajectory& traj, double t) {
  const auto it = std::lower_bound(traj.times.begin(), traj.times.end(), t - 1e-12);
  return static_cast<std::size_t>(it - traj.times.begin());
}

}  // namespace

AmplitudeResult amplitude(const Trajectory& traj, double transient_fraction,
                          const AmplitudeOptions& opt) {
  if (!(transient_fraction > 0.0 && transient_fraction < 1.0))
    throw ConfigError("transient fraction must lie in (0,1)");
  if (traj.size() < 2) throw ConfigError("trajectory too short for an amplitude");
  const std::size_t n = traj.size();
  const std::size_t start = first_index_at(traj, transient_fraction * traj.times.back());
  const std::size_t len = n - start;
  const std::size_t q3 = start + len / 2, q4 = start + (3 * len) / 4;

  AmplitudeResult out;
  out.amplitude.resize(traj.dimension);
  out.quarter_change.resize(traj.dimension);
  bool all_small = true;
  for (std::size_t c = 0; c < traj.dimension; ++c) {
    out.amplitude[c] = half_range(traj, c, start, n);
    const double a3 = half_range(traj, c, q3, q4);
    const double a4 = half_range(traj, c, q4, n);
    const double big = std::max(a3, a4);
    out.quarter_change[c] = big > 0.0 ? std::abs(a4 - a3) / big : 0.0;
    if (out.quarter_change[c] > opt.steadiness_tol) out.steady = false;
    if (!(a4 < opt.decay_tol && a4 <= a3)) all_small = false;
  }
  if (all_small) {
    out.decayed = true;
    std::fill(out.amplitude.begin(), out.amplitude.end(), 0.0);
  }
  return out;
}

double tail_sup_norm(const Trajectory& traj, double from_time) {
  double m = 0.0;
  for (std::size_t i = first_index_at(traj, from_time); i < traj.size(); ++i)
    for (std::size_t c = 0; c < traj.dimension; ++c) m = std::max(m, std::abs(traj.at(i, c)));
  return m;
}

const char* sample_flag_name(SampleFlag f) {
  switch (f) {
    case SampleFlag::ok: return "ok";
    case SampleFlag::nonsteady: return "nonsteady";
    case SampleFlag::decayed: return "decayed";
    case SampleFlag::diverged: return "diverged";
    case SampleFlag::failed: return "failed";
  }
  return "failed";
}

SampleResult simulate_sample(const SensitivityConfig& cfg, double tau1, double tau2) {
  SampleResult s;
  s.tau1 = std::round(tau1 / cfg.step) * cfg.step;
  s.tau2 = std::round(tau2 / cfg.step) * cfg.step;
  try {
    const Trajectory tr = simulate(cfg.params, cfg.order, s.tau1, s.tau2, cfg.horizon, cfg.step,
                                   cfg.initial, cfg.memory, cfg.window_length);
    const AmplitudeResult a = amplitude(tr, cfg.transient_fraction, cfg.amplitude);
    std::copy(a.amplitude.begin(), a.amplitude.end(), s.amplitude.begin());
    s.flag = a.decayed ? SampleFlag::decayed : a.steady ? SampleFlag::ok : SampleFlag::nonsteady;
  } catch (const DivergenceError& e) {
    s.flag = SampleFlag::diverged;
    s.message = e.what();
  } catch (const NumericalError& e) {
    s.flag = SampleFlag::failed;
    s.message = e.what();
  }
  return s;
}

SensitivityReport run_sensitivity(const SensitivityConfig& cfg) {
  cfg.params.validate();
  if (cfg.ranges.size() != 2) throw ConfigError("the delay sweep varies exactly (tau1, tau2)");
  for (const auto& [lo, hi] : cfg.ranges)
    if (lo < 0.0) throw ConfigError("delay ranges must be non-negative");
  if (!(cfg.transient_fraction > 0.0 && cfg.transient_fraction < 1.0))
    throw ConfigError("transient fraction must lie in (0,1)");
  FdeConfig probe;
  probe.order = cfg.order;
  probe.step = cfg.step;
  probe.horizon = cfg.horizon;
  probe.validate();
  if (cfg.samples <= cfg.ranges.size() + 1)
    throw ConfigError("sample count must exceed the number of inputs + 1");

  SensitivityReport rep;
  rep.design = lhs_sample(cfg.ranges, cfg.samples, cfg.seed);
  rep.samples.resize(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
    rep.samples[i] = simulate_sample(cfg, rep.design.at(i, 0), rep.design.at(i, 1));
  });

  std::vector<std::vector<double>> in(2), out(6);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const SampleResult& s = rep.samples[i];
    if (excluded(s.flag)) {
      ++rep.excluded_count;
      continue;
    }
    in[0].push_back(rep.design.at(i, 0));
    in[1].push_back(rep.design.at(i, 1));
    for (int c = 0; c < 6; ++c) out[c].push_back(s.amplitude[c]);
  }
  if (in[0].size() > 3) {
    rep.prcc = prcc(in, out);
  } else {
    rep.prcc.inputs = 2;
    rep.prcc.outputs = 6;
    rep.prcc.values.assign(12, std::nullopt);
  }
  return rep;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string scatter_csv(const LhsDesign& design, const std::vector<SampleResult>& samples) {
  if (samples.size() != design.sample_count)
    throw ConfigError("scatter export needs one result per design row");
  std::string s = kScatterHeader;
  s += '\n';
  for (std::size_t i = 0; i < samples.size(); ++i) {
    s += format_number(design.at(i, 0));
    s += ',';
    s += format_number(design.at(i, 1));
    for (int c = 0; c < 6; ++c) {
      s += ',';
      if (!excluded(samples[i].flag)) s += format_number(samples[i].amplitude[c]);
    }
    s += ',';
    s += sample_flag_name(samples[i].flag);
    s += '\n';
  }
  return s;
}

std::string prcc_csv(const PrccTable& table, const std::vector<std::string>& input_names) {
  std::string s = kPrccHeader;
  s += '\n';
  for (std::size_t i = 0; i < table.inputs; ++i) {
    s += i < input_names.size() ? input_names[i] : "input" + std::to_string(i + 1);
    for (std::size_t j = 0; j < table.outputs; ++j) {
      s += ',';
      const auto& v = table.at(i, j);
      s += v ? format_number(*v) : "nan";
    }
    s += '\n';
  }
  return s;
}

}  // namespace fracbam
