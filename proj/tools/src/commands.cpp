#include "fracbam_cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fracbam/charpoly.hpp"
#include "fracbam/errors.hpp"
#include "fracbam/hopf_tau3.hpp"
#include "fracbam/hopf_tau4.hpp"
#include "fracbam/parallel.hpp"
#include "fracbam/sensitivity.hpp"

namespace fracbam::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const char* kStateNames[6] = {"x1", "x2", "x3", "y1", "y2", "y3"};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

fs::path prepare_dir(const RunConfig& cfg) {
  const fs::path dir(cfg.output.directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());
  return dir;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// Delays are snapped to the step grid before simulating.
double snap(double delay, double step) { return std::round(delay / step) * step; }

FdeConfig solver_config(const RunConfig& cfg, double tau1, double tau2) {
  FdeConfig fc;
  fc.order = cfg.solver.order;
  fc.step = cfg.solver.step;
  fc.horizon = cfg.solver.horizon;
  fc.delays = {tau1, tau2};
  fc.memory_mode = cfg.solver.memory;
  fc.window_length = cfg.solver.window_length;
  fc.divergence_bound = cfg.solver.divergence_bound;
  fc.validate();
  return fc;
}

Trajectory prefix_trajectory(const DivergenceError& e, const FdeConfig& fc) {
  Trajectory t;
  t.times = e.times();
  t.dimension = kNeurons;
  for (const auto& s : e.states()) t.states.insert(t.states.end(), s.begin(), s.end());
  t.config = fc;
  t.model = "bam6";
  return t;
}

// Bracketing run for --verify.
json verify_run(const RunConfig& cfg, const NetworkParams& params, double tau1, double tau2,
                const std::array<double, 6>& initial, bool& diverged) {
  json r;
  r["tau1"] = tau1;
  r["tau2"] = tau2;
  const FdeConfig fc = solver_config(cfg, tau1, tau2);
  try {
    const Trajectory traj = solve(make_rhs(params), fc, initial, "bam6");
    const double from = 0.5 * cfg.solver.horizon;
    const double sup = tail_sup_norm(traj, from);
    const AmplitudeResult amp = amplitude(traj, 0.5);
    bool all_above = true;
    for (double a : amp.amplitude) all_above = all_above && a > 0.01;
    r["tail_from"] = from;
    r["tail_sup_norm"] = sup;
    r["amplitudes"] = amp.amplitude;
    r["steady"] = amp.steady;
    r["outcome"] = sup < 1e-2 ? "decays" : (all_above && amp.steady ? "oscillates" : "indeterminate");
  } catch (const DivergenceError& e) {
    diverged = true;
    r["outcome"] = "diverged";
    r["last_valid_time"] = e.last_valid_time();
  }
  return r;
}

}  // namespace

const std::vector<Projection>& phase_projections() {
  static const std::vector<Projection> p = {
      {"x1-y1-y2", 0, 3, 4}, {"x1-y1-y3", 0, 3, 5}, {"x1-y2-y3", 0, 4, 5},
      {"x2-y1-y2", 1, 3, 4}, {"x2-y1-y3", 1, 3, 5}, {"x2-y2-y3", 1, 4, 5}};
  return p;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,x1,x2,x3,y1,y2,y3\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out += format_number(traj.times[i]);
    for (std::size_t c = 0; c < traj.dimension; ++c) {
      out += ',';
      out += format_number(traj.at(i, c));
    }
    out += '\n';
  }
  return out;
}

std::string phase_csv(const Trajectory& traj) {
  std::string out = "projection,t,u,v,w\n";
  for (const Projection& p : phase_projections())
    for (std::size_t i = 0; i < traj.size(); ++i) {
      out += p.name;
      for (double v : {traj.times[i], traj.at(i, p.u), traj.at(i, p.v), traj.at(i, p.w)}) {
        out += ',';
        out += format_number(v);
      }
      out += '\n';
    }
  return out;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& log) {
  const NetworkParams params = cfg.model.build();
  const FdeConfig fc = solver_config(cfg, cfg.simulate.tau1, cfg.simulate.tau2);
  Trajectory traj;
  std::optional<DivergenceError> diverged;
  try {
    traj = solve(make_rhs(params), fc, cfg.simulate.initial, "bam6");
  } catch (const DivergenceError& e) {
    diverged = e;
    traj = prefix_trajectory(e, fc);
  }
  const fs::path dir = prepare_dir(cfg);
  write_file(dir / "trajectory.csv", trajectory_csv(traj));
  write_file(dir / "phase.csv", phase_csv(traj));
  if (diverged) {
    write_file(dir / ".diverged", std::string(diverged->what()) + "\nlast_valid_time " +
                                      format_number(diverged->last_valid_time()) + "\n");
    log << "simulate: diverged after t = " << format_number(diverged->last_valid_time()) << "\n";
    return kExitDivergence;
  }
  std::error_code ec;
  fs::remove(dir / ".diverged", ec);
  if (cfg.output.print_summary)
    log << "simulate: " << traj.size() << " points written to " << dir.string() << "\n";
  return kExitOk;
}

int cmd_stability(const RunConfig& cfg, std::ostream& log) {
  const NetworkParams params = cfg.model.build();
  const CharCoeffs cc = compute_coeffs(params.decay, linearize(params));
  const HurwitzResult h = hurwitz_minors(cc.d);
  json j;
  json c = json::object();
  for (std::size_t i = 0; i < kCoeffCount; ++i) c[coeff_name(static_cast<Coeff>(i))] = cc.c[i];
  j["coefficients"] = c;
  j["c61_decay"] = cc.c61_decay;
  j["c61_cross"] = cc.c61_cross;
  j["d"] = cc.d;
  j["D"] = h.minors;
  j["verdict"] = h.stable ? "stable" : "not_stable";
  const fs::path dir = prepare_dir(cfg);
  write_file(dir / "stability.json", dump(j));
  if (cfg.output.print_summary) log << dump(j);
  return kExitOk;
}

int cmd_hopf(const RunConfig& cfg, bool verify, std::ostream& log) {
  const NetworkParams params = cfg.model.build();
  const CharCoeffs cc = compute_coeffs(params.decay, linearize(params));
  const double order = cfg.solver.order;
  const double h = cfg.solver.step;
  json j;
  bool diverged = false;

  if (cfg.hopf.mode == "tau3") {
    const Tau3Report rep = analyze_tau3(cc, order);
    j["mode"] = "tau3";
    j["order"] = order;
    json roots = json::array();
    for (const cplx& r : rep.roots) roots.push_back(complex_json(r));
    j["aux_roots"] = roots;
    json cands = json::array();
    for (const Tau3Candidate& c : rep.critical.candidates)
      cands.push_back({{"root_index", c.root_index}, {"branch", c.branch}, {"k", c.k},
                       {"omega", c.omega}, {"tau", c.tau}, {"residual", c.residual}});
    j["candidates"] = cands;
    j["verdict"] = verdict_name(rep.verdict);
    if (rep.verdict == Verdict::bifurcation) {
      j["omega0"] = rep.omega0;
      j["tau0"] = rep.tau0;
      j["residual"] = rep.residual;
      j["transversality"] = opt_json(rep.transversality);
      if (!rep.transversality_error.empty()) j["transversality_error"] = rep.transversality_error;
      if (verify) {
        const double below = snap(cfg.hopf.verify_below.value_or(cfg.hopf.verify_below_factor * rep.tau0), h);
        const double above = snap(cfg.hopf.verify_above.value_or(cfg.hopf.verify_above_factor * rep.tau0), h);
        j["verify"]["below"] = verify_run(cfg, params, below, below, cfg.hopf.initial, diverged);
        j["verify"]["above"] = verify_run(cfg, params, above, above, cfg.hopf.initial, diverged);
      }
    }
    if (cfg.output.print_summary) {
      log << "hopf tau3: " << verdict_name(rep.verdict);
      if (rep.verdict == Verdict::bifurcation)
        log << " omega0 " << format_number(rep.omega0) << " tau0 " << format_number(rep.tau0);
      log << "\n";
    }
  } else {
    const bool fix1 = cfg.hopf.fix_tau1.has_value();
    const Tau4Mode mode = fix1 ? Tau4Mode::fix_tau1 : Tau4Mode::fix_tau2;
    const double fixed = fix1 ? *cfg.hopf.fix_tau1 : *cfg.hopf.fix_tau2;
    Tau4Options opt;
    opt.grid_points = cfg.hopf.grid_points;
    const Tau4Report rep = find_critical(cc, order, mode, fixed, opt);
    j["mode"] = "tau4";
    j["fixed"] = tau4_mode_name(mode);
    j["fixed_value"] = fixed;
    j["order"] = order;
    j["omega_max"] = rep.omega_max;
    j["grid_points"] = opt.grid_points;
    json cands = json::array();
    for (const Tau4Candidate& c : rep.candidates)
      cands.push_back({{"omega", c.omega}, {"r", c.r}, {"sin_sign", c.sin_sign}, {"k", c.k},
                       {"tau4", c.tau4}, {"tau1", c.tau1}, {"tau2", c.tau2},
                       {"residual_re", c.residual_re}, {"residual_im", c.residual_im},
                       {"char_residual", c.char_residual}});
    j["candidates"] = cands;
    json near = json::array();
    for (const NearMiss& m : rep.near_misses)
      near.push_back({{"omega", m.omega}, {"reason", m.reason}, {"residual", m.residual}});
    j["near_misses"] = near;
    j["grid_failures"] = rep.grid_failures;
    j["verdict"] = verdict_name(rep.verdict);
    if (rep.verdict == Verdict::bifurcation) {
      j["omega_star"] = rep.omega_star;
      j["tau_star"] = rep.tau_star;
      j["tau1"] = rep.tau1;
      j["tau2"] = rep.tau2;
      if (rep.quartic) {
        const QuarticReport& q = *rep.quartic;
        json roots = json::array();
        for (const cplx& r : q.solution.roots) roots.push_back(complex_json(r));
        j["quartic"] = {{"q", q.q},
                        {"path", quartic_path_name(q.solution.path)},
                        {"alpha", complex_json(q.solution.alpha)},
                        {"beta", complex_json(q.solution.beta)},
                        {"delta0", complex_json(q.solution.delta0)},
                        {"delta1", complex_json(q.solution.delta1)},
                        {"S", complex_json(q.solution.S)},
                        {"Q", complex_json(q.solution.Q)},
                        {"cube_root", q.solution.cube_root},
                        {"roots", roots},
                        {"max_residual", q.solution.max_residual},
                        {"match_distance", q.match_distance}};
      }
      j["transversality"] = opt_json(rep.transversality);
      j["transversality_along_mode"] = opt_json(rep.transversality_along_mode);
      if (!rep.transversality_error.empty()) j["transversality_error"] = rep.transversality_error;
      if (verify) {
        const double b4 = cfg.hopf.verify_below.value_or(cfg.hopf.verify_below_factor * rep.tau_star);
        const double a4 = cfg.hopf.verify_above.value_or(cfg.hopf.verify_above_factor * rep.tau_star);
        for (const auto& [key, t4] : {std::pair<const char*, double>{"below", b4}, {"above", a4}}) {
          const double t1 = snap(fix1 ? fixed : fixed + 2.0 * t4, h);
          const double t2 = snap(fix1 ? fixed - 2.0 * t4 : fixed, h);
          if (t2 < 0.0) {
            j["verify"][key] = {{"tau4", t4}, {"outcome", "skipped: implied tau2 is negative"}};
            continue;
          }
          json r = verify_run(cfg, params, t1, t2, cfg.hopf.initial, diverged);
          r["tau4"] = t4;
          j["verify"][key] = r;
        }
      }
    }
    // Exploratory: the communication delay at which the origin loses
    // stability with no leakage delay.
    const auto crit = critical_communication_delay(cc, order, 0.0, opt);
    j["exploratory"]["critical_tau2_at_tau1_zero"] =
        crit ? json{{"omega", crit->omega}, {"tau2", crit->delay}, {"residual", crit->residual}}
             : json(nullptr);
    if (cfg.output.print_summary) {
      log << "hopf tau4 (" << tau4_mode_name(mode) << " " << format_number(fixed)
          << "): " << verdict_name(rep.verdict);
      if (rep.verdict == Verdict::bifurcation)
        log << " omega* " << format_number(rep.omega_star) << " tau4* "
            << format_number(rep.tau_star);
      log << "\n";
    }
  }

  const fs::path dir = prepare_dir(cfg);
  write_file(dir / "bifurcation.json", dump(j));
  return diverged ? kExitDivergence : kExitOk;
}

int cmd_order_sweep(const RunConfig& cfg, std::ostream& log) {
  const NetworkParams params = cfg.model.build();
  const std::vector<double> orders = cfg.order_sweep.orders();
  const auto rows = order_sweep(params, orders, default_thread_count());
  std::string csv = "theta,omega0,tau0,status\n";
  std::size_t failed = 0;
  for (const SweepRow& r : rows) {
    csv += format_number(r.order);
    if (!r.ok) {
      ++failed;
      csv += ",,,error\n";
    } else if (r.verdict == Verdict::no_bifurcation) {
      csv += ",,,no_bifurcation\n";
    } else {
      csv += "," + format_number(r.omega0) + "," + format_number(r.tau0) + ",ok\n";
    }
  }
  const fs::path dir = prepare_dir(cfg);
  write_file(dir / "order_sweep.csv", csv);
  if (cfg.output.print_summary)
    log << "order-sweep: " << rows.size() << " orders, " << failed << " failed\n";
  return kExitOk;
}

int cmd_sensitivity(const RunConfig& cfg, std::ostream& log) {
  SensitivityConfig sc;
  sc.params = cfg.model.build();
  sc.order = cfg.solver.order;
  sc.horizon = cfg.solver.horizon;
  sc.step = cfg.solver.step;
  sc.memory = cfg.solver.memory;
  sc.window_length = cfg.solver.window_length;
  sc.transient_fraction = cfg.sensitivity.transient_fraction;
  sc.initial = cfg.sensitivity.initial;
  sc.ranges = {cfg.sensitivity.tau1_range, cfg.sensitivity.tau2_range};
  sc.samples = cfg.sensitivity.samples;
  sc.seed = cfg.sensitivity.seed;
  sc.threads = default_thread_count();
  sc.amplitude.steadiness_tol = cfg.sensitivity.steadiness_tol;
  sc.amplitude.decay_tol = cfg.sensitivity.decay_tol;

  const SensitivityReport rep = run_sensitivity(sc);
  const double frac = static_cast<double>(rep.excluded_count) / static_cast<double>(sc.samples);

  json j;
  j["samples"] = sc.samples;
  j["seed"] = sc.seed;
  j["excluded"] = rep.excluded_count;
  j["excluded_fraction"] = frac;
  json flags = json::object();
  for (SampleFlag f : {SampleFlag::ok, SampleFlag::nonsteady, SampleFlag::decayed,
                       SampleFlag::diverged, SampleFlag::failed}) {
    std::size_t n = 0;
    for (const SampleResult& s : rep.samples) n += s.flag == f;
    flags[sample_flag_name(f)] = n;
  }
  j["flags"] = flags;
  json prcc = json::object();
  const char* inputs[2] = {"tau1", "tau2"};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < kNeurons; ++k)
      prcc[inputs[i]][std::string("amp_") + kStateNames[k]] = opt_json(rep.prcc.at(i, k));
  j["prcc"] = prcc;
  if (frac > 0.5)
    j["warning"] = "more than half of the samples were excluded";
  else if (frac > 0.1)
    j["warning"] = "more than 10% of the samples were excluded";

  const fs::path dir = prepare_dir(cfg);
  write_file(dir / "scatter.csv", scatter_csv(rep.design, rep.samples));
  write_file(dir / "prcc.csv", prcc_csv(rep.prcc, {"tau1", "tau2"}));
  write_file(dir / "sensitivity.json", dump(j));
  if (j.contains("warning")) log << "sensitivity: warning: " << j["warning"].get<std::string>() << "\n";
  if (cfg.output.print_summary)
    log << "sensitivity: " << sc.samples << " samples, " << rep.excluded_count << " excluded\n";
  return frac > 0.5 ? kExitNumerical : kExitOk;
}

}  // namespace fracbam::cli
