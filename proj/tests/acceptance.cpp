// Acceptance driver. `fracbam_acceptance --criterion N` runs one criterion
// end to end through the command-line layer and prints one PASS/FAIL line
// per check. Exit status is 0 only if every line passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracbam/charpoly.hpp"
#include "fracbam/fde.hpp"
#include "fracbam/hopf_tau3.hpp"
#include "fracbam/hopf_tau4.hpp"
#include "fracbam/lhs.hpp"
#include "fracbam/mittag_leffler.hpp"
#include "fracbam/parallel.hpp"
#include "fracbam/polynomial.hpp"
#include "fracbam/prcc.hpp"
#include "fracbam/quartic.hpp"
#include "fracbam/sensitivity.hpp"
#include "fracbam_cli/commands.hpp"
#include "json.hpp"
#include "oracles/oracles.hpp"

using namespace fracbam;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string g_label;
int g_failed = 0;

void report(const std::string& what, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << g_label << ": " << what << " ("
            << detail << ")\n";
  if (!ok) ++g_failed;
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(7);
  s << v;
  return s.str();
}

std::string config(const std::string& name) {
  return std::string(FRACBAM_SOURCE_DIR) + "/configs/" + name + ".json";
}

fs::path out_dir(const std::string& name) { return fs::path("acceptance_out") / name; }

struct Run {
  int code = -1;
  double seconds = 0.0;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  Run r;
  r.code = cli::run_cli(args, out, err);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!err.str().empty()) std::cout << "  stderr: " << err.str();
  return r;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return json();
  return json::parse(in, nullptr, false);
}

// Rows of a CSV file, header dropped. Empty fields become NaN.
std::vector<std::vector<double>> read_csv(const fs::path& p, std::vector<std::string>* text_last = nullptr) {
  std::ifstream in(p);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    for (const std::string& c : cells) {
      char* end = nullptr;
      const double v = c.empty() ? NAN : std::strtod(c.c_str(), &end);
      row.push_back(c.empty() || *end != '\0' ? NAN : v);
    }
    if (text_last) text_last->push_back(cells.empty() ? "" : cells.back());
    rows.push_back(std::move(row));
  }
  return rows;
}

Trajectory read_trajectory(const fs::path& p) {
  Trajectory t;
  t.dimension = 6;
  for (const auto& row : read_csv(p)) {
    if (row.size() != 7) continue;
    t.times.push_back(row[0]);
    t.states.insert(t.states.end(), row.begin() + 1, row.end());
  }
  return t;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

// Budgets quoted for 8 workers scale with the workers actually available.
double scaled_budget(double seconds_on_8) {
  const unsigned threads = std::min(default_thread_count(), 8u);
  return seconds_on_8 * 8.0 / static_cast<double>(threads);
}

// ---------------------------------------------------------------------------

void criterion_1() {
  const fs::path dir = out_dir("c1");
  const Run r = cli({"hopf", "--config", config("hopf_tau3"), "--mode", "tau3", "--out", dir.string()});
  const json j = read_json(dir / "bifurcation.json");
  report("command succeeds", r.code == 0, "exit " + std::to_string(r.code));
  const double w = j.value("omega0", NAN), t = j.value("tau0", NAN);
  report("omega0 = 2.2603 +- 0.0005", std::abs(w - 2.2603) <= 5e-4, "got " + num(w));
  report("tau0 = 0.1234 +- 0.0005", std::abs(t - 0.1234) <= 5e-4, "got " + num(t));
  report("runtime < 1 s", r.seconds < 1.0, num(r.seconds) + " s");
}

void criterion_2() {
  struct Case {
    const char* config;
    double tau;
    bool decays;
  };
  for (const Case& c : {Case{"simulate_equal_decay", 0.10, true}, Case{"simulate_equal_oscillation", 0.15, false}}) {
    const fs::path dir = out_dir(std::string("c2_") + c.config);
    const Run r = cli({"simulate", "--config", config(c.config), "--out", dir.string()});
    const std::string tag = "tau3 = " + num(c.tau);
    report(tag + ": command succeeds", r.code == 0, "exit " + std::to_string(r.code));
    const Trajectory traj = read_trajectory(dir / "trajectory.csv");
    const bool complete = traj.size() == 20001 && std::abs(traj.times.back() - 200.0) < 1e-9;
    report(tag + ": full horizon written", complete, std::to_string(traj.size()) + " rows");
    if (!complete) continue;
    if (c.decays) {
      double sup = 0.0;
      for (std::size_t i = 0; i < traj.size(); ++i)
        if (traj.times[i] > 100.0)
          for (double v : traj.state(i)) sup = std::max(sup, std::abs(v));
      report(tag + ": tail sup-norm < 1e-2", sup < 1e-2, "sup " + num(sup));
    } else {
      const AmplitudeResult a = amplitude(traj, 0.5);
      const double lo = *std::min_element(a.amplitude.begin(), a.amplitude.end());
      report(tag + ": every amplitude > 0.01", lo > 0.01, "min " + num(lo));
      report(tag + ": steady oscillation", a.steady, a.steady ? "steady" : "not steady");
    }
    report(tag + ": runtime < 60 s", r.seconds < 60.0, num(r.seconds) + " s");
  }
}

void criterion_3() {
  const fs::path dir = out_dir("c3");
  const Run r = cli({"hopf", "--config", config("hopf_tau4"), "--mode", "tau4", "--fix-tau2", "0.06",
                     "--out", dir.string()});
  json j = read_json(dir / "bifurcation.json");
  report("command succeeds", r.code == 0, "exit " + std::to_string(r.code));
  const double t = j.value("tau_star", NAN);
  report("tau0* within 5% of 0.2613", rel(t, 0.2613) <= 0.05,
         "got " + num(t) + ", off by " + num(100.0 * rel(t, 0.2613)) + "%");
  report("analysis runtime < 5 s", r.seconds < 5.0, num(r.seconds) + " s");

  const fs::path vdir = out_dir("c3_verify");
  const Run v = cli({"hopf", "--config", config("hopf_tau4"), "--mode", "tau4", "--fix-tau2", "0.06",
                     "--verify", "--out", vdir.string()});
  j = read_json(vdir / "bifurcation.json");
  report("verify command succeeds", v.code == 0, "exit " + std::to_string(v.code));
  const json below = j.contains("verify") ? j["verify"].value("below", json()) : json();
  const json above = j.contains("verify") ? j["verify"].value("above", json()) : json();
  const auto outcome = [](const json& x) { return x.is_object() ? x.value("outcome", "missing") : "missing"; };
  report("tau4 = 0.20 decays", below.is_object() && below.value("tau4", 0.0) == 0.20 && outcome(below) == "decays",
         outcome(below) + (below.is_object() ? ", sup " + num(below.value("tail_sup_norm", NAN)) : ""));
  report("tau4 = 0.36 oscillates", above.is_object() && above.value("tau4", 0.0) == 0.36 && outcome(above) == "oscillates",
         outcome(above));
  report("verify runtime < 120 s", v.seconds < 120.0, num(v.seconds) + " s");
}

void criterion_4() {
  const fs::path dir = out_dir("c4");
  const Run r = cli({"order-sweep", "--config", config("order_sweep"), "--out", dir.string()});
  report("command succeeds", r.code == 0, "exit " + std::to_string(r.code));
  const auto rows = read_csv(dir / "order_sweep.csv");
  bool grid = rows.size() == 51;
  for (std::size_t i = 0; grid && i < rows.size(); ++i)
    grid = std::abs(rows[i][0] - (0.50 + 0.01 * static_cast<double>(i))) < 1e-9 && !std::isnan(rows[i][1]);
  report("51 orders 0.50..1.00, all with a crossing", grid, std::to_string(rows.size()) + " rows");
  if (!grid) return;
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) decreasing = decreasing && rows[i][1] < rows[i - 1][1];
  report("omega0 strictly decreasing", decreasing,
         "omega0 " + num(rows.front()[1]) + " -> " + num(rows.back()[1]));
  std::size_t imin = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i][2] < rows[imin][2]) imin = i;
  report("min tau0 at theta = 0.73 +- 0.02", std::abs(rows[imin][0] - 0.73) <= 0.02 + 1e-12,
         "at theta " + num(rows[imin][0]));
  report("min tau0 <= 0.005", rows[imin][2] <= 0.005, "min " + num(rows[imin][2]));
  report("tau0(1.00) = 0.1911 +- 5%", rel(rows.back()[2], 0.1911) <= 0.05, "got " + num(rows.back()[2]));
  report("runtime < 10 s", r.seconds < 10.0, num(r.seconds) + " s");
}

void sensitivity_criterion(const std::string& cfg_name, std::size_t n, double threshold, double budget_on_8) {
  const fs::path dir = out_dir("c5_" + cfg_name);
  const Run r = cli({"sensitivity", "--config", config(cfg_name), "--out", dir.string()});
  report("command succeeds", r.code == 0, "exit " + std::to_string(r.code));
  const json j = read_json(dir / "sensitivity.json");
  report("N = " + std::to_string(n) + " on the shipped seed",
         j.value("samples", 0u) == n && j.value("seed", std::uint64_t{0}) == 20240601u,
         "samples " + std::to_string(j.value("samples", 0u)));

  std::vector<std::string> flags;
  const auto rows = read_csv(dir / "scatter.csv", &flags);
  std::vector<std::vector<double>> cols(8);
  for (const auto& row : rows) {
    if (row.size() < 8 || std::any_of(row.begin(), row.begin() + 8, [](double v) { return std::isnan(v); }))
      continue;
    for (std::size_t c = 0; c < 8; ++c) cols[c].push_back(row[c]);
  }
  const char* names[6] = {"x1", "x2", "x3", "y1", "y2", "y3"};
  const char* inputs[2] = {"tau1", "tau2"};
  double min_sp = INFINITY;
  std::string worst;
  for (int d = 0; d < 2; ++d)
    for (int k = 0; k < 6; ++k) {
      const auto s = spearman(cols[d], cols[2 + k]);
      const double v = s ? *s : -INFINITY;
      if (v < min_sp) {
        min_sp = v;
        worst = std::string(inputs[d]) + "/" + names[k];
      }
    }
  report("Spearman > 0 for every (delay, amplitude) pair", min_sp > 0.0,
         std::to_string(cols[0].size()) + " usable rows, min " + num(min_sp) + " at " + worst);

  const json p = j.value("prcc", json::object());
  auto get = [&](const char* in, int k) {
    const json v = p.contains(in) ? p[in].value(std::string("amp_") + names[k], json()) : json();
    return v.is_number() ? v.get<double>() : NAN;
  };
  double min1 = INFINITY, min2 = INFINITY;
  bool ordered = true;
  std::string ord;
  for (int k = 0; k < 6; ++k) {
    const double a = get("tau1", k), b = get("tau2", k);
    min1 = std::min(min1, std::isnan(a) ? -INFINITY : a);
    min2 = std::min(min2, std::isnan(b) ? -INFINITY : b);
    if (!(a < b)) ordered = false;
    ord += std::string(k ? " " : "") + names[k] + " " + num(a) + "/" + num(b);
  }
  report("PRCC(tau1) > " + num(threshold) + " for all amplitudes", min1 > threshold, "min " + num(min1));
  report("PRCC(tau2) > " + num(threshold) + " for all amplitudes", min2 > threshold, "min " + num(min2));
  report("PRCC(tau1) < PRCC(tau2) for all amplitudes", ordered, ord);
  const double budget = scaled_budget(budget_on_8);
  report("runtime within budget", r.seconds < budget,
         num(r.seconds) + " s, budget " + num(budget) + " s for " +
             std::to_string(std::min(default_thread_count(), 8u)) + " of 8 reference workers");
}

// ---------------------------------------------------------------------------

void property_leibniz() {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> gain(-3, 3), dk(1, 5);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::array<double, 6> k{};
    for (double& v : k) v = dk(rng);
    LinearGains g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        g.phi[i][j] = gain(rng);
        g.varphi[i][j] = gain(rng);
      }
    const oracle::Poly3 det = oracle::leibniz_det(oracle::char_matrix_symbolic(k, g));
    oracle::Poly3 mine;
    for (const CharMonomial& m : char_monomials(compute_coeffs(k, g))) mine[{m.power, m.e1, m.e2}] += m.coef;
    std::set<oracle::Exponent> keys;
    for (const auto& [e, c] : det) keys.insert(e);
    for (const auto& [e, c] : mine) keys.insert(e);
    for (const auto& e : keys) {
      const double a = mine.count(e) ? mine.at(e) : 0.0, b = det.count(e) ? det.at(e) : 0.0;
      worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
  }
  report("coefficients equal the 6x6 determinant expansion on 20 integer gain sets", worst <= 1e-9,
         "max scaled diff " + num(worst));
}

void property_roots() {
  std::mt19937_64 rng(505);
  std::normal_distribution<double> n(0.0, 1.0);
  double worst6 = 0.0, worst4 = 0.0, res4 = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c(7);
    for (double& v : c) v = n(rng);
    c[0] = 1.0 + std::abs(c[0]);
    worst6 = std::max(worst6, oracle::match_distance(polynomial_roots(std::span<const double>(c)),
                                                     oracle::companion_roots(c)));
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 5> q{};
    for (double& v : q) v = n(rng);
    const QuarticSolution s = ferrari_roots(q);
    worst4 = std::max(worst4, oracle::match_distance(s.roots, oracle::companion_roots(std::vector<double>(q.begin(), q.end()))));
    res4 = std::max(res4, s.max_residual);
  }
  report("degree-6 roots match companion eigenvalues (100 instances)", worst6 < 1e-8, "max " + num(worst6));
  report("quartic roots match companion eigenvalues (100 instances)", worst4 < 1e-8 && res4 < 1e-8,
         "max " + num(worst4) + ", residual " + num(res4));

  // Each fallback path, checked by substituting the roots back.
  const std::vector<std::array<double, 5>> cases = {
      {1, 0, -5, 0, 4}, {0, 1, -6, 11, -6}, {0, 0, 1, 0, -4}, {0, 0, 0, 2, -1},
      {2, 0, 0, 0, 0},  {1, -10, 35, -50, 24}, {1, -4, 6, -4, 1}};
  std::set<QuarticPath> paths;
  double worst = 0.0;
  for (const auto& q : cases) {
    const QuarticSolution s = ferrari_roots(q);
    paths.insert(s.path);
    double scale = 0.0;
    for (double v : q) scale = std::max(scale, std::abs(v));
    for (const cplx& r : s.roots) {
      const cplx v = (((q[0] * r + q[1]) * r + q[2]) * r + q[3]) * r + q[4];
      worst = std::max(worst, std::abs(v) / scale);
    }
  }
  const bool all = paths.count(QuarticPath::biquadratic) && paths.count(QuarticPath::cubic) &&
                   paths.count(QuarticPath::quadratic) && paths.count(QuarticPath::linear);
  const QuarticSolution zero = ferrari_roots({0, 0, 0, 0, 0});
  report("Ferrari path and fallbacks residual-verified", all && worst < 1e-8 && zero.roots.empty(),
         std::to_string(paths.size()) + " paths, max residual " + num(worst));
}

void property_transversality() {
  const NetworkParams params = reference_network();
  const LinearGains g = linearize(params);
  const CharCoeffs cc = compute_coeffs(params.decay, g);

  const Tau3Report r3 = analyze_tau3(cc, 0.91);
  const auto fd3 = oracle::fd_transversality(params.decay, g, 0.91, r3.omega0, r3.tau0,
                                             [](double p) { return std::pair<double, double>{p, p}; });
  const bool ok3 = r3.transversality && fd3 && rel(*r3.transversality, *fd3) < 1e-4;
  report("equal-delay transversality matches root continuation", ok3,
         ok3 ? "closed " + num(*r3.transversality) + ", fd " + num(*fd3) : "missing value");

  const Tau4Report r4 = find_critical(cc, 0.91, Tau4Mode::fix_tau2, 0.06);
  const double t1 = r4.tau1, t2 = r4.tau2;
  const auto fd1 = oracle::fd_transversality(params.decay, g, 0.91, r4.omega_star, r4.tau_star,
                                             [t1](double p) { return std::pair<double, double>{t1, t1 - 2.0 * p}; });
  const auto fd2 = oracle::fd_transversality(params.decay, g, 0.91, r4.omega_star, r4.tau_star,
                                             [t2](double p) { return std::pair<double, double>{t2 + 2.0 * p, t2}; });
  const bool ok4 = r4.transversality && r4.transversality_along_mode && fd1 && fd2 &&
                   rel(*r4.transversality, *fd1) < 1e-4 && rel(*r4.transversality_along_mode, *fd2) < 1e-4;
  report("tau4 transversality (leakage fixed and along the mode) matches root continuation", ok4,
         ok4 ? "closed " + num(*r4.transversality) + "/" + num(*r4.transversality_along_mode) + ", fd " +
                   num(*fd1) + "/" + num(*fd2)
             : "missing value");
}

double relaxation_error(double order, double h) {
  FdeConfig cfg;
  cfg.order = order;
  cfg.step = h;
  cfg.horizon = 1.0;
  cfg.delays = {0.0};
  const double x0[1] = {1.0};
  const Trajectory t = solve([](double, const LaggedStates& l, std::span<double> dx) { dx[0] = -l[0][0]; }, cfg, x0);
  return std::abs(t.at(t.size() - 1, 0) - oracle::mittag_leffler_kahan(order, -1.0));
}

void property_solver() {
  bool decreasing = true;
  std::string detail;
  for (double order : {0.5, 0.7, 0.91}) {
    double prev = INFINITY;
    for (double h : {0.1, 0.05, 0.025, 0.0125}) {
      const double e = relaxation_error(order, h);
      decreasing = decreasing && e < prev;
      prev = e;
    }
    detail += "theta " + num(order) + ": " + num(prev) + "; ";
  }
  report("Mittag-Leffler error strictly decreasing under step halving (at t = 1)", decreasing,
         detail + "finest-step errors");
  double lo = INFINITY, hi = 0.0, prev = relaxation_error(1.0, 0.1);
  for (double h : {0.05, 0.025, 0.0125}) {
    const double e = relaxation_error(1.0, h);
    lo = std::min(lo, prev / e);
    hi = std::max(hi, prev / e);
    prev = e;
  }
  report("theta = 1 error ratio per halving in [3, 5]", lo >= 3.0 && hi <= 5.0,
         "ratios " + num(lo) + ".." + num(hi));
}

void property_sampling() {
  bool strata_ok = true;
  for (std::size_t n : {2u, 10u, 200u, 1000u}) {
    const LhsDesign d = lhs_sample({{0.1, 0.6}, {0.1, 0.6}}, n, 20240601);
    for (std::size_t k = 0; k < 2; ++k) {
      std::set<long> strata;
      for (std::size_t i = 0; i < n; ++i)
        strata.insert(static_cast<long>(std::floor((d.at(i, k) - 0.1) / 0.5 * static_cast<double>(n))));
      strata_ok = strata_ok && strata.size() == n && *strata.begin() == 0 &&
                  *strata.rbegin() == static_cast<long>(n) - 1;
    }
  }
  report("LHS puts exactly one sample in every stratum", strata_ok, "N = 2, 10, 200, 1000");

  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 200;
    std::vector<double> x1(n), x2(n), y(n), x1t(n), x2t(n), yt(n);
    for (std::size_t i = 0; i < n; ++i) {
      x1[i] = u(rng);
      x2[i] = u(rng);
      y[i] = x1[i] - 0.5 * x2[i] + 0.3 * u(rng);
      x1t[i] = std::exp(2.0 * x1[i]);
      x2t[i] = std::cbrt(x2[i]) - 4.0;
      yt[i] = std::tanh(y[i]);
    }
    const PrccTable a = prcc({x1, x2}, {y}), b = prcc({x1t, x2t}, {yt});
    for (std::size_t i = 0; i < 2; ++i) worst = std::max(worst, std::abs(*a.at(i, 0) - *b.at(i, 0)));
  }
  report("PRCC unchanged under monotone transforms", worst <= 1e-12, "max diff " + num(worst));
}

void property_residuals() {
  const NetworkParams params = reference_network();
  const LinearGains g = linearize(params);
  const CharCoeffs cc = compute_coeffs(params.decay, g);
  double worst = 0.0;
  std::size_t count = 0;
  for (const Tau3Candidate& c : analyze_tau3(cc, 0.91).critical.candidates) {
    worst = std::max({worst, c.residual,
                      std::abs(oracle::char_det(params.decay, g, 0.91, cplx(0.0, c.omega), c.tau, c.tau))});
    ++count;
  }
  for (const auto& [mode, value] : {std::pair{Tau4Mode::fix_tau2, 0.06}, std::pair{Tau4Mode::fix_tau1, 0.589277}}) {
    for (const Tau4Candidate& c : find_critical(cc, 0.91, mode, value).candidates) {
      worst = std::max({worst, std::abs(c.residual_re), std::abs(c.residual_im), c.char_residual,
                        std::abs(oracle::char_det(params.decay, g, 0.91, cplx(0.0, c.omega), c.tau1, c.tau2))});
      ++count;
    }
  }
  report("back-substitution residual < 1e-6 at every reported critical point", count > 0 && worst < 1e-6,
         std::to_string(count) + " points, max " + num(worst));
}

void criterion_6() {
  property_leibniz();
  property_roots();
  property_transversality();
  property_solver();
  property_sampling();
  property_residuals();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string which;
  app.add_option("--criterion", which, "1, 2, 3, 4, 5s, 5 or 6")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "4", "5s", "5", "6"}));
  CLI11_PARSE(app, argc, argv);
  g_label = which;

  if (which == "1") criterion_1();
  else if (which == "2") criterion_2();
  else if (which == "3") criterion_3();
  else if (which == "4") criterion_4();
  else if (which == "5s") sensitivity_criterion("sensitivity_smoke", 200, 0.85, 300.0);
  else if (which == "5") sensitivity_criterion("sensitivity", 1000, 0.9, 1800.0);
  else criterion_6();

  std::cout << "criterion " << which << ": " << (g_failed ? "FAIL" : "PASS") << "\n";
  return g_failed ? 1 : 0;
}
