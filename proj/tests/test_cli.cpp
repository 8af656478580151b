#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fracbam/charpoly.hpp"
#include "fracbam/errors.hpp"
#include "fracbam_cli/commands.hpp"

using namespace fracbam;
using namespace fracbam::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(FRACBAM_BINARY_DIR) / "cli_scratch" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write_config(const fs::path& dir, const nlohmann::json& j) {
  const fs::path p = dir / "config.json";
  std::ofstream(p) << j.dump(2);
  return p;
}

int run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

nlohmann::json short_run(const fs::path& out) {
  nlohmann::json j;
  j["solver"] = {{"order", 0.91}, {"step", 0.01}, {"horizon", 2.0}};
  j["output"] = {{"directory", out.string()}, {"print_summary", false}};
  return j;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("config round trip") {
    const RunConfig d = default_config();
    CHECK(parse_config(to_json(d)) == d);
    for (const auto& entry : fs::directory_iterator(fs::path(FRACBAM_SOURCE_DIR) / "configs")) {
      CAPTURE(entry.path().string());
      const RunConfig c = load_config(entry.path().string());
      CHECK(parse_config(to_json(c)) == c);
      CHECK(to_json(parse_config(to_json(c))) == to_json(c));
    }
    RunConfig c = default_config();
    c.hopf.mode = "tau4";
    c.hopf.fix_tau1 = 0.3;
    c.model.f = {"scaled_tanh", 0.5};
    c.solver.memory = MemoryMode::windowed;
    c.solver.window_length = 20.0;
    c.sensitivity.seed = 0xFFFFFFFFFFFFFFFFULL;
    CHECK(parse_config(to_json(c)) == c);
  }

  TEST_CASE("config validation") {
    using nlohmann::json;
    CHECK_THROWS_AS(parse_config(json{{"solver", {{"order", 1.5}}}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"solver", {{"ordr", 0.9}}}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"model", {{"decay", {1, 1, 1, 0, 1, 1}}}}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"model", {{"decay", {1, 1, 1}}}}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"model", {{"f", "relu"}}}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"analysis", {{"hopf", {{"mode", "tau4"}}}}}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"analysis", {{"hopf", {{"fix_tau1", 0.1}, {"fix_tau2", 0.1}}}}}}),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"analysis", {{"sensitivity", {{"samples", -3}}}}}}), ConfigError);
    CHECK_NOTHROW(parse_config(json{{"_note", "comments are ignored"}, {"solver", {{"_why", 1}}}}));
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
  }

  TEST_CASE("exit codes") {
    const fs::path dir = scratch("exit");
    CHECK(run({"stability", "--config", "/nonexistent.json"}) == kExitConfig);
    CHECK(run({"frobnicate"}) == kExitConfig);
    CHECK(run({}) == kExitConfig);

    auto bad = short_run(dir / "bad_out");
    bad["model"]["decay"] = {0.4, 0.6, 0.0, 0.7, 0.8, 0.3};
    CHECK(run({"stability", "--config", write_config(dir, bad).string()}) == kExitConfig);
    CHECK_FALSE(fs::exists(dir / "bad_out"));

    auto ok = short_run(dir / "ok");
    CHECK(run({"stability", "--config", write_config(dir, ok).string()}) == kExitOk);
    CHECK(fs::exists(dir / "ok" / "stability.json"));

    // identity activations and strong excitatory coupling blow up
    auto div = short_run(dir / "div");
    div["model"] = {{"decay", {0.1, 0.1, 0.1, 0.1, 0.1, 0.1}},
                    {"weights_i_to_j", {{5, 5, 5}, {5, 5, 5}, {5, 5, 5}}},
                    {"weights_j_to_i", {{5, 5, 5}, {5, 5, 5}, {5, 5, 5}}},
                    {"f", "identity"},
                    {"g", "identity"}};
    div["solver"]["horizon"] = 20.0;
    div["analysis"]["simulate"] = {{"tau1", 0.1}, {"tau2", 0.1}};
    CHECK(run({"simulate", "--config", write_config(dir, div).string()}) == kExitDivergence);
    CHECK(fs::exists(dir / "div" / ".diverged"));
    const std::string partial = slurp(dir / "div" / "trajectory.csv");
    CHECK(count_lines(partial) > 2);
    CHECK(count_lines(partial) < 2002);

    // every sample diverges: more than half excluded
    div["output"]["directory"] = (dir / "div_sens").string();
    div["analysis"]["sensitivity"] = {{"samples", 4}};
    CHECK(run({"sensitivity", "--config", write_config(dir, div).string()}) == kExitNumerical);
    const auto summary = nlohmann::json::parse(slurp(dir / "div_sens" / "sensitivity.json"));
    CHECK(summary["excluded"] == 4);
    CHECK(summary.contains("warning"));
  }

  TEST_CASE("stability report matches the coefficient module") {
    const fs::path dir = scratch("stability");
    CHECK(run({"stability", "--config", write_config(dir, short_run(dir / "o")).string()}) == kExitOk);
    const auto j = nlohmann::json::parse(slurp(dir / "o" / "stability.json"));
    const NetworkParams p = reference_network();
    const CharCoeffs cc = compute_coeffs(p.decay, linearize(p));
    for (std::size_t i = 0; i < kCoeffCount; ++i)
      CHECK(j["coefficients"][coeff_name(static_cast<Coeff>(i))].get<double>() == cc.c[i]);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(j["d"][i].get<double>() == cc.d[i]);
      CHECK(j["D"][i].get<double>() == cc.D[i]);
    }
    CHECK(j["verdict"] == "stable");

    auto zero = short_run(dir / "z");
    zero["model"] = {{"weights_i_to_j", {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}},
                     {"weights_j_to_i", {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}};
    CHECK(run({"stability", "--config", write_config(dir, zero).string()}) == kExitOk);
    CHECK(nlohmann::json::parse(slurp(dir / "z" / "stability.json"))["verdict"] == "stable");
  }

  TEST_CASE("simulate files") {
    const fs::path dir = scratch("simulate");
    auto j = short_run(dir / "o");
    j["analysis"]["simulate"] = {{"tau1", 0.1}, {"tau2", 0.05}};
    const std::string cfg = write_config(dir, j).string();
    CHECK(run({"simulate", "--config", cfg}) == kExitOk);
    const std::string traj = slurp(dir / "o" / "trajectory.csv");
    const std::string phase = slurp(dir / "o" / "phase.csv");
    CHECK(traj.rfind("t,x1,x2,x3,y1,y2,y3\n", 0) == 0);
    CHECK(count_lines(traj) == 202);
    CHECK(phase.rfind("projection,t,u,v,w\n", 0) == 0);
    CHECK(count_lines(phase) == 6 * 201 + 1);
    CHECK(phase.find("\nx2-y2-y3,") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "o" / ".diverged"));
    // idempotent
    CHECK(run({"simulate", "--config", cfg}) == kExitOk);
    CHECK(slurp(dir / "o" / "trajectory.csv") == traj);
    CHECK(slurp(dir / "o" / "phase.csv") == phase);

    j["analysis"]["simulate"]["initial"] = {0, 0, 0, 0, 0, 0};
    CHECK(run({"simulate", "--config", write_config(dir, j).string(), "--out", (dir / "zero").string()}) == kExitOk);
    std::istringstream in(slurp(dir / "zero" / "trajectory.csv"));
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) CHECK(line.substr(line.find(',')) == ",0,0,0,0,0,0");
  }

  TEST_CASE("hopf command") {
    const fs::path dir = scratch("hopf");
    auto j = short_run(dir / "t3");
    CHECK(run({"hopf", "--config", write_config(dir, j).string(), "--mode", "tau3"}) == kExitOk);
    const auto t3 = nlohmann::json::parse(slurp(dir / "t3" / "bifurcation.json"));
    CHECK(t3["verdict"] == "bifurcation");
    CHECK(t3["tau0"].get<double>() == doctest::Approx(0.140224).epsilon(1e-5));

    CHECK(run({"hopf", "--config", write_config(dir, j).string(), "--mode", "tau4", "--fix-tau2", "0.06",
               "--out", (dir / "t4").string()}) == kExitOk);
    const std::string first = slurp(dir / "t4" / "bifurcation.json");
    const auto t4 = nlohmann::json::parse(first);
    CHECK(t4["fixed"] == "fix_tau2");
    CHECK(t4["tau_star"].get<double>() == doctest::Approx(0.264638).epsilon(1e-5));
    CHECK(t4["quartic"]["q"].size() == 5);
    CHECK(t4["exploratory"]["critical_tau2_at_tau1_zero"]["tau2"].get<double>() ==
          doctest::Approx(0.133483).epsilon(1e-5));
    CHECK(run({"hopf", "--config", write_config(dir, j).string(), "--mode", "tau4", "--fix-tau2", "0.06",
               "--out", (dir / "t4").string()}) == kExitOk);
    CHECK(slurp(dir / "t4" / "bifurcation.json") == first);

    CHECK(run({"hopf", "--config", write_config(dir, j).string(), "--mode", "tau4"}) == kExitConfig);
    CHECK(run({"hopf", "--config", write_config(dir, j).string(), "--fix-tau1", "0.1", "--fix-tau2",
               "0.1"}) == kExitConfig);

    auto zero = short_run(dir / "none");
    zero["model"] = {{"weights_i_to_j", {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}},
                     {"weights_j_to_i", {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}};
    CHECK(run({"hopf", "--config", write_config(dir, zero).string(), "--mode", "tau4", "--fix-tau1", "0.5"}) ==
          kExitOk);
    const auto none = nlohmann::json::parse(slurp(dir / "none" / "bifurcation.json"));
    CHECK(none["verdict"] == "no_bifurcation");
    CHECK(none["candidates"].empty());
  }

  TEST_CASE("order sweep file") {
    const fs::path dir = scratch("sweep");
    auto j = short_run(dir / "o");
    j["analysis"]["order_sweep"] = {{"start", 0.9}, {"stop", 1.0}, {"step", 0.05}};
    CHECK(run({"order-sweep", "--config", write_config(dir, j).string()}) == kExitOk);
    const std::string csv = slurp(dir / "o" / "order_sweep.csv");
    CHECK(csv.rfind("theta,omega0,tau0,status\n", 0) == 0);
    CHECK(count_lines(csv) == 4);
    CHECK(csv.find("\n0.95,") != std::string::npos);
    CHECK(csv.find("\n1,") != std::string::npos);
  }

  TEST_CASE("sensitivity files and seed override") {
    const fs::path dir = scratch("sens");
    auto j = short_run(dir / "a");
    j["solver"]["horizon"] = 6.0;
    j["analysis"]["sensitivity"] = {{"samples", 4}, {"seed", 5}};
    const std::string cfg = write_config(dir, j).string();
    CHECK(run({"sensitivity", "--config", cfg}) == kExitOk);
    const std::string scatter = slurp(dir / "a" / "scatter.csv");
    CHECK(count_lines(scatter) == 5);
    CHECK(slurp(dir / "a" / "prcc.csv").rfind("input,amp_x1,amp_x2,amp_x3,amp_y1,amp_y2,amp_y3\ntau1,", 0) == 0);
    const auto summary = nlohmann::json::parse(slurp(dir / "a" / "sensitivity.json"));
    CHECK(summary["samples"] == 4);
    CHECK(summary["seed"] == 5);
    CHECK(run({"sensitivity", "--config", cfg}) == kExitOk);
    CHECK(slurp(dir / "a" / "scatter.csv") == scatter);
    CHECK(run({"sensitivity", "--config", cfg, "--seed", "6", "--out", (dir / "b").string()}) == kExitOk);
    CHECK(slurp(dir / "b" / "scatter.csv") != scatter);
    CHECK(nlohmann::json::parse(slurp(dir / "b" / "sensitivity.json"))["seed"] == 6);
  }
}
