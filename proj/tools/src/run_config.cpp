#include "fracbam_cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "fracbam/errors.hpp"

namespace fracbam::cli {

using nlohmann::json;

Activation ActivationSpec::build() const {
  if (kind == "tanh") return Activation::tanh();
  if (kind == "identity") return Activation::identity();
  if (kind == "scaled_tanh") return Activation::scaled_tanh(scale);
  throw ConfigError("unknown activation kind '" + kind + "'");
}

NetworkParams ModelSpec::build() const {
  NetworkParams p;
  p.decay = decay;
  p.weights_i_to_j = weights_i_to_j;
  p.weights_j_to_i = weights_j_to_i;
  p.f = f.build();
  p.g = g.build();
  return p;
}

std::vector<double> OrderSweepSpec::orders() const {
  std::vector<double> out;
  const double n = (stop - start) / step;
  const auto count = static_cast<long>(std::floor(n + 1e-9)) + 1;
  for (long i = 0; i < count; ++i)
    out.push_back(std::round((start + step * static_cast<double>(i)) * 1e12) / 1e12);
  return out;
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

bool finite_all(const std::array<double, 6>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

bool is_delay(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void RunConfig::validate() const {
  model.build().validate();

  require(solver.order > 0.0 && solver.order <= 1.0, "solver.order must lie in (0,1]");
  require(std::isfinite(solver.step) && solver.step > 0.0, "solver.step must be positive");
  require(std::isfinite(solver.horizon) && solver.horizon > solver.step,
          "solver.horizon must exceed solver.step");
  require(solver.divergence_bound > 0.0, "solver.divergence_bound must be positive");
  if (solver.memory == MemoryMode::windowed)
    require(solver.window_length > 0.0, "solver.window_length must be positive in windowed mode");

  require(is_delay(simulate.tau1) && is_delay(simulate.tau2),
          "analysis.simulate delays must be non-negative");
  require(finite_all(simulate.initial), "analysis.simulate.initial must be finite");

  require(hopf.mode == "tau3" || hopf.mode == "tau4", "analysis.hopf.mode must be tau3 or tau4");
  require(!(hopf.fix_tau1 && hopf.fix_tau2),
          "analysis.hopf: give at most one of fix_tau1 and fix_tau2");
  if (hopf.mode == "tau4")
    require(hopf.fix_tau1 || hopf.fix_tau2, "analysis.hopf: tau4 mode needs fix_tau1 or fix_tau2");
  if (hopf.fix_tau1) require(is_delay(*hopf.fix_tau1), "analysis.hopf.fix_tau1 must be >= 0");
  if (hopf.fix_tau2) require(is_delay(*hopf.fix_tau2), "analysis.hopf.fix_tau2 must be >= 0");
  require(hopf.grid_points >= 2, "analysis.hopf.grid_points must be at least 2");
  require(hopf.verify_below_factor > 0.0 && hopf.verify_below_factor < 1.0,
          "analysis.hopf.verify_below_factor must lie in (0,1)");
  require(hopf.verify_above_factor > 1.0, "analysis.hopf.verify_above_factor must exceed 1");
  if (hopf.verify_below) require(is_delay(*hopf.verify_below), "analysis.hopf.verify_below must be >= 0");
  if (hopf.verify_above) require(is_delay(*hopf.verify_above), "analysis.hopf.verify_above must be >= 0");
  require(finite_all(hopf.initial), "analysis.hopf.initial must be finite");

  require(order_sweep.step > 0.0, "analysis.order_sweep.step must be positive");
  require(order_sweep.start > 0.0 && order_sweep.stop <= 1.0 && order_sweep.start <= order_sweep.stop,
          "analysis.order_sweep range must satisfy 0 < start <= stop <= 1");

  require(sensitivity.samples >= 4, "analysis.sensitivity.samples must be at least 4");
  for (const auto& r : {sensitivity.tau1_range, sensitivity.tau2_range})
    require(is_delay(r.first) && std::isfinite(r.second) && r.first < r.second,
            "analysis.sensitivity ranges must be non-negative with low < high");
  require(sensitivity.transient_fraction > 0.0 && sensitivity.transient_fraction < 1.0,
          "analysis.sensitivity.transient_fraction must lie in (0,1)");
  require(finite_all(sensitivity.initial), "analysis.sensitivity.initial must be finite");
  require(sensitivity.steadiness_tol > 0.0 && sensitivity.decay_tol > 0.0,
          "analysis.sensitivity tolerances must be positive");

  require(!output.directory.empty(), "output.directory must not be empty");
}

RunConfig default_config() {
  RunConfig c;
  const NetworkParams ref = reference_network();
  c.model.decay = ref.decay;
  c.model.weights_i_to_j = ref.weights_i_to_j;
  c.model.weights_j_to_i = ref.weights_j_to_i;
  return c;
}

// -- parsing -------------------------------------------------------------------

namespace {

// Keys starting with '_' are comments.
void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  require(j.is_object(), where + " must be an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (!k.empty() && k[0] == '_') continue;
    require(allowed.count(k) > 0, "unknown key '" + k + "' in " + where);
  }
}

double get_number(const json& j, const std::string& where) {
  require(j.is_number(), where + " must be a number");
  return j.get<double>();
}

template <class T>
void read(const json& obj, const char* key, const std::string& where, T& out);

template <>
void read(const json& obj, const char* key, const std::string& where, double& out) {
  if (obj.contains(key)) out = get_number(obj[key], where + "." + key);
}

template <>
void read(const json& obj, const char* key, const std::string& where, int& out) {
  if (!obj.contains(key)) return;
  require(obj[key].is_number_integer(), where + "." + key + " must be an integer");
  out = obj[key].get<int>();
}

template <>
void read(const json& obj, const char* key, const std::string& where, std::uint64_t& out) {
  if (!obj.contains(key)) return;
  require(obj[key].is_number_unsigned(), where + "." + key + " must be a non-negative integer");
  out = obj[key].get<std::uint64_t>();
}

template <>
void read(const json& obj, const char* key, const std::string& where, bool& out) {
  if (!obj.contains(key)) return;
  require(obj[key].is_boolean(), where + "." + key + " must be true or false");
  out = obj[key].get<bool>();
}

template <>
void read(const json& obj, const char* key, const std::string& where, std::string& out) {
  if (!obj.contains(key)) return;
  require(obj[key].is_string(), where + "." + key + " must be a string");
  out = obj[key].get<std::string>();
}

template <>
void read(const json& obj, const char* key, const std::string& where,
          std::optional<double>& out) {
  if (!obj.contains(key)) return;
  if (obj[key].is_null()) {
    out.reset();
    return;
  }
  out = get_number(obj[key], where + "." + key);
}

template <>
void read(const json& obj, const char* key, const std::string& where, std::array<double, 6>& out) {
  if (!obj.contains(key)) return;
  const json& a = obj[key];
  require(a.is_array() && a.size() == 6, where + "." + key + " must be an array of 6 numbers");
  for (std::size_t i = 0; i < 6; ++i) out[i] = get_number(a[i], where + "." + key);
}

template <>
void read(const json& obj, const char* key, const std::string& where, Matrix3& out) {
  if (!obj.contains(key)) return;
  const json& a = obj[key];
  const std::string w = where + "." + key;
  require(a.is_array() && a.size() == 3, w + " must be a 3x3 array");
  for (std::size_t i = 0; i < 3; ++i) {
    require(a[i].is_array() && a[i].size() == 3, w + " must be a 3x3 array");
    for (std::size_t k = 0; k < 3; ++k) out[i][k] = get_number(a[i][k], w);
  }
}

template <>
void read(const json& obj, const char* key, const std::string& where,
          std::pair<double, double>& out) {
  if (!obj.contains(key)) return;
  const json& a = obj[key];
  require(a.is_array() && a.size() == 2, where + "." + key + " must be [low, high]");
  out = {get_number(a[0], where + "." + key), get_number(a[1], where + "." + key)};
}

void read_activation(const json& obj, const char* key, const std::string& where,
                     ActivationSpec& out) {
  if (!obj.contains(key)) return;
  const json& a = obj[key];
  const std::string w = where + "." + key;
  if (a.is_string()) {
    out = {a.get<std::string>(), 1.0};
  } else {
    check_keys(a, w, {"kind", "scale"});
    read(a, "kind", w, out.kind);
    read(a, "scale", w, out.scale);
  }
  require(out.kind == "tanh" || out.kind == "identity" || out.kind == "scaled_tanh",
          w + ": unknown activation kind '" + out.kind + "'");
}

const json& section(const json& j, const char* key, const json& empty) {
  return j.contains(key) ? j[key] : empty;
}

}  // namespace

RunConfig parse_config(const json& j) {
  RunConfig c = default_config();
  const json empty = json::object();
  check_keys(j, "config", {"model", "solver", "analysis", "output"});

  const json& m = section(j, "model", empty);
  check_keys(m, "model", {"decay", "weights_i_to_j", "weights_j_to_i", "f", "g"});
  read(m, "decay", "model", c.model.decay);
  read(m, "weights_i_to_j", "model", c.model.weights_i_to_j);
  read(m, "weights_j_to_i", "model", c.model.weights_j_to_i);
  read_activation(m, "f", "model", c.model.f);
  read_activation(m, "g", "model", c.model.g);

  const json& s = section(j, "solver", empty);
  check_keys(s, "solver", {"order", "step", "horizon", "memory", "window_length", "divergence_bound"});
  read(s, "order", "solver", c.solver.order);
  read(s, "step", "solver", c.solver.step);
  read(s, "horizon", "solver", c.solver.horizon);
  std::string memory = c.solver.memory == MemoryMode::full ? "full" : "windowed";
  read(s, "memory", "solver", memory);
  require(memory == "full" || memory == "windowed", "solver.memory must be full or windowed");
  c.solver.memory = memory == "full" ? MemoryMode::full : MemoryMode::windowed;
  read(s, "window_length", "solver", c.solver.window_length);
  read(s, "divergence_bound", "solver", c.solver.divergence_bound);

  const json& a = section(j, "analysis", empty);
  check_keys(a, "analysis", {"simulate", "hopf", "order_sweep", "sensitivity"});

  const json& sim = section(a, "simulate", empty);
  check_keys(sim, "analysis.simulate", {"tau1", "tau2", "initial"});
  read(sim, "tau1", "analysis.simulate", c.simulate.tau1);
  read(sim, "tau2", "analysis.simulate", c.simulate.tau2);
  read(sim, "initial", "analysis.simulate", c.simulate.initial);

  const json& h = section(a, "hopf", empty);
  const std::string hw = "analysis.hopf";
  check_keys(h, hw, {"mode", "fix_tau1", "fix_tau2", "grid_points", "verify_below_factor",
                     "verify_above_factor", "verify_below", "verify_above", "initial"});
  read(h, "mode", hw, c.hopf.mode);
  read(h, "fix_tau1", hw, c.hopf.fix_tau1);
  read(h, "fix_tau2", hw, c.hopf.fix_tau2);
  read(h, "grid_points", hw, c.hopf.grid_points);
  read(h, "verify_below_factor", hw, c.hopf.verify_below_factor);
  read(h, "verify_above_factor", hw, c.hopf.verify_above_factor);
  read(h, "verify_below", hw, c.hopf.verify_below);
  read(h, "verify_above", hw, c.hopf.verify_above);
  read(h, "initial", hw, c.hopf.initial);

  const json& o = section(a, "order_sweep", empty);
  check_keys(o, "analysis.order_sweep", {"start", "stop", "step"});
  read(o, "start", "analysis.order_sweep", c.order_sweep.start);
  read(o, "stop", "analysis.order_sweep", c.order_sweep.stop);
  read(o, "step", "analysis.order_sweep", c.order_sweep.step);

  const json& se = section(a, "sensitivity", empty);
  const std::string sw = "analysis.sensitivity";
  check_keys(se, sw, {"samples", "tau1_range", "tau2_range", "transient_fraction", "seed",
                      "initial", "steadiness_tol", "decay_tol"});
  std::uint64_t samples = c.sensitivity.samples;
  read(se, "samples", sw, samples);
  c.sensitivity.samples = static_cast<std::size_t>(samples);
  read(se, "tau1_range", sw, c.sensitivity.tau1_range);
  read(se, "tau2_range", sw, c.sensitivity.tau2_range);
  read(se, "transient_fraction", sw, c.sensitivity.transient_fraction);
  read(se, "seed", sw, c.sensitivity.seed);
  read(se, "initial", sw, c.sensitivity.initial);
  read(se, "steadiness_tol", sw, c.sensitivity.steadiness_tol);
  read(se, "decay_tol", sw, c.sensitivity.decay_tol);

  const json& out = section(j, "output", empty);
  check_keys(out, "output", {"directory", "print_summary"});
  read(out, "directory", "output", c.output.directory);
  read(out, "print_summary", "output", c.output.print_summary);

  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json activation_json(const ActivationSpec& a) {
  if (a.kind == "scaled_tanh") return {{"kind", a.kind}, {"scale", a.scale}};
  return a.kind;
}

}  // namespace

json to_json(const RunConfig& c) {
  json j;
  j["model"] = {{"decay", c.model.decay},
                {"weights_i_to_j", c.model.weights_i_to_j},
                {"weights_j_to_i", c.model.weights_j_to_i},
                {"f", activation_json(c.model.f)},
                {"g", activation_json(c.model.g)}};
  j["solver"] = {{"order", c.solver.order},
                 {"step", c.solver.step},
                 {"horizon", c.solver.horizon},
                 {"memory", c.solver.memory == MemoryMode::full ? "full" : "windowed"},
                 {"window_length", c.solver.window_length},
                 {"divergence_bound", c.solver.divergence_bound}};
  j["analysis"]["simulate"] = {
      {"tau1", c.simulate.tau1}, {"tau2", c.simulate.tau2}, {"initial", c.simulate.initial}};
  j["analysis"]["hopf"] = {{"mode", c.hopf.mode},
                           {"fix_tau1", opt(c.hopf.fix_tau1)},
                           {"fix_tau2", opt(c.hopf.fix_tau2)},
                           {"grid_points", c.hopf.grid_points},
                           {"verify_below_factor", c.hopf.verify_below_factor},
                           {"verify_above_factor", c.hopf.verify_above_factor},
                           {"verify_below", opt(c.hopf.verify_below)},
                           {"verify_above", opt(c.hopf.verify_above)},
                           {"initial", c.hopf.initial}};
  j["analysis"]["order_sweep"] = {
      {"start", c.order_sweep.start}, {"stop", c.order_sweep.stop}, {"step", c.order_sweep.step}};
  j["analysis"]["sensitivity"] = {
      {"samples", c.sensitivity.samples},
      {"tau1_range", {c.sensitivity.tau1_range.first, c.sensitivity.tau1_range.second}},
      {"tau2_range", {c.sensitivity.tau2_range.first, c.sensitivity.tau2_range.second}},
      {"transient_fraction", c.sensitivity.transient_fraction},
      {"seed", c.sensitivity.seed},
      {"initial", c.sensitivity.initial},
      {"steadiness_tol", c.sensitivity.steadiness_tol},
      {"decay_tol", c.sensitivity.decay_tol}};
  j["output"] = {{"directory", c.output.directory}, {"print_summary", c.output.print_summary}};
  return j;
}

}  // namespace fracbam::cli
