#include <cmath>

#include "doctest.h"
#include "fracbam/bam_model.hpp"
#include "fracbam/errors.hpp"

using namespace fracbam;

namespace {

double max_abs(const Trajectory& t) {
  double m = 0.0;
  for (double v : t.states) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_SUITE("bam") {
  TEST_CASE("the origin is an equilibrium") {
    const std::array<double, 6> zero{};
    const Trajectory t = simulate(reference_network(), 0.91, 0.15, 0.15, 10.0, 0.01, zero);
    CHECK(max_abs(t) == 0.0);
    CHECK(t.size() == 1001);
  }

  TEST_CASE("linearization uses the activation slopes") {
    NetworkParams p = reference_network();
    p.f = Activation::scaled_tanh(2.0);
    const LinearGains g = linearize(p);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(g.phi[i][j] == 2.0 * p.weights_j_to_i[i][j]);
        CHECK(g.varphi[i][j] == p.weights_i_to_j[i][j]);
      }
  }

  TEST_CASE("field matches the written-out equations") {
    const NetworkParams p = reference_network();
    const std::array<double, 6> a{0.1, -0.2, 0.3, -0.4, 0.5, -0.6}, b{0.7, 0.2, -0.1, 0.05, -0.3, 0.4};
    std::array<double, 6> dx{};
    evaluate_rhs(p, a, b, dx);
    for (int i = 0; i < 3; ++i) {
      double sx = -p.decay[i] * a[i], sy = -p.decay[3 + i] * a[3 + i];
      for (int j = 0; j < 3; ++j) {
        sx += p.weights_j_to_i[i][j] * std::tanh(b[3 + j]);
        sy += p.weights_i_to_j[i][j] * std::tanh(b[j]);
      }
      CHECK(dx[i] == doctest::Approx(sx).epsilon(1e-14));
      CHECK(dx[3 + i] == doctest::Approx(sy).epsilon(1e-14));
    }
  }

  TEST_CASE("validation rejects non-positive decay and bad activations") {
    NetworkParams p = reference_network();
    p.decay[2] = 0.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = reference_network();
    p.f = Activation::custom("shifted", [](double x) { return x + 1.0; }, 1.0);
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = reference_network();
    p.g = Activation::custom("flip", [](double x) { return -x; }, -1.0);
    CHECK_THROWS_AS(p.validate(), ConfigError);
    CHECK_NOTHROW(reference_network().validate());
  }

  TEST_CASE("small signals follow the linearized system") {
    const NetworkParams p = reference_network();
    std::array<double, 6> x0 = reference_initial_a();
    for (double& v : x0) v *= 1e-4;
    FdeConfig cfg;
    cfg.order = 0.91;
    cfg.step = 0.01;
    cfg.horizon = 20.0;
    cfg.delays = {0.1, 0.1};
    const Trajectory nl = solve(make_rhs(p), cfg, x0);
    const Trajectory lin = solve(make_linear_rhs(p.decay, linearize(p)), cfg, x0);
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < nl.states.size(); ++i) {
      diff = std::max(diff, std::abs(nl.states[i] - lin.states[i]));
      scale = std::max(scale, std::abs(lin.states[i]));
    }
    CHECK(diff < 1e-6 * scale);
  }

  TEST_CASE("relabelling neurons within a layer permutes the trajectory") {
    // swap x1 <-> x2
    const NetworkParams p = reference_network();
    NetworkParams q = p;
    std::swap(q.decay[0], q.decay[1]);
    std::swap(q.weights_j_to_i[0], q.weights_j_to_i[1]);
    for (auto& row : q.weights_i_to_j) std::swap(row[0], row[1]);
    std::array<double, 6> a = reference_initial_a(), b = a;
    std::swap(b[0], b[1]);
    const Trajectory ta = simulate(p, 0.91, 0.12, 0.12, 10.0, 0.01, a);
    const Trajectory tb = simulate(q, 0.91, 0.12, 0.12, 10.0, 0.01, b);
    const int perm[6] = {1, 0, 2, 3, 4, 5};
    double diff = 0.0;
    for (std::size_t i = 0; i < ta.size(); ++i)
      for (int c = 0; c < 6; ++c) diff = std::max(diff, std::abs(ta.at(i, c) - tb.at(i, perm[c])));
    CHECK(diff < 1e-12);
  }

  TEST_CASE("delays must sit on the step grid") {
    const std::array<double, 6> x0 = reference_initial_a();
    CHECK_THROWS_AS(simulate(reference_network(), 0.91, 0.105, 0.1, 1.0, 0.01, x0), ConfigError);
  }
}
