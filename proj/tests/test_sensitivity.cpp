#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "fracbam/counter_rng.hpp"
#include "fracbam/errors.hpp"
#include "fracbam/lhs.hpp"
#include "fracbam/prcc.hpp"
#include "fracbam/sensitivity.hpp"

using namespace fracbam;

namespace {

Trajectory synthetic(double horizon, double h, const std::function<double(double)>& x1) {
  Trajectory t;
  t.dimension = 6;
  const auto n = static_cast<std::size_t>(std::llround(horizon / h)) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = static_cast<double>(i) * h;
    t.times.push_back(ti);
    t.states.push_back(x1(ti));
    for (int c = 1; c < 6; ++c) t.states.push_back(0.0);
  }
  return t;
}

std::vector<double> uniform_column(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_SUITE("sensitivity") {
  TEST_CASE("counter generator reference values") {
    // SplitMix64 from state 0: first output
    CHECK(CounterRng(0, 0).bits(0) == 0xE220A8397B1DCDAFULL);
    CHECK(splitmix_mix(0) == 0);
    const CounterRng r(42, 3);
    CHECK(r.bits(7) == CounterRng(42, 3).bits(7));
    CHECK(r.bits(7) != CounterRng(42, 4).bits(7));
    CHECK(r.bits(7) != CounterRng(43, 3).bits(7));
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const double u = r.uniform(i);
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
      CHECK(r.below(i, 17) < 17);
    }
  }

  TEST_CASE("one sample per stratum in every dimension") {
    for (std::size_t n : {2u, 4u, 7u, 100u, 1000u}) {
      const LhsDesign d = lhs_sample({{0.0, 1.0}, {0.1, 0.6}, {-3.0, 5.0}}, n, 77);
      REQUIRE(d.matrix.size() == n * 3);
      for (std::size_t k = 0; k < 3; ++k) {
        const auto [lo, hi] = d.ranges[k];
        std::set<long> strata;
        for (std::size_t i = 0; i < n; ++i) {
          const double v = d.at(i, k);
          CHECK(v >= lo);
          CHECK(v <= hi);
          strata.insert(static_cast<long>(std::floor((v - lo) / (hi - lo) * static_cast<double>(n))));
        }
        CHECK(strata.size() == n);
        CHECK(*strata.begin() == 0);
        CHECK(*strata.rbegin() == static_cast<long>(n) - 1);
      }
    }
    const LhsDesign four = lhs_sample({{0.0, 1.0}}, 4, 1);
    std::set<int> quarters;
    for (double v : four.matrix) quarters.insert(static_cast<int>(v * 4.0));
    CHECK(quarters == std::set<int>{0, 1, 2, 3});
  }

  TEST_CASE("design is reproducible and centred") {
    const LhsDesign a = lhs_sample({{0.1, 0.6}, {0.1, 0.6}}, 1000, 20240601);
    const LhsDesign b = lhs_sample({{0.1, 0.6}, {0.1, 0.6}}, 1000, 20240601);
    CHECK(a.matrix == b.matrix);
    CHECK(a.matrix != lhs_sample({{0.1, 0.6}, {0.1, 0.6}}, 1000, 20240602).matrix);
    for (std::size_t k = 0; k < 2; ++k) {
      double mean = 0.0;
      for (double v : a.column(k)) mean += v;
      mean /= 1000.0;
      CHECK(std::abs(mean - 0.35) <= 0.005);
    }
    CHECK_THROWS_AS(lhs_sample({{0.0, 1.0}}, 1, 0), ConfigError);
    CHECK_THROWS_AS(lhs_sample({{1.0, 1.0}}, 10, 0), ConfigError);
    CHECK_THROWS_AS(lhs_sample({}, 10, 0), ConfigError);
  }

  TEST_CASE("average ranks and correlations") {
    const std::vector<double> x{3.0, 1.0, 4.0, 1.0, 5.0};
    const auto r = average_ranks(x);
    CHECK(r == std::vector<double>{3.0, 1.5, 4.0, 1.5, 5.0});
    const std::vector<double> y{1, 2, 3, 4, 5}, z{2, 4, 6, 8, 10.5};
    CHECK(*pearson(y, z) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(*spearman(y, z) == doctest::Approx(1.0));
    CHECK_FALSE(pearson(y, std::vector<double>(5, 2.0)).has_value());
  }

  TEST_CASE("PRCC detects a monotone input and ignores noise") {
    std::mt19937_64 rng(8);
    const std::size_t n = 200;
    const auto x1 = uniform_column(rng, n), x2 = uniform_column(rng, n), noise = uniform_column(rng, n);
    std::vector<double> mono(n), indep(n);
    for (std::size_t i = 0; i < n; ++i) {
      mono[i] = std::exp(3.0 * x1[i]);
      indep[i] = noise[i];
    }
    const PrccTable t = prcc({x1, x2}, {mono, indep});
    CHECK(*t.at(0, 0) >= 0.99);
    CHECK(std::abs(*t.at(1, 0)) <= 0.15);
    CHECK(std::abs(*t.at(0, 1)) <= 0.15);
    CHECK(std::abs(*t.at(1, 1)) <= 0.15);
  }

  TEST_CASE("PRCC is rank invariant and bounded") {
    std::mt19937_64 rng(13);
    const std::size_t n = 150;
    for (int trial = 0; trial < 10; ++trial) {
      const auto x1 = uniform_column(rng, n), x2 = uniform_column(rng, n), e = uniform_column(rng, n);
      std::vector<double> y(n), y2(n), x1t(n), x2t(n);
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = x1[i] + 2.0 * x2[i] + 0.5 * e[i];
        y2[i] = -x1[i] * x2[i] + e[i];
        x1t[i] = std::log(x1[i] + 1e-3);
        x2t[i] = std::pow(x2[i], 3.0) + 7.0;
      }
      const PrccTable a = prcc({x1, x2}, {y, y2});
      std::vector<double> yt(n), y2t(n);
      for (std::size_t i = 0; i < n; ++i) {
        yt[i] = std::exp(y[i]);
        y2t[i] = std::atan(y2[i]);
      }
      const PrccTable b = prcc({x1t, x2t}, {yt, y2t});
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          CHECK(std::abs(*a.at(i, j) - *b.at(i, j)) <= 1e-12);
          CHECK(std::abs(*a.at(i, j)) <= 1.0);
        }
    }
  }

  TEST_CASE("PRCC edge cases") {
    std::mt19937_64 rng(1);
    const auto x1 = uniform_column(rng, 20), x2 = uniform_column(rng, 20);
    const PrccTable t = prcc({x1, x2}, {std::vector<double>(20, 1.0)});
    CHECK_FALSE(t.at(0, 0).has_value());
    CHECK_THROWS_AS(prcc({x1, x2}, {std::vector<double>(3, 1.0)}), ConfigError);
    const std::vector<double> tiny{1, 2, 3};
    CHECK_THROWS_AS(prcc({tiny, tiny}, {tiny}), ConfigError);
  }

  TEST_CASE("amplitude of simple signals") {
    const Trajectory c = synthetic(50.0, 0.01, [](double) { return 0.7; });
    for (double a : amplitude(c, 0.5).amplitude) CHECK(a == 0.0);
    const Trajectory s = synthetic(50.0, 0.01, [](double t) { return std::sin(t); });
    const AmplitudeResult r = amplitude(s, 0.5);
    CHECK(std::abs(r.amplitude[0] - 1.0) < 1e-3);
    for (int k = 1; k < 6; ++k) CHECK(r.amplitude[k] == 0.0);
    CHECK(r.steady);
    CHECK_FALSE(r.decayed);
    const Trajectory grow = synthetic(50.0, 0.01, [](double t) { return 0.01 * t * std::sin(t); });
    CHECK_FALSE(amplitude(grow, 0.5).steady);
    const Trajectory decay = synthetic(50.0, 0.01, [](double t) { return std::exp(-t) * std::sin(t); });
    CHECK(amplitude(decay, 0.5).decayed);
    CHECK(tail_sup_norm(s, 25.0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(amplitude(s, 1.0), ConfigError);
  }

  TEST_CASE("scatter rows follow the design") {
    const LhsDesign d = lhs_sample({{0.1, 0.6}, {0.1, 0.6}}, 4, 5);
    std::vector<SampleResult> rows(4);
    for (std::size_t i = 0; i < 4; ++i) rows[i].amplitude = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    rows[2].flag = SampleFlag::diverged;
    const std::string csv = scatter_csv(d, rows);
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < csv.size()) {
      const std::size_t nl = csv.find('\n', pos);
      lines.push_back(csv.substr(pos, nl - pos));
      pos = nl + 1;
    }
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == kScatterHeader);
    CHECK(lines[1] == format_number(d.at(0, 0)) + "," + format_number(d.at(0, 1)) +
                          ",0.1,0.2,0.3,0.4,0.5,0.6,ok");
    CHECK(lines[3] == format_number(d.at(2, 0)) + "," + format_number(d.at(2, 1)) + ",,,,,,,diverged");
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(format_number(0.1234567891234) == "0.123456789");
  }

  TEST_CASE("pipeline output does not depend on the thread count") {
    SensitivityConfig cfg;
    cfg.horizon = 8.0;
    cfg.samples = 6;
    cfg.seed = 99;
    cfg.threads = 1;
    const SensitivityReport a = run_sensitivity(cfg);
    cfg.threads = 3;
    const SensitivityReport b = run_sensitivity(cfg);
    CHECK(scatter_csv(a.design, a.samples) == scatter_csv(b.design, b.samples));
    CHECK(prcc_csv(a.prcc, {"tau1", "tau2"}) == prcc_csv(b.prcc, {"tau1", "tau2"}));
    for (const SampleResult& s : a.samples) {
      CHECK(std::abs(s.tau1 / cfg.step - std::round(s.tau1 / cfg.step)) < 1e-9);
      for (double v : s.amplitude) CHECK(v >= 0.0);
    }
  }

  TEST_CASE("past the equal-delay threshold every neuron oscillates") {
    const SensitivityConfig cfg;
    const SampleResult s = simulate_sample(cfg, 0.15, 0.15);
    CHECK(s.flag == SampleFlag::ok);
    for (double a : s.amplitude) CHECK(a > 0.01);
  }
}
