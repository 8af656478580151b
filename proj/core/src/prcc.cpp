#include "fracbam/prcc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fracbam/errors.hpp"

namespace fracbam {

std::vector<double> average_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) r[idx[t]] = avg;
    i = j + 1;
  }
  return r;
}

namespace {

void center(std::vector<double>& v) {
  const double m = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& e : v) e -= m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Orthonormal basis of the centered columns (intercept already removed).
std::vector<std::vector<double>> basis_of(std::vector<std::vector<double>> cols) {
  std::vector<std::vector<double>> q;
  for (auto& c : cols) {
    const double n0 = std::sqrt(dot(c, c));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : q) {
        const double p = dot(c, e);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= p * e[i];
      }
    const double nrm = std::sqrt(dot(c, c));
    if (!(nrm > 1e-10 * n0) || nrm == 0.0) continue;
    for (double& v : c) v /= nrm;
    q.push_back(std::move(c));
  }
  return q;
}

std::vector<double> residual(std::vector<double> y, const std::vector<std::vector<double>>& q) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& e : q) {
      const double p = dot(y, e);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] -= p * e[i];
    }
  return y;
}

bool constant(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
}

}  // namespace

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  std::vector<double> a(x.begin(), x.end()), b(y.begin(), y.end());
  center(a);
  center(b);
  const double sa = dot(a, a), sb = dot(b, b);
  if (!(sa > 0.0) || !(sb > 0.0)) return std::nullopt;
  return std::clamp(dot(a, b) / std::sqrt(sa * sb), -1.0, 1.0);
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) return std::nullopt;
  const auto rx = average_ranks(x), ry = average_ranks(y);
  return pearson(rx, ry);
}

PrccTable prcc(const std::vector<std::vector<double>>& inputs,
               const std::vector<std::vector<double>>& outputs) {
  const std::size_t k = inputs.size(), m = outputs.size();
  if (k == 0) throw ConfigError("PRCC needs at least one input column");
  const std::size_t n = inputs[0].size();
  for (const auto& c : inputs)
    if (c.size() != n) throw ConfigError("PRCC input columns differ in length");
  for (const auto& c : outputs)
    if (c.size() != n) throw ConfigError("PRCC output columns differ in length");
  if (n <= k + 1) throw ConfigError("PRCC needs more samples than inputs + 1");

  std::vector<std::vector<double>> rin(k), rout(m);
  std::vector<char> in_ok(k), out_ok(m);
  for (std::size_t i = 0; i < k; ++i) {
    in_ok[i] = !constant(inputs[i]);
    rin[i] = average_ranks(inputs[i]);
    center(rin[i]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    out_ok[j] = !constant(outputs[j]);
    rout[j] = average_ranks(outputs[j]);
    center(rout[j]);
  }

  PrccTable t;
  t.inputs = k;
  t.outputs = m;
  t.values.assign(k * m, std::nullopt);
  for (std::size_t i = 0; i < k; ++i) {
    if (!in_ok[i]) continue;
    std::vector<std::vector<double>> others;
    for (std::size_t l = 0; l < k; ++l)
      if (l != i) others.push_back(rin[l]);
    const auto q = basis_of(std::move(others));
    const auto ex = residual(rin[i], q);
    for (std::size_t j = 0; j < m; ++j) {
      if (!out_ok[j]) continue;
      const auto ey = residual(rout[j], q);
      const double sx = dot(ex, ex), sy = dot(ey, ey);
      if (!(sx > 0.0) || !(sy > 0.0)) continue;
      t.values[i * m + j] = std::clamp(dot(ex, ey) / std::sqrt(sx * sy), -1.0, 1.0);
    }
  }
  return t;
}

}  // namespace fracbam
