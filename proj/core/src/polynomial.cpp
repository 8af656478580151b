#include "fracbam/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "fracbam/errors.hpp"

namespace fracbam {

namespace {

constexpr double kEps = 2.220446049250313e-16;

// p(z), p'(z) and a rounding bound for p(z).
void horner(std::span<const cplx> a, cplx z, cplx& p, cplx& dp, double& err) {
  p = a[0];
  dp = 0.0;
  const double az = std::abs(z);
  err = std::abs(a[0]);
  for (std::size_t k = 1; k < a.size(); ++k) {
    dp = dp * z + p;
    p = p * z + a[k];
    err = err * az + std::abs(a[k]);
  }
  err *= 4.0 * kEps;
}

std::vector<cplx> derivative(std::span<const cplx> a) {
  const std::size_t n = a.size() - 1;
  std::vector<cplx> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = a[k] * static_cast<double>(n - k);
  return d;
}

double abs_scale(std::span<const cplx> a, double az) {
  double s = 0.0;
  for (const cplx& c : a) s = s * az + std::abs(c);
  return s;
}

// Replace numerically split clusters by a single refined multiple root when
// the refined point annihilates the lower derivatives.
void refine_clusters(std::span<const cplx> a, std::vector<cplx>& z, double radius) {
  const std::size_t n = z.size();
  std::vector<int> group(n, -1);
  int groups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] >= 0) continue;
    group[i] = groups;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (group[v] < 0 && std::abs(z[u] - z[v]) < radius * (1.0 + std::abs(z[u]))) {
          group[v] = groups;
          stack.push_back(v);
        }
    }
    ++groups;
  }
  for (int g = 0; g < groups; ++g) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (group[i] == g) members.push_back(i);
    const std::size_t m = members.size();
    if (m < 2) continue;
    cplx c = 0.0;
    for (auto i : members) c += z[i];
    c /= static_cast<double>(m);

    std::vector<std::vector<cplx>> ders{std::vector<cplx>(a.begin(), a.end())};
    for (std::size_t k = 1; k <= m; ++k) ders.push_back(derivative(ders.back()));
    const auto& pm1 = ders[m - 1];
    const auto& pm = ders[m];
    cplx w = c;
    for (int it = 0; it < 50; ++it) {
      const cplx num = poly_eval(std::span<const cplx>(pm1), w);
      const cplx den = poly_eval(std::span<const cplx>(pm), w);
      if (den == cplx(0.0)) break;
      const cplx step = num / den;
      w -= step;
      if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(w))) break;
    }
    bool ok = std::abs(w - c) < radius * (1.0 + std::abs(c));
    for (std::size_t k = 0; ok && k + 1 < m; ++k) {
      const double scale = abs_scale(ders[k], std::abs(w));
      ok = std::abs(poly_eval(std::span<const cplx>(ders[k]), w)) <= 1e-10 * scale;
    }
    if (ok)
      for (auto i : members) z[i] = w;
  }
}

}  // namespace

cplx poly_eval(std::span<const cplx> coeffs, cplx z) {
  cplx p = 0.0;
  for (const cplx& c : coeffs) p = p * z + c;
  return p;
}

cplx poly_eval(std::span<const double> coeffs, cplx z) {
  cplx p = 0.0;
  for (double c : coeffs) p = p * z + c;
  return p;
}

std::vector<cplx> polynomial_roots(std::span<const double> coeffs, const RootOptions& opt) {
  std::vector<cplx> c(coeffs.begin(), coeffs.end());
  return polynomial_roots(std::span<const cplx>(c), opt);
}

std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs, const RootOptions& opt) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == cplx(0.0)) ++lead;
  if (lead == coeffs.size()) throw NumericalError("zero polynomial has no isolated roots");
  std::vector<cplx> a(coeffs.begin() + static_cast<long>(lead), coeffs.end());
  for (const cplx& v : a)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("polynomial coefficients must be finite");

  std::vector<cplx> roots;
  while (a.size() > 1 && a.back() == cplx(0.0)) {
    roots.emplace_back(0.0, 0.0);
    a.pop_back();
  }
  const std::size_t n = a.size() - 1;
  if (n == 0) return roots;
  const cplx a0 = a[0];
  for (auto& v : a) v /= a0;
  if (n == 1) {
    roots.push_back(-a[1]);
    return roots;
  }

  // Start on a circle bounded by the Fujiwara radius, rotated off the axes.
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double r = std::pow(std::abs(a[k]), 1.0 / static_cast<double>(k));
    if (k == n) r = std::pow(std::abs(a[k]) / 2.0, 1.0 / static_cast<double>(k));
    radius = std::max(radius, r);
  }
  radius = std::max(radius, 1e-3);
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, ang);
  }

  std::vector<char> done(n, 0);
  std::size_t remaining = n;
  for (int it = 0; it < opt.max_iterations && remaining > 0; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      cplx p, dp;
      double err;
      horner(a, z[i], p, dp, err);
      if (std::abs(p) <= err) {
        done[i] = 1;
        --remaining;
        continue;
      }
      const cplx ratio = p / dp;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cplx w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        z[i] += cplx(1e-8, 1e-8) * (1.0 + std::abs(z[i]));
        continue;
      }
      z[i] -= w;
      if (std::abs(w) <= kEps * std::abs(z[i])) {
        done[i] = 1;
        --remaining;
      }
    }
  }
  if (remaining > 0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "Aberth iteration left %zu of %zu roots unconverged", remaining, n);
    throw NumericalError(buf);
  }

  // Newton polish, kept only when it lowers the residual.
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      cplx p, dp;
      double err;
      horner(a, r, p, dp, err);
      if (dp == cplx(0.0) || std::abs(p) <= err) break;
      const cplx cand = r - p / dp;
      if (std::abs(poly_eval(std::span<const cplx>(a), cand)) < std::abs(p))
        r = cand;
      else
        break;
    }
  }
  refine_clusters(a, z, opt.cluster_radius);
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace fracbam
