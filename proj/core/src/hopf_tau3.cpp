#include "fracbam/hopf_tau3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracbam/errors.hpp"
#include "fracbam/parallel.hpp"
#include "fracbam/polynomial.hpp"

namespace fracbam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResidualTol = 1e-6;
constexpr double kMergeDistance = 1e-7;
constexpr int kMaxBranch = 50;

}  // namespace

const char* verdict_name(Verdict v) {
  return v == Verdict::bifurcation ? "bifurcation" : "no_bifurcation";
}

std::array<cplx, 6> aux_poly_roots(const std::array<double, 6>& d) {
  const std::array<double, 7> p = {1.0, d[0], d[1], d[2], d[3], d[4], d[5]};
  const auto r = polynomial_roots(std::span<const double>(p));
  std::array<cplx, 6> out{};
  std::copy(r.begin(), r.end(), out.begin());
  return out;
}

std::array<cplx, 6> aux_poly_roots(const CharCoeffs& cc) { return aux_poly_roots(cc.d); }

cplx equal_delay_function(const std::array<double, 6>& d, double order, cplx lambda, double tau) {
  cplx sum = principal_pow(lambda, 6.0 * order);
  for (int j = 1; j <= 6; ++j)
    sum += d[j - 1] * principal_pow(lambda, (6 - j) * order) * std::exp(-static_cast<double>(j) * lambda * tau);
  return sum;
}

CriticalPoints critical_points(std::span<const cplx> roots, const std::array<double, 6>& d,
                               double order) {
  CriticalPoints out;
  std::vector<cplx> distinct;
  std::vector<std::size_t> index;
  for (std::size_t n = 0; n < roots.size(); ++n) {
    bool dup = false;
    for (const cplx& r : distinct) dup = dup || std::abs(r - roots[n]) < kMergeDistance;
    if (!dup) {
      distinct.push_back(roots[n]);
      index.push_back(n);
    }
  }
  const double half = order * kPi / 2.0;
  for (std::size_t u = 0; u < distinct.size(); ++u) {
    const cplx s = distinct[u];
    const double mod = std::abs(s);
    if (!(mod > 0.0)) continue;
    const double omega = std::pow(mod, 1.0 / order);
    const double cosv = std::clamp((s.real() * std::cos(half) + s.imag() * std::sin(half)) / mod, -1.0, 1.0);
    const double base = std::acos(cosv);
    const double branches[2] = {base, 2.0 * kPi - base};
    for (int b = 0; b < 2; ++b) {
      // The mirror coincides with the base branch modulo 2 pi at 0 and pi.
      if (b == 1 && (base < 1e-15 || kPi - base < 1e-15)) continue;
      for (int k = 0; k <= kMaxBranch; ++k) {
        const double tau = (branches[b] + 2.0 * kPi * k) / omega;
        if (!(tau > 0.0)) continue;
        const double res = std::abs(equal_delay_function(d, order, cplx(0.0, omega), tau));
        if (res < kResidualTol) {
          out.candidates.push_back({index[u], b, k, omega, tau, res});
          break;
        }
      }
    }
  }
  std::stable_sort(out.candidates.begin(), out.candidates.end(),
                   [](const Tau3Candidate& a, const Tau3Candidate& b) { return a.tau < b.tau; });
  if (!out.candidates.empty()) {
    out.best = 0;
    out.omega0 = out.candidates[0].omega;
    out.tau0 = out.candidates[0].tau;
  }
  return out;
}

Tau3Terms tau3_terms(const std::array<double, 6>& d, double order, double omega, double tau) {
  const double th = order;
  Tau3Terms t{0.0, 0.0, 0.0, 0.0};
  // Phi: j d_j omega^{(6-j) theta + 1} (sin, cos)(j omega tau - (6-j) theta pi / 2)
  for (int j = 1; j <= 6; ++j) {
    const double m = 6 - j;
    const double amp = j * d[j - 1] * std::pow(omega, m * th + 1.0);
    const double arg = j * omega * tau - m * th * kPi / 2.0;
    t.phi1 += amp * std::sin(arg);
    t.phi2 += amp * std::cos(arg);
  }
  // Psi: leading term, then (A e^{i alpha} - B e^{i beta}) e^{-i j omega tau}.
  t.psi1 = 6.0 * th * std::pow(omega, 6.0 * th - 1.0) * std::cos((6.0 * th - 1.0) * kPi / 2.0);
  t.psi2 = 6.0 * th * std::pow(omega, 6.0 * th - 1.0) * std::sin((6.0 * th - 1.0) * kPi / 2.0);
  for (int j = 1; j <= 5; ++j) {
    const double m = 6 - j;
    const double A = m * th * std::pow(omega, m * th - 1.0);
    const double B = j * tau * std::pow(omega, m * th);
    const double alpha = (m * th - 1.0) * kPi / 2.0;
    const double beta = m * th * kPi / 2.0;
    const double cr = A * std::cos(alpha) - B * std::cos(beta);
    const double ci = A * std::sin(alpha) - B * std::sin(beta);
    const double cj = std::cos(j * omega * tau), sj = std::sin(j * omega * tau);
    t.psi1 += d[j - 1] * (cj * cr + sj * ci);
    t.psi2 += d[j - 1] * (cj * ci - sj * cr);
  }
  t.psi1 -= 6.0 * d[5] * tau * std::cos(6.0 * omega * tau);
  t.psi2 += 6.0 * d[5] * tau * std::sin(6.0 * omega * tau);
  return t;
}

double real_part_of_ratio(double n1, double n2, double d1, double d2) {
  const double den = d1 * d1 + d2 * d2;
  if (!(den >= 1e-14)) throw NumericalError("transversality denominator is degenerate");
  return (n1 * d1 + n2 * d2) / den;
}

double transversality_tau3(const CharCoeffs& cc, double order, double omega0, double tau0) {
  const Tau3Terms t = tau3_terms(cc.d, order, omega0, tau0);
  return real_part_of_ratio(t.phi1, t.phi2, t.psi1, t.psi2);
}

Tau3Report analyze_tau3(const CharCoeffs& cc, double order) {
  if (!(order > 0.0 && order <= 1.0)) throw ConfigError("order must lie in (0,1]");
  Tau3Report rep;
  rep.order = order;
  rep.roots = aux_poly_roots(cc);
  rep.critical = critical_points(rep.roots, cc.d, order);
  if (!rep.critical.best) return rep;
  rep.verdict = Verdict::bifurcation;
  rep.omega0 = rep.critical.omega0;
  rep.tau0 = rep.critical.tau0;
  rep.residual = rep.critical.candidates[*rep.critical.best].residual;
  try {
    rep.transversality = transversality_tau3(cc, order, rep.omega0, rep.tau0);
  } catch (const NumericalError& e) {
    rep.transversality_error = e.what();
  }
  return rep;
}

std::vector<SweepRow> order_sweep(const NetworkParams& params, std::span<const double> orders,
                                  unsigned threads) {
  const CharCoeffs cc = compute_coeffs(params.decay, linearize(params));
  std::vector<SweepRow> rows(orders.size());
  parallel_for(orders.size(), threads, [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.order = orders[i];
    try {
      const Tau3Report rep = analyze_tau3(cc, orders[i]);
      row.ok = true;
      row.verdict = rep.verdict;
      row.omega0 = rep.omega0;
      row.tau0 = rep.tau0;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

}  // namespace fracbam
