#include "fracbam/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "fracbam/errors.hpp"
#include "fracbam/polynomial.hpp"

namespace fracbam {

namespace {

constexpr double kLeadTol = 1e-12;
constexpr double kVerifyTol = 1e-8;

cplx quartic(const std::array<cplx, 5>& q, cplx r) {
  return (((q[0] * r + q[1]) * r + q[2]) * r + q[3]) * r + q[4];
}

cplx dquartic(const std::array<cplx, 5>& q, cplx r) {
  return ((4.0 * q[0] * r + 3.0 * q[1]) * r + 2.0 * q[2]) * r + q[3];
}

double scaled_residual(const std::array<cplx, 5>& q, cplx r) {
  return std::abs(quartic(q, r)) / (1.0 + std::pow(std::abs(r), 4));
}

}  // namespace

const char* quartic_path_name(QuarticPath p) {
  switch (p) {
    case QuarticPath::ferrari: return "ferrari";
    case QuarticPath::ferrari_reselected: return "ferrari_reselected";
    case QuarticPath::biquadratic: return "biquadratic";
    case QuarticPath::cubic: return "cubic";
    case QuarticPath::quadratic: return "quadratic";
    case QuarticPath::linear: return "linear";
    case QuarticPath::none: return "none";
  }
  return "none";
}

QuarticSolution ferrari_roots(const std::array<double, 5>& qin) {
  QuarticSolution sol;
  double m = 0.0;
  for (double v : qin) {
    if (!std::isfinite(v)) throw NumericalError("quartic coefficients must be finite");
    m = std::max(m, std::abs(v));
  }
  if (m == 0.0) return sol;
  std::array<cplx, 5> q;
  for (int i = 0; i < 5; ++i) q[i] = qin[i] / m;

  if (std::abs(q[0]) <= kLeadTol) {
    std::size_t lead = 1;
    while (lead < 5 && std::abs(q[lead]) <= kLeadTol) ++lead;
    const std::size_t degree = 4 - lead;
    if (degree == 0) return sol;
    std::vector<cplx> low(q.begin() + static_cast<long>(lead), q.end());
    sol.roots = polynomial_roots(std::span<const cplx>(low));
    sol.path = degree == 3 ? QuarticPath::cubic
               : degree == 2 ? QuarticPath::quadratic
                             : QuarticPath::linear;
    for (int i = 0; i < static_cast<int>(lead); ++i) q[i] = 0.0;
  } else {
    const cplx a = q[0], b = q[1], c = q[2], d = q[3], e = q[4];
    sol.alpha = (8.0 * a * c - 3.0 * b * b) / (8.0 * a * a);
    sol.beta = (b * b * b - 4.0 * a * b * c + 8.0 * a * a * d) / (8.0 * a * a * a);
    sol.delta0 = c * c - 3.0 * b * d + 12.0 * a * e;
    sol.delta1 = 2.0 * c * c * c - 9.0 * b * c * d + 27.0 * b * b * e + 27.0 * a * d * d -
                 72.0 * a * c * e;
    const cplx disc = std::sqrt(sol.delta1 * sol.delta1 - 4.0 * sol.delta0 * sol.delta0 * sol.delta0);
    cplx inner = (sol.delta1 + disc) / 2.0;
    // Avoid cancellation when the other sign of the square root is larger.
    if (std::abs(inner) < std::abs((sol.delta1 - disc) / 2.0)) inner = (sol.delta1 - disc) / 2.0;
    const cplx q0 = inner == cplx(0.0) ? cplx(0.0) : std::pow(inner, 1.0 / 3.0);
    const cplx rot = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const double s_scale = 1.0 + std::sqrt(std::abs(sol.alpha)) + std::cbrt(std::abs(sol.beta));

    auto s_of = [&](cplx Qv) {
      const cplx sum = Qv == cplx(0.0) ? cplx(0.0) : Qv + sol.delta0 / Qv;
      return 0.5 * std::sqrt(-2.0 / 3.0 * sol.alpha + sum / (3.0 * a));
    };
    cplx Qv = q0;
    cplx S = s_of(Qv);
    int choice = 0;
    for (int k = 1; k <= 2 && std::abs(S) <= 1e-9 * s_scale; ++k) {
      const cplx Qk = q0 * std::pow(rot, k);
      const cplx Sk = s_of(Qk);
      if (std::abs(Sk) > std::abs(S)) {
        Qv = Qk;
        S = Sk;
        choice = k;
      }
    }
    sol.Q = Qv;
    sol.S = S;
    sol.cube_root = choice;
    const cplx shift = -b / (4.0 * a);
    if (std::abs(S) > 1e-9 * s_scale) {
      sol.path = choice == 0 ? QuarticPath::ferrari : QuarticPath::ferrari_reselected;
      const cplx t1 = 0.5 * std::sqrt(-4.0 * S * S - 2.0 * sol.alpha + sol.beta / S);
      const cplx t2 = 0.5 * std::sqrt(-4.0 * S * S - 2.0 * sol.alpha - sol.beta / S);
      sol.roots = {shift - S + t1, shift - S - t1, shift + S + t2, shift + S - t2};
    } else {
      // Resolvent degenerate: y^4 + alpha y^2 + gamma with beta ~ 0.
      sol.path = QuarticPath::biquadratic;
      const cplx gamma = (-3.0 * b * b * b * b + 256.0 * a * a * a * e - 64.0 * a * a * b * d +
                          16.0 * a * b * b * c) /
                         (256.0 * a * a * a * a);
      const cplx sq = std::sqrt(sol.alpha * sol.alpha - 4.0 * gamma);
      const cplx y1 = std::sqrt((-sol.alpha + sq) / 2.0);
      const cplx y2 = std::sqrt((-sol.alpha - sq) / 2.0);
      sol.roots = {shift + y1, shift - y1, shift + y2, shift - y2};
    }
  }

  for (cplx& r : sol.roots) {
    for (int it = 0; it < 4; ++it) {
      const cplx dp = dquartic(q, r);
      if (dp == cplx(0.0)) break;
      const cplx cand = r - quartic(q, r) / dp;
      if (!(std::abs(quartic(q, cand)) < std::abs(quartic(q, r)))) break;
      r = cand;
    }
    const double res = scaled_residual(q, r);
    sol.max_residual = std::max(sol.max_residual, res);
    if (!(res < kVerifyTol)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "quartic root (%.6g, %.6g) failed verification, residual %.3g",
                    r.real(), r.imag(), res);
      throw NumericalError(buf);
    }
  }
  return sol;
}

}  // namespace fracbam
