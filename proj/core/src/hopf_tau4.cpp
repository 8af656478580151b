#include "fracbam/hopf_tau4.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "fracbam/errors.hpp"
#include "fracbam/polynomial.hpp"

namespace fracbam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double x) {
  x = std::fmod(x, kTwoPi);
  return x < 0.0 ? x + kTwoPi : x;
}

double wrap_pi(double x) { return std::remainder(x, kTwoPi); }

double circular_distance(double x, double y) { return std::abs(wrap_pi(x - y)); }

// (i omega)^{m theta} e^{i m omega tau1}
cplx rotor(double order, double omega, int m, double tau1) {
  return std::polar(std::pow(omega, m * order), m * order * kPi / 2.0 + m * omega * tau1);
}

cplx lambda_pow(double order, double omega, int p) {
  return std::polar(std::pow(omega, p * order), p * order * kPi / 2.0);
}

// -- generic scan for |Z(omega)| = 1 on a parametrized polynomial ---------

using PolyBuilder = std::function<std::vector<cplx>(double)>;

struct Crossing {
  double omega;
  cplx z;
};

std::vector<cplx> roots_at(const PolyBuilder& build, double omega) {
  const auto c = build(omega);
  return polynomial_roots(std::span<const cplx>(c));
}

// Greedy nearest pairing between two root sets.
std::vector<std::pair<std::size_t, std::size_t>> match_roots(const std::vector<cplx>& a,
                                                             const std::vector<cplx>& b) {
  struct Pair {
    double d;
    std::size_t i, j;
  };
  std::vector<Pair> all;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) all.push_back({std::abs(a[i] - b[j]), i, j});
  std::stable_sort(all.begin(), all.end(), [](const Pair& x, const Pair& y) { return x.d < y.d; });
  std::vector<char> ua(a.size(), 0), ub(b.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Pair& p : all)
    if (!ua[p.i] && !ub[p.j]) {
      ua[p.i] = ub[p.j] = 1;
      out.emplace_back(p.i, p.j);
    }
  std::sort(out.begin(), out.end());
  return out;
}

cplx nearest(const std::vector<cplx>& roots, cplx guess) {
  cplx best = roots.front();
  for (const cplx& r : roots)
    if (std::abs(r - guess) < std::abs(best - guess)) best = r;
  return best;
}

std::optional<Crossing> refine_crossing(const PolyBuilder& build, double lo, cplx zlo, double hi,
                                        cplx zhi) {
  double flo = std::log(std::abs(zlo)), fhi = std::log(std::abs(zhi));
  int side = 0;
  double om = hi;
  cplx zm = zhi;
  for (int it = 0; it < 200; ++it) {
    om = (flo == fhi) ? 0.5 * (lo + hi) : hi - fhi * (hi - lo) / (fhi - flo);
    if (!(om > lo && om < hi)) om = 0.5 * (lo + hi);
    const double t = (om - lo) / (hi - lo);
    const auto r = roots_at(build, om);
    if (r.empty()) return std::nullopt;
    zm = nearest(r, zlo + (zhi - zlo) * t);
    const double fm = std::log(std::abs(zm));
    if (fm == 0.0 || hi - lo <= 4e-16 * hi) break;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = om;
      flo = fm;
      zlo = zm;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = om;
      fhi = fm;
      zhi = zm;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
    if (std::abs(fm) < 1e-15) break;
  }
  return Crossing{om, zm};
}

std::vector<Crossing> unit_circle_crossings(const PolyBuilder& build, double omega_max, int n,
                                            std::size_t& failures) {
  std::vector<Crossing> out;
  const double dw = omega_max / n;
  std::vector<cplx> prev;
  for (int i = 1; i <= n; ++i) {
    const double om = dw * i;
    std::vector<cplx> cur;
    try {
      cur = roots_at(build, om);
    } catch (const NumericalError&) {
      ++failures;
      prev.clear();
      continue;
    }
    if (!prev.empty() && prev.size() == cur.size()) {
      for (auto [u, v] : match_roots(prev, cur)) {
        const double g0 = std::log(std::abs(prev[u])), g1 = std::log(std::abs(cur[v]));
        if (!std::isfinite(g0) || !std::isfinite(g1)) continue;
        if ((g0 < 0.0) == (g1 < 0.0) && g1 != 0.0) continue;
        try {
          if (auto c = refine_crossing(build, om - dw, prev[u], om, cur[v])) out.push_back(*c);
        } catch (const NumericalError&) {
          ++failures;
        }
      }
    }
    prev = std::move(cur);
  }
  return out;
}

// -- fix_tau1 chain ---------------------------------------------------------

struct PhasePoint {
  double x;
  double phase;
  double r;
  int sin_sign;
};

cplx cross_sum(const PValues& p, double x) {
  const cplx e = std::polar(1.0, x);
  return cplx(p.a[0], p.b[0]) / e + cplx(p.a[1], p.b[1]) + cplx(p.a[2], p.b[2]) * e;
}

double p_scale(const PValues& p) {
  double s = 0.0;
  for (int n = 0; n < 4; ++n) s += std::hypot(p.a[n], p.b[n]);
  return s;
}

// Angles x = 4 omega tau4 from the real quartic roots, kept on the sign
// branch that satisfies the modulus equation, with the signed phase
// mismatch of the full complex equation.
std::vector<PhasePoint> phase_points(const PValues& p, std::size_t& failures) {
  std::vector<PhasePoint> out;
  const double a4 = p.a[3];
  const double scale = p_scale(p);
  if (!(std::abs(a4) > 1e-14 * scale)) return out;
  QuarticSolution sol;
  try {
    sol = ferrari_roots(quartic_coeffs(p));
  } catch (const NumericalError&) {
    ++failures;
    return out;
  }
  for (const cplx& root : sol.roots) {
    if (std::abs(root.imag()) > 1e-7 * (1.0 + std::abs(root))) continue;
    double r = root.real();
    if (std::abs(r) > 1.0 + 1e-9) continue;
    r = std::clamp(r, -1.0, 1.0);
    const double base = std::acos(r);
    for (int s : {1, -1}) {
      if (s == -1 && (base == 0.0 || base == kPi)) continue;
      const double x = s == 1 ? base : kTwoPi - base;
      const cplx A = cross_sum(p, x);
      const double gap = std::abs(std::norm(A) - a4 * a4);
      if (gap > 1e-6 * scale * scale) continue;
      const cplx w = -A * std::polar(1.0, -2.0 * x) / a4;
      out.push_back({x, std::atan2(w.imag(), w.real()), r, s});
    }
  }
  return out;
}

std::optional<PhasePoint> phase_near(const CharCoeffs& cc, double order, double tau1, double omega,
                                     double guess, std::size_t& failures) {
  const auto pts = phase_points(p_eval(cc, order, tau1, omega), failures);
  if (pts.empty()) return std::nullopt;
  const PhasePoint* best = &pts.front();
  for (const auto& q : pts)
    if (circular_distance(q.x, guess) < circular_distance(best->x, guess)) best = &q;
  if (circular_distance(best->x, guess) > 0.5) return std::nullopt;
  return *best;
}

struct PhaseCrossing {
  double omega;
  PhasePoint point;
};

std::optional<PhaseCrossing> refine_phase(const CharCoeffs& cc, double order, double tau1,
                                          double lo, PhasePoint plo, double hi, PhasePoint phi,
                                          std::size_t& failures) {
  double flo = plo.phase, fhi = phi.phase;
  int side = 0;
  PhaseCrossing cur{hi, phi};
  for (int it = 0; it < 200; ++it) {
    double om = (flo == fhi) ? 0.5 * (lo + hi) : hi - fhi * (hi - lo) / (fhi - flo);
    if (!(om > lo && om < hi)) om = 0.5 * (lo + hi);
    const double t = (om - lo) / (hi - lo);
    const double guess = plo.x + wrap_pi(phi.x - plo.x) * t;
    auto pm = phase_near(cc, order, tau1, om, guess, failures);
    if (!pm) return std::nullopt;
    cur = {om, *pm};
    const double fm = pm->phase;
    if (fm == 0.0 || hi - lo <= 4e-16 * hi || std::abs(fm) < 1e-15) break;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = om;
      flo = fm;
      plo = *pm;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = om;
      fhi = fm;
      phi = *pm;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
  }
  return cur;
}

void finish_candidate(const CharCoeffs& cc, double order, const Tau4Options& opt,
                      Tau4Report& rep, double omega, double tau4, double tau1, double tau2) {
  const PValues p = p_eval(cc, order, tau1, omega);
  const double x = 4.0 * omega * tau4;
  const auto res = tau4_equations(p, x);
  const double chr = std::abs(char_function(cc, order, cplx(0.0, omega), tau1, tau2).value);
  const double worst = std::max({std::abs(res[0]), std::abs(res[1]), chr});
  if (!(worst < opt.residual_tol)) {
    rep.near_misses.push_back({omega, "residual above tolerance after refinement", worst});
    return;
  }
  if (opt.require_nonnegative_delays && (tau1 < -1e-12 || tau2 < -1e-12)) {
    rep.near_misses.push_back({omega, "implied delay is negative", worst});
    return;
  }
  const double r = std::cos(x);
  const double s = std::sin(x);
  rep.candidates.push_back(
      {omega, r, s >= 0.0 ? 1 : -1, 0, tau4, tau1, tau2, res[0], res[1], chr});
}

}  // namespace

const char* tau4_mode_name(Tau4Mode m) { return m == Tau4Mode::fix_tau1 ? "fix_tau1" : "fix_tau2"; }

PValues p_eval(const CharCoeffs& cc, double order, double tau1, double omega) {
  using C = Coeff;
  const cplx p1 = rotor(order, omega, 6, tau1) + cc[C::c11] * rotor(order, omega, 5, tau1) +
                  cc[C::c21] * rotor(order, omega, 4, tau1) +
                  cc[C::c31] * rotor(order, omega, 3, tau1) +
                  cc[C::c41] * rotor(order, omega, 2, tau1) +
                  cc[C::c51] * rotor(order, omega, 1, tau1) + cc.c61_decay;
  const cplx p2 = -(cc[C::c22] * rotor(order, omega, 4, tau1) +
                    cc[C::c32] * rotor(order, omega, 3, tau1) +
                    cc[C::c42] * rotor(order, omega, 2, tau1) +
                    cc[C::c52] * rotor(order, omega, 1, tau1) + cc[C::c62]);
  const cplx p3 = (cc[C::c43] - cc[C::c44]) * rotor(order, omega, 2, tau1) +
                  (cc[C::c53] - cc[C::c54]) * rotor(order, omega, 1, tau1) +
                  (cc[C::c63] - cc[C::c64]);
  const double p4 = cc.c61_cross - cc[C::c65];
  PValues out;
  out.a = {p1.real(), p2.real(), p3.real(), p4};
  out.b = {p1.imag(), p2.imag(), p3.imag(), 0.0};
  return out;
}

std::array<double, 5> quartic_coeffs(const PValues& p) {
  const auto [a1, a2, a3, a4] = p.a;
  const auto [b1, b2, b3, b4] = p.b;
  (void)b4;
  const double P = a1 * a3 + b1 * b3;
  const double M = a3 * b1 - a1 * b3;
  const double U = a2 * (a1 + a3) + b2 * (b1 + b3);
  const double V = a2 * (b1 - b3) + b2 * (a3 - a1);
  const double W = a2 * a2 + (a3 - a1) * (a3 - a1) - a4 * a4 + (b1 - b3) * (b1 - b3) + b2 * b2;
  return {16.0 * P * P + 16.0 * M * M,
          16.0 * P * U + 16.0 * M * V,
          8.0 * P * W + 4.0 * U * U + 4.0 * V * V - 16.0 * M * M,
          4.0 * U * W - 16.0 * M * V,
          W * W - 4.0 * V * V};
}

std::array<double, 2> tau4_equations(const PValues& p, double x) {
  const double c = std::cos(x), s = std::sin(x);
  return {(p.a[0] + p.a[2]) * c + (p.b[0] - p.b[2]) * s + p.a[1] + p.a[3] * std::cos(2.0 * x),
          (p.b[0] + p.b[2]) * c + (p.a[2] - p.a[0]) * s + p.b[1] + p.a[3] * std::sin(2.0 * x)};
}

double omega_upper_bound(const CharCoeffs& cc, double order) {
  std::array<double, 6> by_power{};
  for (const CharMonomial& m : char_monomials(cc))
    if (m.power < 6) by_power[m.power] += std::abs(m.coef);
  const double mx = *std::max_element(by_power.begin(), by_power.end());
  return std::pow(1.0 + mx, 1.0 / order);
}

Tau4Report find_critical(const CharCoeffs& cc, double order, Tau4Mode mode, double fixed_value,
                         const Tau4Options& opt) {
  if (!(order > 0.0 && order <= 1.0)) throw ConfigError("order must lie in (0,1]");
  if (!(fixed_value >= 0.0) || !std::isfinite(fixed_value))
    throw ConfigError("the fixed delay must be non-negative");
  if (opt.grid_points < 2) throw ConfigError("the frequency grid needs at least two points");

  Tau4Report rep;
  rep.mode = mode;
  rep.fixed_value = fixed_value;
  rep.order = order;
  rep.omega_max = opt.omega_max > 0.0 ? opt.omega_max : 2.0 * omega_upper_bound(cc, order);
  const int n = opt.grid_points;
  const double dw = rep.omega_max / n;

  if (mode == Tau4Mode::fix_tau1) {
    const double tau1 = fixed_value;
    auto accept = [&](double lo, const PhasePoint& plo, double hi, const PhasePoint& phi) {
      auto c = refine_phase(cc, order, tau1, lo, plo, hi, phi, rep.grid_failures);
      if (!c) {
        rep.near_misses.push_back({hi, "branch lost during refinement", 0.0});
        return;
      }
      double x = wrap_2pi(c->point.x);
      int k = 0;
      if (x < 1e-14) {
        x = kTwoPi;
        k = 1;
      }
      const double tau4 = x / (4.0 * c->omega);
      const std::size_t before = rep.candidates.size();
      finish_candidate(cc, order, opt, rep, c->omega, tau4, tau1, tau1 - 2.0 * tau4);
      if (rep.candidates.size() > before) rep.candidates.back().k = k;
    };
    auto sign_change = [](const PhasePoint& u, const PhasePoint& v) {
      if ((u.phase < 0.0) == (v.phase < 0.0) && v.phase != 0.0) return false;
      return std::abs(u.phase - v.phase) < kPi;  // otherwise a wrap, not a zero
    };
    // A branch that ends between grid points (two real roots merging into a
    // complex pair) is followed by bisection up to the fold, so a zero that
    // sits just before the fold is not skipped.
    auto edge = [&](double have, PhasePoint p, double gone) {
      for (int it = 0; it < 60 && std::abs(gone - have) > 1e-14 * gone; ++it) {
        const double mid = 0.5 * (have + gone);
        auto q = phase_near(cc, order, tau1, mid, p.x, rep.grid_failures);
        if (q && circular_distance(q->x, p.x) < 0.1) {
          have = mid;
          p = *q;
        } else {
          gone = mid;
        }
      }
      return std::make_pair(have, p);
    };
    auto nearest_in = [](const std::vector<PhasePoint>& pts, double x) -> const PhasePoint* {
      const PhasePoint* best = nullptr;
      for (const auto& w : pts)
        if (!best || circular_distance(w.x, x) < circular_distance(best->x, x)) best = &w;
      return best;
    };
    std::vector<PhasePoint> prev;
    for (int i = 1; i <= n; ++i) {
      const double om = dw * i;
      auto cur = phase_points(p_eval(cc, order, tau1, om), rep.grid_failures);
      std::vector<bool> cur_matched(cur.size(), false);
      for (const PhasePoint& u : prev) {
        // mutual nearest neighbours on the circle
        const PhasePoint* v = nearest_in(cur, u.x);
        const bool matched = v && circular_distance(v->x, u.x) <= 0.5 && nearest_in(prev, v->x) == &u;
        if (!matched) {
          if (i == 1) continue;
          auto [w_end, p_end] = edge(om - dw, u, om);
          if (w_end > om - dw && sign_change(u, p_end)) accept(om - dw, u, w_end, p_end);
          continue;
        }
        cur_matched[static_cast<std::size_t>(v - cur.data())] = true;
        if (sign_change(u, *v)) accept(om - dw, u, om, *v);
      }
      if (i > 1) {
        for (std::size_t j = 0; j < cur.size(); ++j) {
          if (cur_matched[j]) continue;
          auto [w_start, p_start] = edge(om, cur[j], om - dw);
          if (w_start < om && sign_change(p_start, cur[j])) accept(w_start, p_start, om, cur[j]);
        }
      }
      prev = std::move(cur);
    }
  } else {
    const double tau2 = fixed_value;
    const auto monos = char_monomials(cc);
    PolyBuilder build = [&](double om) {
      std::array<cplx, 7> asc{};
      for (const CharMonomial& m : monos)
        asc[m.e1] += m.coef * lambda_pow(order, om, m.power) *
                     std::polar(1.0, -(m.e1 + m.e2) * om * tau2);
      return std::vector<cplx>(asc.rbegin(), asc.rend());
    };
    for (const Crossing& c : unit_circle_crossings(build, rep.omega_max, n, rep.grid_failures)) {
      // E = e^{-2 i omega tau4}
      double x = wrap_2pi(-std::arg(c.z));
      int k = 0;
      if (x < 1e-14) {
        x = kTwoPi;
        k = 1;
      }
      const double tau4 = x / (2.0 * c.omega);
      const std::size_t before = rep.candidates.size();
      finish_candidate(cc, order, opt, rep, c.omega, tau4, tau2 + 2.0 * tau4, tau2);
      if (rep.candidates.size() > before) rep.candidates.back().k = k;
    }
  }

  std::stable_sort(rep.candidates.begin(), rep.candidates.end(),
                   [](const Tau4Candidate& a, const Tau4Candidate& b) {
                     return a.omega != b.omega ? a.omega < b.omega : a.k < b.k;
                   });
  // the same crossing can be reached from both ends of a fold
  rep.candidates.erase(
      std::unique(rep.candidates.begin(), rep.candidates.end(),
                  [](const Tau4Candidate& a, const Tau4Candidate& b) {
                    return std::abs(a.omega - b.omega) <= 1e-9 * (1.0 + b.omega) &&
                           std::abs(a.tau4 - b.tau4) <= 1e-9 * (1.0 + b.tau4);
                  }),
      rep.candidates.end());
  if (rep.candidates.empty()) return rep;

  std::size_t best = 0;
  for (std::size_t i = 1; i < rep.candidates.size(); ++i)
    if (rep.candidates[i].tau4 < rep.candidates[best].tau4) best = i;
  const Tau4Candidate& b = rep.candidates[best];
  rep.best = best;
  rep.verdict = Verdict::bifurcation;
  rep.omega_star = b.omega;
  rep.tau_star = b.tau4;
  rep.tau1 = b.tau1;
  rep.tau2 = b.tau2;

  QuarticReport qr;
  const PValues p = p_eval(cc, order, b.tau1, b.omega);
  qr.q = quartic_coeffs(p);
  try {
    qr.solution = ferrari_roots(qr.q);
    qr.match_distance = 1e300;
    for (const cplx& r : qr.solution.roots)
      qr.match_distance = std::min(qr.match_distance, std::abs(r - cplx(b.r, 0.0)));
  } catch (const NumericalError&) {
    qr.match_distance = -1.0;
  }
  rep.quartic = qr;

  try {
    rep.transversality = transversality_tau4(cc, order, b.tau1, b.omega, b.tau4);
    rep.transversality_along_mode =
        mode == Tau4Mode::fix_tau1
            ? *rep.transversality
            : transversality_tau4_fixed_tau2(cc, order, b.tau2, b.omega, b.tau4);
  } catch (const NumericalError& e) {
    rep.transversality_error = e.what();
  }
  return rep;
}

Tau4Terms tau4_terms(const CharCoeffs& cc, double order, double tau1, double omega, double tau4) {
  const PValues p = p_eval(cc, order, tau1, omega);
  const auto [a1, a2, a3, a4] = p.a;
  const double b1 = p.b[0], b3 = p.b[2];
  (void)a2;
  const double x = 4.0 * omega * tau4;
  const double cx = std::cos(x), sx = std::sin(x);
  const double c2x = std::cos(2.0 * x), s2x = std::sin(2.0 * x);
  const double w = omega;
  Tau4Terms t{};
  t.theta1 = 4 * w * a1 * sx - 4 * w * b1 * cx + 4 * w * a3 * sx + 4 * w * b3 * cx + 8 * w * a4 * s2x;
  t.theta2 = 4 * w * a1 * cx + 4 * w * b1 * sx - 4 * w * a3 * cx + 4 * w * b3 * sx - 8 * w * a4 * c2x;

  // Derivative of the lambda^{p theta} e^{p lambda tau1} factors.
  for (const CharMonomial& m : char_monomials(cc)) {
    if (m.power == 0) continue;
    const double pt = m.power * order;
    const double ph = m.power * w * tau1 + (2 * m.e2 - 4) * w * tau4;
    const double d1 = m.coef * pt * std::pow(w, pt - 1.0);
    const double d0 = m.coef * m.power * tau1 * std::pow(w, pt);
    t.upsilon1 += d1 * std::cos(ph + (pt - 1.0) * kPi / 2.0) + d0 * std::cos(ph + pt * kPi / 2.0);
    t.upsilon2 += d1 * std::sin(ph + (pt - 1.0) * kPi / 2.0) + d0 * std::sin(ph + pt * kPi / 2.0);
  }
  // Derivative of the e^{k lambda tau4} factors.
  t.upsilon1 += -4 * tau4 * (a1 * cx + b1 * sx) + 4 * tau4 * (a3 * cx - b3 * sx) + 8 * tau4 * a4 * c2x;
  t.upsilon2 += -4 * tau4 * (b1 * cx - a1 * sx) + 4 * tau4 * (b3 * cx + a3 * sx) + 8 * tau4 * a4 * s2x;
  return t;
}

double transversality_tau4(const CharCoeffs& cc, double order, double tau1, double omega_star,
                           double tau_star) {
  const Tau4Terms t = tau4_terms(cc, order, tau1, omega_star, tau_star);
  return real_part_of_ratio(t.theta1, t.theta2, t.upsilon1, t.upsilon2);
}

double transversality_tau4_fixed_tau2(const CharCoeffs& cc, double order, double tau2,
                                      double omega, double tau4) {
  const CharValue f = char_function(cc, order, cplx(0.0, omega), tau2 + 2.0 * tau4, tau2);
  const cplx num = -2.0 * f.d_tau1;
  return real_part_of_ratio(num.real(), num.imag(), f.d_lambda.real(), f.d_lambda.imag());
}

std::optional<DelayCrossing> critical_communication_delay(const CharCoeffs& cc, double order,
                                                          double tau1, const Tau4Options& opt) {
  const auto monos = char_monomials(cc);
  PolyBuilder build = [&](double om) {
    std::array<cplx, 7> asc{};
    for (const CharMonomial& m : monos)
      asc[m.e2] += m.coef * lambda_pow(order, om, m.power) * std::polar(1.0, -m.e1 * om * tau1);
    std::vector<cplx> desc(asc.rbegin(), asc.rend());
    return desc;
  };
  const double wmax = opt.omega_max > 0.0 ? opt.omega_max : 2.0 * omega_upper_bound(cc, order);
  std::size_t failures = 0;
  std::optional<DelayCrossing> best;
  for (const Crossing& c : unit_circle_crossings(build, wmax, opt.grid_points, failures)) {
    double x = wrap_2pi(-std::arg(c.z));
    if (x < 1e-14) x = kTwoPi;
    const double tau2 = x / c.omega;
    const double res = std::abs(char_function(cc, order, cplx(0.0, c.omega), tau1, tau2).value);
    if (!(res < opt.residual_tol)) continue;
    if (!best || tau2 < best->delay) best = DelayCrossing{c.omega, tau2, res};
  }
  return best;
}

}  // namespace fracbam
