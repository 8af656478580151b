#pragma once

// Equal-delay analysis, tau1 = tau2 = tau3. With s = lambda^theta e^{lambda tau3}
// the characteristic equation becomes the sextic s^6 + d1 s^5 + ... + d6 = 0,
// and every root s_n yields a frequency |s_n|^{1/theta} and a family of delays.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracbam/charpoly.hpp"

namespace fracbam {

enum class Verdict { no_bifurcation, bifurcation };
const char* verdict_name(Verdict v);

struct Tau3Candidate {
  std::size_t root_index;
  int branch;  // 0: arccos value, 1: mirror 2 pi - arccos
  int k;
  double omega;
  double tau;
  double residual;
};

struct CriticalPoints {
  std::vector<Tau3Candidate> candidates;  // sorted by tau
  std::optional<std::size_t> best;        // index into candidates
  double omega0 = 0.0;
  double tau0 = 0.0;
};

struct Tau3Terms {
  double phi1, phi2, psi1, psi2;
};

struct Tau3Report {
  double order = 0.0;
  std::array<cplx, 6> roots{};
  CriticalPoints critical;
  Verdict verdict = Verdict::no_bifurcation;
  double omega0 = 0.0;
  double tau0 = 0.0;
  double residual = 0.0;
  std::optional<double> transversality;
  std::string transversality_error;
};

/// Roots of s^6 + d1 s^5 + ... + d6.
std::array<cplx, 6> aux_poly_roots(const std::array<double, 6>& d);
std::array<cplx, 6> aux_poly_roots(const CharCoeffs& cc);

/// sum_j d_j lambda^{(6-j) theta} e^{-j lambda tau}, d_0 = 1.
cplx equal_delay_function(const std::array<double, 6>& d, double order, cplx lambda, double tau);

/// Candidate delays for each root (after merging roots closer than 1e-7),
/// both arccos branches, k = 0..50, kept when tau > 0 and the equal-delay
/// residual at (i omega, tau) is below 1e-6. Only the first admissible k per
/// (root, branch) is listed.
CriticalPoints critical_points(std::span<const cplx> roots, const std::array<double, 6>& d,
                               double order);

/// Real and imaginary parts of Phi = -dF/dtau3 and Psi = dF/dlambda at
/// lambda = i omega, written out in trigonometric form.
Tau3Terms tau3_terms(const std::array<double, 6>& d, double order, double omega, double tau);

/// Re(num / den) = (n1 d1 + n2 d2) / (d1^2 + d2^2). Throws NumericalError when
/// d1^2 + d2^2 < 1e-14.
double real_part_of_ratio(double n1, double n2, double d1, double d2);

/// Re[d lambda / d tau3] at the critical point.
double transversality_tau3(const CharCoeffs& cc, double order, double omega0, double tau0);

Tau3Report analyze_tau3(const CharCoeffs& cc, double order);

struct SweepRow {
  double order;
  bool ok = false;
  Verdict verdict = Verdict::no_bifurcation;
  double omega0 = 0.0;
  double tau0 = 0.0;
  std::string error;
};

/// One analyze_tau3 per order; rows come back in grid order.
std::vector<SweepRow> order_sweep(const NetworkParams& params, std::span<const double> orders,
                                  unsigned threads = 1);

}  // namespace fracbam
