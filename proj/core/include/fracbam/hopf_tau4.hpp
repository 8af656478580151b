#pragma once

// Unequal-delay analysis in tau4 = (tau1 - tau2) / 2 with one delay held
// fixed. Multiplying the characteristic function by e^{6 lambda tau1 - 4 lambda tau4}
// gives
//   e^{-4 lambda tau4} p1 + p2 + e^{4 lambda tau4} p3 + e^{8 lambda tau4} p4 = 0,
// and at lambda = i omega, with r = cos(4 omega tau4), a quartic in r.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fracbam/charpoly.hpp"
#include "fracbam/hopf_tau3.hpp"
#include "fracbam/quartic.hpp"

namespace fracbam {

/// a_n = Re p_n(i omega), b_n = Im p_n(i omega). p4 is the real constant
/// c61_cross - c65, so b[3] = 0.
struct PValues {
  std::array<double, 4> a{};
  std::array<double, 4> b{};
};

PValues p_eval(const CharCoeffs& cc, double order, double tau1, double omega);

std::array<double, 5> quartic_coeffs(const PValues& p);

/// Real and imaginary equations at x = 4 omega tau4 (both vanish at a root).
std::array<double, 2> tau4_equations(const PValues& p, double x);

enum class Tau4Mode { fix_tau1, fix_tau2 };
const char* tau4_mode_name(Tau4Mode m);

struct Tau4Options {
  int grid_points = 2000;
  /// 0 selects twice the Cauchy-type bound of omega_upper_bound().
  double omega_max = 0.0;
  /// Drop crossings whose implied other delay is negative.
  bool require_nonnegative_delays = true;
  double residual_tol = 1e-6;
};

struct Tau4Candidate {
  double omega;
  double r;  // cos(4 omega tau4)
  int sin_sign;
  int k;
  double tau4;
  double tau1;
  double tau2;
  double residual_re;
  double residual_im;
  double char_residual;
};

struct NearMiss {
  double omega;
  std::string reason;
  double residual;
};

struct QuarticReport {
  std::array<double, 5> q{};
  QuarticSolution solution;
  /// min_j |r_j - cos(4 omega tau4)| over real roots.
  double match_distance = 0.0;
};

struct Tau4Report {
  Tau4Mode mode = Tau4Mode::fix_tau2;
  double fixed_value = 0.0;
  double order = 0.0;
  double omega_max = 0.0;
  Verdict verdict = Verdict::no_bifurcation;
  double omega_star = 0.0;
  double tau_star = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  std::vector<Tau4Candidate> candidates;  // by omega, then k
  std::optional<std::size_t> best;
  std::vector<NearMiss> near_misses;
  std::size_t grid_failures = 0;
  std::optional<QuarticReport> quartic;
  /// Re[d lambda / d tau4] with tau1 held fixed (closed form).
  std::optional<double> transversality;
  /// Re[d lambda / d tau4] along the scanned mode (equal to the above in fix_tau1 mode).
  std::optional<double> transversality_along_mode;
  std::string transversality_error;
};

/// (1 + max_p sum |coef|)^{1/theta}: every imaginary-axis root has omega below it.
double omega_upper_bound(const CharCoeffs& cc, double order);

Tau4Report find_critical(const CharCoeffs& cc, double order, Tau4Mode mode, double fixed_value,
                         const Tau4Options& opt = {});

struct Tau4Terms {
  double theta1, theta2, upsilon1, upsilon2;
};

/// Theta = -dG/dtau4, Upsilon = dG/dlambda at lambda = i omega with tau1 fixed,
/// written out in trigonometric form.
Tau4Terms tau4_terms(const CharCoeffs& cc, double order, double tau1, double omega, double tau4);

double transversality_tau4(const CharCoeffs& cc, double order, double tau1, double omega_star,
                           double tau_star);

/// Re[d lambda / d tau4] with tau2 fixed and tau1 = tau2 + 2 tau4.
double transversality_tau4_fixed_tau2(const CharCoeffs& cc, double order, double tau2,
                                      double omega, double tau4);

struct DelayCrossing {
  double omega;
  double delay;
  double residual;
};

/// Smallest communication delay tau2 at which a root reaches the imaginary
/// axis while tau1 stays fixed.
std::optional<DelayCrossing> critical_communication_delay(const CharCoeffs& cc, double order,
                                                          double tau1,
                                                          const Tau4Options& opt = {});

}  // namespace fracbam
