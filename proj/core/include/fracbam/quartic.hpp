#pragma once

// Closed-form quartic roots by Ferrari's method in complex arithmetic:
//   q1 r^4 + q2 r^3 + q3 r^2 + q4 r + q5 = 0.

#include <array>
#include <complex>
#include <vector>

namespace fracbam {

using cplx = std::complex<double>;

enum class QuarticPath { ferrari, ferrari_reselected, biquadratic, cubic, quadratic, linear, none };
const char* quartic_path_name(QuarticPath p);

struct QuarticSolution {
  /// Up to four roots (fewer only on the degree-fallback paths).
  std::vector<cplx> roots;
  QuarticPath path = QuarticPath::none;
  /// The intermediates, computed on q / max|q|.
  cplx alpha, beta, delta0, delta1, Q, S;
  /// 0 for the principal cube root, 1 or 2 for the rotated ones.
  int cube_root = 0;
  /// Largest |quartic(r)| / (1 + |r|^4) over the returned roots, normalized q.
  double max_residual = 0.0;
};

/// Coefficients are normalized by max|q_i| before anything else. A leading
/// coefficient below 1e-12 after normalization switches to the lower-degree
/// path. All-zero input returns no roots. Every root is Newton-polished when
/// that lowers its residual and must satisfy |quartic(r)| < 1e-8 (1 + |r|^4);
/// otherwise NumericalError is thrown.
QuarticSolution ferrari_roots(const std::array<double, 5>& q);

}  // namespace fracbam
