#pragma once

namespace fracbam {

/// E_alpha(z) = sum_j z^j / Gamma(alpha j + 1) by direct series.
///
/// Summation stops once a term drops below 1e-16 relative to the partial sum.
/// Valid for 0 < alpha < 2. For negative z the series alternates and loses
/// roughly log10(E_alpha(|z|) / |E_alpha(z)|) digits; evaluation throws
/// NumericalError when that amplification exceeds 1e8 (about |z| <= 15 for
/// alpha = 1, |z| <= 8 for alpha = 0.8), or when 2000 terms do not suffice.
double mittag_leffler(double alpha, double z);

}  // namespace fracbam
