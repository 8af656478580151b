#include "fracbam/mittag_leffler.hpp"

#include <cmath>
#include <cstdio>

#include "fracbam/errors.hpp"

namespace fracbam {

double mittag_leffler(double alpha, double z) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw NumericalError("Mittag-Leffler order must lie in (0,2)");
  if (!std::isfinite(z)) throw NumericalError("Mittag-Leffler argument must be finite");
  if (z == 0.0) return 1.0;

  constexpr int kMaxTerms = 2000;
  const double log_abs_z = std::log(std::abs(z));
  const bool negative = z < 0.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  double prev = 1.0;
  for (int j = 1; j < kMaxTerms; ++j) {
    const double mag = std::exp(j * log_abs_z - std::lgamma(alpha * j + 1.0));
    const double term = (negative && (j & 1)) ? -mag : mag;
    sum += term;
    abs_sum += mag;
    // Past the peak of |z|^j / Gamma(alpha j + 1) the magnitudes only shrink.
    const bool shrinking = mag < prev;
    prev = mag;
    if (shrinking && mag <= 1e-16 * std::abs(sum)) {
      if (abs_sum > 1e8 * std::abs(sum)) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "Mittag-Leffler series cancellation too severe (alpha=%g, z=%g)", alpha, z);
        throw NumericalError(buf);
      }
      return sum;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "Mittag-Leffler series did not converge (alpha=%g, z=%g)", alpha, z);
  throw NumericalError(buf);
}

}  // namespace fracbam
