#pragma once

// Aberth-Ehrlich simultaneous root iteration for dense polynomials.
// Coefficients are given highest degree first.

#include <complex>
#include <span>
#include <vector>

namespace fracbam {

using cplx = std::complex<double>;

cplx poly_eval(std::span<const cplx> coeffs, cplx z);
cplx poly_eval(std::span<const double> coeffs, cplx z);

struct RootOptions {
  int max_iterations = 800;
  /// Clusters closer than this (relative to 1+|z|) are tested for being a
  /// single multiple root.
  double cluster_radius = 1e-2;
};

/// All roots, with multiplicity. Throws NumericalError when the iteration
/// fails to converge. Leading zero coefficients are dropped.
std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs, const RootOptions& opt = {});
std::vector<cplx> polynomial_roots(std::span<const double> coeffs, const RootOptions& opt = {});

}  // namespace fracbam
