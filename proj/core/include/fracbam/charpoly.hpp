#pragma once

// Characteristic-equation coefficients of the linearized 3+3 network.
//
//   lambda^{6 theta} + c11 e1 lambda^{5 theta}
//     + (c21 e1^2 - c22 e2^2) lambda^{4 theta} + ... + (c61 - c62 - ...) = 0
//
// with e1 = e^{-lambda tau1}, e2 = e^{-lambda tau2}. The zero-delay polynomial
// s^6 + d1 s^5 + ... + d6 collects each power of s.

#include <array>
#include <complex>
#include <cstdint>

#include "fracbam/bam_model.hpp"

namespace fracbam {

using cplx = std::complex<double>;

enum class Coeff : std::uint8_t {
  c11, c21, c22, c31, c32, c41, c42, c43, c44,
  c51, c52, c53, c54, c61, c62, c63, c64, c65
};
inline constexpr std::size_t kCoeffCount = 18;

const char* coeff_name(Coeff c);

/// One literal product term. k holds decay indices 1..6, phi and varphi hold
/// gain indices as two-digit numbers (23 means row 2, column 3). Zero = unused.
struct CoeffTerm {
  Coeff coeff;
  std::array<std::uint8_t, 6> k;
  std::array<std::uint8_t, 3> phi;
  std::array<std::uint8_t, 3> varphi;
};

const std::array<CoeffTerm, 387>& coefficient_terms();

struct HurwitzResult {
  std::array<double, 6> minors{};
  bool stable = false;
};

struct CharCoeffs {
  std::array<double, kCoeffCount> c{};
  /// c61 splits into the pure-decay product k1...k6, which multiplies
  /// e1^6, and the phi^3 varphi^3 products, which multiply e2^6.
  double c61_decay = 0.0;
  double c61_cross = 0.0;
  std::array<double, 6> d{};
  std::array<double, 6> D{};

  double operator[](Coeff k) const { return c[static_cast<std::size_t>(k)]; }
  double& operator[](Coeff k) { return c[static_cast<std::size_t>(k)]; }
};

CharCoeffs compute_coeffs(const std::array<double, 6>& decay, const LinearGains& gains);

/// d1..d6 from the c's.
std::array<double, 6> zero_delay_coefficients(const CharCoeffs& cc);

/// Leading principal minors of the Hurwitz matrix H_ij = d_{2j-i} (d_0 = 1).
HurwitzResult hurwitz_minors(const std::array<double, 6>& d);
HurwitzResult hurwitz_stable(const CharCoeffs& cc);

/// coef * lambda^{power theta} * e1^{e1} * e2^{e2}.
struct CharMonomial {
  double coef;
  int power;
  int e1;
  int e2;
};

/// The 16 monomials of the general two-delay characteristic function, grouped
/// by (power, e1, e2). c61 enters split as above.
std::array<CharMonomial, 16> char_monomials(const CharCoeffs& cc);

struct CharValue {
  cplx value;
  cplx d_lambda;
  cplx d_tau1;
  cplx d_tau2;
};

/// Principal branch of lambda^p.
cplx principal_pow(cplx lambda, double p);

/// Characteristic function and its partial derivatives at (lambda; tau1, tau2).
CharValue char_function(const CharCoeffs& cc, double order, cplx lambda, double tau1,
                        double tau2);

}  // namespace fracbam
