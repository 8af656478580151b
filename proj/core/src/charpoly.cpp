#include "fracbam/charpoly.hpp"

#include <cmath>
#include <utility>

namespace fracbam {

const char* coeff_name(Coeff c) {
  static const char* names[kCoeffCount] = {"c11", "c21", "c22", "c31", "c32", "c41",
                                           "c42", "c43", "c44", "c51", "c52", "c53",
                                           "c54", "c61", "c62", "c63", "c64", "c65"};
  return names[static_cast<std::size_t>(c)];
}

CharCoeffs compute_coeffs(const std::array<double, 6>& decay, const LinearGains& gains) {
  CharCoeffs out;
  for (const CoeffTerm& t : coefficient_terms()) {
    double v = 1.0;
    bool cross = false;
    for (auto i : t.k)
      if (i) v *= decay[i - 1];
    for (auto ij : t.phi)
      if (ij) {
        v *= gains.phi[ij / 10 - 1][ij % 10 - 1];
        cross = true;
      }
    for (auto ij : t.varphi)
      if (ij) {
        v *= gains.varphi[ij / 10 - 1][ij % 10 - 1];
        cross = true;
      }
    out[t.coeff] += v;
    if (t.coeff == Coeff::c61) (cross ? out.c61_cross : out.c61_decay) += v;
  }
  out.d = zero_delay_coefficients(out);
  out.D = hurwitz_minors(out.d).minors;
  return out;
}

std::array<double, 6> zero_delay_coefficients(const CharCoeffs& cc) {
  using C = Coeff;
  return {cc[C::c11],
          cc[C::c21] - cc[C::c22],
          cc[C::c31] - cc[C::c32],
          cc[C::c41] - cc[C::c42] + cc[C::c43] - cc[C::c44],
          cc[C::c51] - cc[C::c52] + cc[C::c53] - cc[C::c54],
          cc[C::c61] - cc[C::c62] + cc[C::c63] - cc[C::c64] - cc[C::c65]};
}

namespace {

double det_lu(std::array<std::array<double, 6>, 6> a, int n) {
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

}  // namespace

HurwitzResult hurwitz_minors(const std::array<double, 6>& d) {
  auto coef = [&](int k) -> double {
    if (k == 0) return 1.0;
    if (k < 0 || k > 6) return 0.0;
    return d[k - 1];
  };
  std::array<std::array<double, 6>, 6> h{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) h[i][j] = coef(2 * (j + 1) - (i + 1));
  HurwitzResult out;
  out.minors[0] = d[0];
  for (int n = 2; n <= 5; ++n) out.minors[n - 1] = det_lu(h, n);
  // The last column of H is (0,...,0,d6).
  out.minors[5] = d[5] * out.minors[4];
  out.stable = true;
  for (double m : out.minors) out.stable = out.stable && m > 0.0;
  return out;
}

HurwitzResult hurwitz_stable(const CharCoeffs& cc) { return hurwitz_minors(cc.d); }

std::array<CharMonomial, 16> char_monomials(const CharCoeffs& cc) {
  using C = Coeff;
  return {{
      {1.0, 6, 0, 0},
      {cc[C::c11], 5, 1, 0},
      {cc[C::c21], 4, 2, 0},
      {-cc[C::c22], 4, 0, 2},
      {cc[C::c31], 3, 3, 0},
      {-cc[C::c32], 3, 1, 2},
      {cc[C::c41], 2, 4, 0},
      {-cc[C::c42], 2, 2, 2},
      {cc[C::c43] - cc[C::c44], 2, 0, 4},
      {cc[C::c51], 1, 5, 0},
      {-cc[C::c52], 1, 3, 2},
      {cc[C::c53] - cc[C::c54], 1, 1, 4},
      {cc.c61_decay, 0, 6, 0},
      {-cc[C::c62], 0, 4, 2},
      {cc[C::c63] - cc[C::c64], 0, 2, 4},
      {cc.c61_cross - cc[C::c65], 0, 0, 6},
  }};
}

cplx principal_pow(cplx lambda, double p) {
  if (p == 0.0) return {1.0, 0.0};
  if (lambda == cplx(0.0, 0.0)) return {0.0, 0.0};
  return std::exp(p * std::log(lambda));
}

CharValue char_function(const CharCoeffs& cc, double order, cplx lambda, double tau1,
                        double tau2) {
  CharValue out{};
  auto add = [&](double coef, int power, int e1, int e2) {
    const double p = power * order;
    const double delay = e1 * tau1 + e2 * tau2;
    const cplx ex = std::exp(-lambda * delay);
    const cplx lp = principal_pow(lambda, p);
    const cplx term = coef * lp * ex;
    out.value += term;
    const cplx dl = (power == 0) ? cplx(0.0) : coef * p * principal_pow(lambda, p - 1.0) * ex;
    out.d_lambda += dl - delay * term;
    out.d_tau1 += -static_cast<double>(e1) * lambda * term;
    out.d_tau2 += -static_cast<double>(e2) * lambda * term;
  };
  for (const CharMonomial& m : char_monomials(cc)) add(m.coef, m.power, m.e1, m.e2);
  return out;
}

}  // namespace fracbam
