#include "ew/stability.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace ew {

ModeCoefficients alpha_beta(const BasisTables& tables, int row, double value, double slope, double dt, double mu) {
  if (!(dt > 0.0) || !(mu > 0.0)) {
    throw std::domain_error("alpha_beta: dt and mu must be positive");
  }
  if (row < 0 || row > 1) {
    throw std::out_of_range("alpha_beta: row must be 0 or 1");
  }
  const double h = tables.h();
  const double disp = mu / (dt * h * h);
  ModeCoefficients c;
  for (int j = 0; j < 4; ++j) {
    const double hj = tables.H(j, row);
    c.beta[j] = hj / dt - disp * tables.B(j, row);
    c.alpha[j] = hj * (1.0 / dt + 0.5 * slope) + tables.A(j, row) * value / (2.0 * h) - disp * tables.B(j, row);
  }
  return c;
}

double amplification(const ModeCoefficients& coeffs, double phi) {
  const double c1 = std::cos(phi);
  const double s1 = std::sin(phi);
  const double c2 = std::cos(2.0 * phi);
  const double s2 = std::sin(2.0 * phi);
  double out = 0.0;
  if (kernels::table(kernels::Isa::Scalar).amplification(coeffs, &c1, &s1, &c2, &s2, 1, &out) != 1) {
    throw SingularModeError(phi);
  }
  return out;
}

StabilityScan scan(const BasisTables& tables, double value, double slope, double dt, double mu, std::size_t n) {
  if (n < 64) {
    throw std::invalid_argument("scan: grid needs at least 64 angles");
  }
  StabilityScan s;
  s.value = value;
  s.slope = slope;
  s.dt = dt;
  s.h = tables.h();
  s.mu = mu;
  s.angles.resize(n);
  std::vector<double> c1(n), s1(n), c2(n), s2(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    s.angles[k] = phi;
    c1[k] = std::cos(phi);
    s1[k] = std::sin(phi);
    c2[k] = std::cos(2.0 * phi);
    s2[k] = std::sin(2.0 * phi);
  }
  const auto& kern = kernels::active();
  for (int row = 0; row < 2; ++row) {
    const ModeCoefficients coeffs = alpha_beta(tables, row, value, slope, dt, mu);
    auto& out = s.modulus[row];
    out.resize(n);
    const std::size_t bad = kern.amplification(coeffs, c1.data(), s1.data(), c2.data(), s2.data(), n, out.data());
    if (bad != n) {
      throw SingularModeError(s.angles[bad]);
    }
    s.max_modulus = std::max(s.max_modulus, *std::max_element(out.begin(), out.end()));
  }
  return s;
}

double block_spectral_radius(const BasisTables& tables, double value, double slope, double dt, double mu,
                             std::size_t n) {
  if (n < 64) {
    throw std::invalid_argument("block_spectral_radius: grid needs at least 64 angles");
  }
  using cplx = std::complex<double>;
  const ModeCoefficients rows[2] = {alpha_beta(tables, 0, value, slope, dt, mu),
                                    alpha_beta(tables, 1, value, slope, dt, mu)};
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const cplx e = std::polar(1.0, theta);
    // Row i: (c0 + c2 e) V + (c1 + c3 e) S, for both the left and right operator.
    cplx l[2][2];
    cplx r[2][2];
    for (int i = 0; i < 2; ++i) {
      const auto& al = rows[i].alpha;
      const auto& be = rows[i].beta;
      l[i][0] = al[0] + al[2] * e;
      l[i][1] = al[1] + al[3] * e;
      r[i][0] = be[0] + be[2] * e;
      r[i][1] = be[1] + be[3] * e;
    }
    const cplx det = l[0][0] * l[1][1] - l[0][1] * l[1][0];
    if (std::abs(det) < 1e-300) {
      throw SingularModeError(theta);
    }
    // G = L^{-1} R
    const cplx g00 = (l[1][1] * r[0][0] - l[0][1] * r[1][0]) / det;
    const cplx g01 = (l[1][1] * r[0][1] - l[0][1] * r[1][1]) / det;
    const cplx g10 = (l[0][0] * r[1][0] - l[1][0] * r[0][0]) / det;
    const cplx g11 = (l[0][0] * r[1][1] - l[1][0] * r[0][1]) / det;
    const cplx half_tr = 0.5 * (g00 + g11);
    const cplx disc = std::sqrt(half_tr * half_tr - (g00 * g11 - g01 * g10));
    worst = std::max({worst, std::abs(half_tr + disc), std::abs(half_tr - disc)});
  }
  return worst;
}

}  // namespace ew
