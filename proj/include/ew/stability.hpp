#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ew/errors.hpp"
#include "ew/hermite_basis.hpp"
#include "ew/kernels.hpp"

namespace ew {

class SingularModeError : public NumericalError {
 public:
  explicit SingularModeError(double phi)
      : NumericalError("amplification denominator vanishes at phi=" + std::to_string(phi)), phi_(phi) {}
  [[nodiscard]] double phi() const { return phi_; }

 private:
  double phi_;
};

using ModeCoefficients = kernels::ModeCoefficients;

/// Von Neumann coefficients of one collocation row with the nonlinear term
/// frozen at U = value, U_x = slope:
///   alpha_j = H_j (1/dt + slope/2) + A_j value / (2h) - mu B_j / (dt h^2)
///   beta_j  = H_j / dt - mu B_j / (dt h^2)
/// The element width is taken from the tables.
ModeCoefficients alpha_beta(const BasisTables& tables, int row, double value, double slope, double dt, double mu);

/// |xi(phi)| for a Fourier mode a_j = xi^n e^{i j phi}; throws SingularModeError
/// when the denominator modulus is below 1e-300.
double amplification(const ModeCoefficients& coeffs, double phi);

struct StabilityScan {
  double value = 0.0;
  double slope = 0.0;
  double dt = 0.0;
  double h = 0.0;
  double mu = 0.0;
  std::vector<double> angles;                 // 2 pi k / n, k = 0 .. n-1
  std::array<std::vector<double>, 2> modulus;  // per collocation row
  double max_modulus = 0.0;
};

/// Tabulates |xi| for both collocation rows over an n-point angle grid.
/// Throws std::invalid_argument for n < 64.
StabilityScan scan(const BasisTables& tables, double value, double slope, double dt, double mu, std::size_t n);

/// Cross-check with a two-component Bloch mode: each node carries its own
/// (value, slope) pair times e^{i j theta}, which gives 2x2 symbols L(theta),
/// R(theta) per element. Returns the largest spectral radius of L^{-1} R over
/// an n-point theta grid. Throws SingularModeError if L(theta) is singular.
double block_spectral_radius(const BasisTables& tables, double value, double slope, double dt, double mu,
                             std::size_t n);

}  // namespace ew
