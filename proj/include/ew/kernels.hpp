#pragma once

// Data-parallel inner loops of the solver. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant. The variant is chosen once at
// runtime from the CPU features; setting EW_SIMD=scalar in the environment
// forces the reference path.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace ew::kernels {

enum class Isa { Scalar, Avx2 };

using Weights4 = std::array<double, 4>;

struct InvariantSums {
  double i1 = 0.0;
  double i2 = 0.0;
  double i3 = 0.0;
};

struct ErrorSums {
  double sum_sq = 0.0;
  double max_abs = 0.0;
};

/// Stability-scan coefficients for one collocation row, in the order of the
/// DOF offsets (-1, 0, +1, +2) relative to the element's derivative DOF.
struct ModeCoefficients {
  Weights4 alpha{};
  Weights4 beta{};
};

struct KernelTable {
  Isa isa;

  /// out[s * elements + e] = sum_j weights[s][j] * coeffs[2e + j].
  /// coeffs holds 2 * elements + 2 values.
  void (*element_project)(const double* coeffs, std::size_t elements, std::span<const Weights4> weights,
                          double* out);

  /// Per-element Gauss quadrature of U, U^2 + mu U_x^2 and U^3. value_w and
  /// slope_w hold the shape weights at each Gauss point (slope_w already
  /// divided by h); gauss_w are the physical quadrature weights.
  InvariantSums (*invariant_sums)(const double* coeffs, std::size_t elements, std::span<const Weights4> value_w,
                                  std::span<const Weights4> slope_w, std::span<const double> gauss_w, double mu);

  ErrorSums (*error_sums)(const double* approx, const double* exact, std::size_t n);

  /// |sum beta e^{i m phi}| / |sum alpha e^{i m phi}| for each sampled angle.
  /// Returns the index of the first angle whose denominator modulus is below
  /// 1e-300, or n when every angle is regular.
  std::size_t (*amplification)(const ModeCoefficients& c, const double* cos1, const double* sin1,
                               const double* cos2, const double* sin2, std::size_t n, double* out);
};

[[nodiscard]] bool available(Isa isa);
/// Table for a specific instruction set; falls back to scalar when unavailable.
[[nodiscard]] const KernelTable& table(Isa isa);
/// The table picked for this process.
[[nodiscard]] const KernelTable& active();
[[nodiscard]] std::string_view name(Isa isa);

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
}  // namespace detail

}  // namespace ew::kernels
