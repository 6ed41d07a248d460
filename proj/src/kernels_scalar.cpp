#include <algorithm>
#include <cmath>

#include "ew/kernels.hpp"

namespace ew::kernels::detail {
namespace {

inline double combine(const Weights4& w, const double* a) {
  return w[0] * a[0] + w[1] * a[1] + w[2] * a[2] + w[3] * a[3];
}

void element_project(const double* coeffs, std::size_t elements, std::span<const Weights4> weights, double* out) {
  for (std::size_t s = 0; s < weights.size(); ++s) {
    const Weights4 w = weights[s];
    double* row = out + s * elements;
    for (std::size_t e = 0; e < elements; ++e) {
      row[e] = combine(w, coeffs + 2 * e);
    }
  }
}

InvariantSums invariant_sums(const double* coeffs, std::size_t elements, std::span<const Weights4> value_w,
                             std::span<const Weights4> slope_w, std::span<const double> gauss_w, double mu) {
  InvariantSums total;
  for (std::size_t e = 0; e < elements; ++e) {
    const double* a = coeffs + 2 * e;
    for (std::size_t g = 0; g < gauss_w.size(); ++g) {
      const double u = combine(value_w[g], a);
      const double ux = combine(slope_w[g], a);
      const double u2 = u * u;
      total.i1 += gauss_w[g] * u;
      total.i2 += gauss_w[g] * (u2 + mu * ux * ux);
      total.i3 += gauss_w[g] * (u2 * u);
    }
  }
  return total;
}

ErrorSums error_sums(const double* approx, const double* exact, std::size_t n) {
  ErrorSums out;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = exact[i] - approx[i];
    out.sum_sq += d * d;
    out.max_abs = std::max(out.max_abs, std::abs(d));
  }
  return out;
}

std::size_t amplification(const ModeCoefficients& c, const double* cos1, const double* sin1, const double* cos2,
                          const double* sin2, std::size_t n, double* out) {
  const auto& al = c.alpha;
  const auto& be = c.beta;
  for (std::size_t k = 0; k < n; ++k) {
    // offsets -1, 0, +1, +2
    const double num_re = be[0] * cos1[k] + be[1] + be[2] * cos1[k] + be[3] * cos2[k];
    const double num_im = -be[0] * sin1[k] + be[2] * sin1[k] + be[3] * sin2[k];
    const double den_re = al[0] * cos1[k] + al[1] + al[2] * cos1[k] + al[3] * cos2[k];
    const double den_im = -al[0] * sin1[k] + al[2] * sin1[k] + al[3] * sin2[k];
    const double den = std::sqrt(den_re * den_re + den_im * den_im);
    if (den < 1e-300) {
      return k;
    }
    out[k] = std::sqrt(num_re * num_re + num_im * num_im) / den;
  }
  return n;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{Isa::Scalar, element_project, invariant_sums, error_sums, amplification};
  return t;
}

}  // namespace ew::kernels::detail
