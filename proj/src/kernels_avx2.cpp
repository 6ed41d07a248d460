// Built with -mavx2 only (no FMA) so per-lane arithmetic rounds exactly like
// the scalar reference; only reductions may differ in summation order.

#include "ew/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace ew::kernels::detail {
namespace {

constexpr std::size_t kLanes = 4;

// Gathers coeffs[2e + j], j = 0..3, for the four elements e0 .. e0+3.
struct ElementQuad {
  __m256d a0, a1, a2, a3;
};

inline ElementQuad load_quad(const double* base) {
  const __m256d lo = _mm256_loadu_pd(base);
  const __m256d hi = _mm256_loadu_pd(base + 4);
  const __m256d lo2 = _mm256_loadu_pd(base + 2);
  const __m256d hi2 = _mm256_loadu_pd(base + 6);
  constexpr int order = _MM_SHUFFLE(3, 1, 2, 0);
  return {_mm256_permute4x64_pd(_mm256_unpacklo_pd(lo, hi), order),
          _mm256_permute4x64_pd(_mm256_unpackhi_pd(lo, hi), order),
          _mm256_permute4x64_pd(_mm256_unpacklo_pd(lo2, hi2), order),
          _mm256_permute4x64_pd(_mm256_unpackhi_pd(lo2, hi2), order)};
}

inline __m256d combine(const Weights4& w, const ElementQuad& q) {
  __m256d acc = _mm256_mul_pd(_mm256_set1_pd(w[0]), q.a0);
  acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(w[1]), q.a1));
  acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(w[2]), q.a2));
  return _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(w[3]), q.a3));
}

inline double combine(const Weights4& w, const double* a) {
  return w[0] * a[0] + w[1] * a[1] + w[2] * a[2] + w[3] * a[3];
}

inline double hsum(__m256d v) {
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

void element_project(const double* coeffs, std::size_t elements, std::span<const Weights4> weights, double* out) {
  const std::size_t whole = elements - elements % kLanes;
  for (std::size_t e = 0; e < whole; e += kLanes) {
    const ElementQuad q = load_quad(coeffs + 2 * e);
    for (std::size_t s = 0; s < weights.size(); ++s) {
      _mm256_storeu_pd(out + s * elements + e, combine(weights[s], q));
    }
  }
  for (std::size_t s = 0; s < weights.size(); ++s) {
    for (std::size_t e = whole; e < elements; ++e) {
      out[s * elements + e] = combine(weights[s], coeffs + 2 * e);
    }
  }
}

InvariantSums invariant_sums(const double* coeffs, std::size_t elements, std::span<const Weights4> value_w,
                             std::span<const Weights4> slope_w, std::span<const double> gauss_w, double mu) {
  const std::size_t whole = elements - elements % kLanes;
  const __m256d vmu = _mm256_set1_pd(mu);
  __m256d s1 = _mm256_setzero_pd();
  __m256d s2 = _mm256_setzero_pd();
  __m256d s3 = _mm256_setzero_pd();
  for (std::size_t e = 0; e < whole; e += kLanes) {
    const ElementQuad q = load_quad(coeffs + 2 * e);
    for (std::size_t g = 0; g < gauss_w.size(); ++g) {
      const __m256d gw = _mm256_set1_pd(gauss_w[g]);
      const __m256d u = combine(value_w[g], q);
      const __m256d ux = combine(slope_w[g], q);
      const __m256d u2 = _mm256_mul_pd(u, u);
      s1 = _mm256_add_pd(s1, _mm256_mul_pd(gw, u));
      s2 = _mm256_add_pd(s2, _mm256_mul_pd(gw, _mm256_add_pd(u2, _mm256_mul_pd(vmu, _mm256_mul_pd(ux, ux)))));
      s3 = _mm256_add_pd(s3, _mm256_mul_pd(gw, _mm256_mul_pd(u2, u)));
    }
  }
  InvariantSums total{hsum(s1), hsum(s2), hsum(s3)};
  for (std::size_t e = whole; e < elements; ++e) {
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
  const std::size_t whole = n - n % kLanes;
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d sq = _mm256_setzero_pd();
  __m256d mx = _mm256_setzero_pd();
  for (std::size_t i = 0; i < whole; i += kLanes) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(exact + i), _mm256_loadu_pd(approx + i));
    sq = _mm256_add_pd(sq, _mm256_mul_pd(d, d));
    mx = _mm256_max_pd(mx, _mm256_andnot_pd(sign_mask, d));
  }
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, mx);
  ErrorSums out{hsum(sq), std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]))};
  for (std::size_t i = whole; i < n; ++i) {
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
  const __m256d b0 = _mm256_set1_pd(be[0]), b1 = _mm256_set1_pd(be[1]);
  const __m256d b2 = _mm256_set1_pd(be[2]), b3 = _mm256_set1_pd(be[3]);
  const __m256d nb0 = _mm256_set1_pd(-be[0]), na0 = _mm256_set1_pd(-al[0]);
  const __m256d a0 = _mm256_set1_pd(al[0]), a1 = _mm256_set1_pd(al[1]);
  const __m256d a2 = _mm256_set1_pd(al[2]), a3 = _mm256_set1_pd(al[3]);
  const __m256d tiny = _mm256_set1_pd(1e-300);

  const std::size_t whole = n - n % kLanes;
  std::size_t k = 0;
  for (; k < whole; k += kLanes) {
    const __m256d c1 = _mm256_loadu_pd(cos1 + k);
    const __m256d s1 = _mm256_loadu_pd(sin1 + k);
    const __m256d c2 = _mm256_loadu_pd(cos2 + k);
    const __m256d s2 = _mm256_loadu_pd(sin2 + k);

    __m256d num_re = _mm256_add_pd(_mm256_mul_pd(b0, c1), b1);
    num_re = _mm256_add_pd(num_re, _mm256_mul_pd(b2, c1));
    num_re = _mm256_add_pd(num_re, _mm256_mul_pd(b3, c2));
    __m256d num_im = _mm256_add_pd(_mm256_mul_pd(nb0, s1), _mm256_mul_pd(b2, s1));
    num_im = _mm256_add_pd(num_im, _mm256_mul_pd(b3, s2));

    __m256d den_re = _mm256_add_pd(_mm256_mul_pd(a0, c1), a1);
    den_re = _mm256_add_pd(den_re, _mm256_mul_pd(a2, c1));
    den_re = _mm256_add_pd(den_re, _mm256_mul_pd(a3, c2));
    __m256d den_im = _mm256_add_pd(_mm256_mul_pd(na0, s1), _mm256_mul_pd(a2, s1));
    den_im = _mm256_add_pd(den_im, _mm256_mul_pd(a3, s2));

    const __m256d den =
        _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(den_re, den_re), _mm256_mul_pd(den_im, den_im)));
    if (_mm256_movemask_pd(_mm256_cmp_pd(den, tiny, _CMP_LT_OQ)) != 0) {
      break;  // let the scalar tail locate the exact singular angle
    }
    const __m256d num =
        _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(num_re, num_re), _mm256_mul_pd(num_im, num_im)));
    _mm256_storeu_pd(out + k, _mm256_div_pd(num, den));
  }
  const std::size_t tail = scalar_table().amplification(c, cos1 + k, sin1 + k, cos2 + k, sin2 + k, n - k, out + k);
  return k + tail;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable t{Isa::Avx2, element_project, invariant_sums, error_sums, amplification};
  return &t;
}

}  // namespace ew::kernels::detail

#else

namespace ew::kernels::detail {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace ew::kernels::detail

#endif
