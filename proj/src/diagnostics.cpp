#include "ew/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ew/kernels.hpp"

namespace ew {
namespace {

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 5> kGaussNodes = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                               0.9061798459386640};
constexpr std::array<double, 5> kGaussWeights = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                                 0.4786286704993665, 0.2369268850561891};

}  // namespace

ErrorNorms error_norms(const RunState& state, const ExactSolution& exact) {
  const Mesh& mesh = state.mesh;
  const std::size_t n = mesh.elements;
  std::vector<double> approx(n);
  std::vector<double> reference(n);
  for (std::size_t i = 1; i <= n; ++i) {
    approx[i - 1] = state.coeffs.a[2 * i];
    reference[i - 1] = exact(mesh.nodes[i], state.t);
  }
  const auto sums = kernels::active().error_sums(approx.data(), reference.data(), n);
  return {std::sqrt(mesh.h * sums.sum_sq), sums.max_abs};
}

InvariantTriple invariants(const RunState& state) {
  const Mesh& mesh = state.mesh;
  const double h = mesh.h;
  std::array<kernels::Weights4, 5> value_w{};
  std::array<kernels::Weights4, 5> slope_w{};
  std::array<double, 5> gauss_w{};
  for (std::size_t g = 0; g < 5; ++g) {
    const LocalBasisEval basis = eval_local(0.5 * (kGaussNodes[g] + 1.0), h);
    for (int j = 0; j < 4; ++j) {
      value_w[g][j] = basis.H[j];
      slope_w[g][j] = basis.A[j] / h;
    }
    gauss_w[g] = 0.5 * h * kGaussWeights[g];
  }
  const auto sums = kernels::active().invariant_sums(state.coeffs.a.data(), mesh.elements, value_w, slope_w,
                                                     gauss_w, state.mu);
  return {sums.i1, sums.i2, sums.i3};
}

InvariantTriple nodal_sum_invariants(const RunState& state) {
  const Mesh& mesh = state.mesh;
  InvariantTriple out;
  for (std::size_t i = 1; i <= mesh.elements; ++i) {
    const double u = state.coeffs.a[2 * i];
    const double ux = state.coeffs.a[2 * i + 1];
    out.i1 += u;
    out.i2 += u * u + state.mu * ux * ux;
    out.i3 += u * u * u;
  }
  out.i1 *= mesh.h;
  out.i2 *= mesh.h;
  out.i3 *= mesh.h;
  return out;
}

std::vector<Drift> relative_changes(std::span<const DiagnosticsRow> rows) {
  std::vector<Drift> out;
  if (rows.empty()) {
    return out;
  }
  const InvariantTriple base = rows.front().inv;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Drift d;
    auto change = [](double now, double start, bool& absolute) {
      absolute = start == 0.0;
      return absolute ? now - start : (now - start) / start;
    };
    d.value.i1 = change(row.inv.i1, base.i1, d.i1_absolute);
    d.value.i2 = change(row.inv.i2, base.i2, d.i2_absolute);
    d.value.i3 = change(row.inv.i3, base.i3, d.i3_absolute);
    out.push_back(d);
  }
  return out;
}

InvariantTriple bore_rates(std::span<const DiagnosticsRow> rows) {
  if (rows.size() < 2) {
    throw std::invalid_argument("bore_rates: need at least two rows");
  }
  const double n = static_cast<double>(rows.size());
  double t_mean = 0.0;
  InvariantTriple mean;
  for (const auto& r : rows) {
    t_mean += r.t;
    mean.i1 += r.inv.i1;
    mean.i2 += r.inv.i2;
    mean.i3 += r.inv.i3;
  }
  t_mean /= n;
  mean.i1 /= n;
  mean.i2 /= n;
  mean.i3 /= n;

  double stt = 0.0;
  InvariantTriple st;
  for (const auto& r : rows) {
    const double dt = r.t - t_mean;
    stt += dt * dt;
    st.i1 += dt * (r.inv.i1 - mean.i1);
    st.i2 += dt * (r.inv.i2 - mean.i2);
    st.i3 += dt * (r.inv.i3 - mean.i3);
  }
  if (stt == 0.0) {
    throw std::invalid_argument("bore_rates: rows must span more than one time");
  }
  return {st.i1 / stt, st.i2 / stt, st.i3 / stt};
}

PeakRecord find_peak(const RunState& state, double lo, double hi) {
  if (!(hi > lo)) {
    throw std::invalid_argument("find_peak: empty window");
  }
  const Mesh& mesh = state.mesh;
  if (lo < mesh.a || hi > mesh.b) {
    throw std::domain_error("find_peak: window outside the domain");
  }
  const auto intervals = static_cast<std::size_t>(std::ceil((hi - lo) / (mesh.h / 10.0)));
  const double step = (hi - lo) / static_cast<double>(intervals);
  auto x_at = [&](std::size_t k) { return k == intervals ? hi : lo + static_cast<double>(k) * step; };

  std::size_t best = 0;
  double best_u = evaluate(state, lo).u;
  for (std::size_t k = 1; k <= intervals; ++k) {
    const double u = evaluate(state, x_at(k)).u;
    if (u > best_u) {
      best_u = u;
      best = k;
    }
  }

  PeakRecord peak{x_at(best), best_u};
  if (best == 0 || best == intervals) {
    return peak;
  }
  const double left = evaluate(state, x_at(best - 1)).u;
  const double right = evaluate(state, x_at(best + 1)).u;
  const double curvature = left - 2.0 * best_u + right;
  if (curvature < 0.0) {
    const double x = x_at(best) + 0.5 * step * (left - right) / curvature;
    const double u = evaluate(state, x).u;
    if (u >= best_u) {
      peak = {x, u};
    }
  }
  return peak;
}

}  // namespace ew
