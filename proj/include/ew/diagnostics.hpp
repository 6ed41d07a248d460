#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ew/problems.hpp"
#include "ew/timestepper.hpp"

namespace ew {

struct ErrorNorms {
  double l2 = 0.0;
  double linf = 0.0;
};

/// Discrete norms over the nodes x_1 .. x_N:
/// L2 = sqrt(h sum |U - U_N|^2), Linf = max |U - U_N|.
ErrorNorms error_norms(const RunState& state, const ExactSolution& exact);

/// I1 = int U, I2 = int U^2 + mu U_x^2, I3 = int U^3 over [a,b], by 5-point
/// Gauss-Legendre per element on the Hermite reconstruction (exact for the
/// piecewise-cubic U).
InvariantTriple invariants(const RunState& state);

/// The same integrals as a right-endpoint nodal sum h * sum_{i=1..N} f(x_i).
/// Kept for comparison with reference tables computed that way; carries an
/// O(h) boundary bias whenever U(a) != 0.
InvariantTriple nodal_sum_invariants(const RunState& state);

struct DiagnosticsRow {
  double t = 0.0;
  InvariantTriple inv;
  std::optional<ErrorNorms> err;
};

/// Change of each invariant relative to the first row. When the initial value
/// is exactly zero the absolute change is reported instead and flagged.
struct Drift {
  InvariantTriple value;
  bool i1_absolute = false;
  bool i2_absolute = false;
  bool i3_absolute = false;
};

std::vector<Drift> relative_changes(std::span<const DiagnosticsRow> rows);

/// Least-squares slopes of I1, I2, I3 against t. Throws std::invalid_argument
/// with fewer than two rows (or when all rows share one time).
InvariantTriple bore_rates(std::span<const DiagnosticsRow> rows);

struct PeakRecord {
  double x = 0.0;
  double u = 0.0;
};

/// Maximum of U on [lo, hi]: samples at h/10 spacing, then a parabola through
/// the best sample and its neighbours. Throws std::invalid_argument on an
/// empty window and std::domain_error if it leaves the mesh.
PeakRecord find_peak(const RunState& state, double lo, double hi);

}  // namespace ew
