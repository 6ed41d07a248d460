#pragma once

#include <cstddef>
#include <functional>

#include "ew/hermite_basis.hpp"
#include "ew/mesh_assembly.hpp"

namespace ew {

/// Everything needed to advance the solution one time level.
struct RunState {
  Mesh mesh;
  BasisTables tables;
  CoefficientVector coeffs;
  std::size_t step_count = 0;
  double t = 0.0;
  double mu = 1.0;
  double dt = 0.1;
  DirichletPair bc;
};

struct PointValues {
  double u = 0.0;
  double ux = 0.0;
  double uxx = 0.0;
};

/// max |a| above which a step is declared a blow-up.
inline constexpr double kBlowUpLimit = 1e6;

/// Fits the initial coefficients to u0 at the collocation points; t = 0.
RunState initialize(const Mesh& mesh, const BasisTables& tables, const std::function<double(double)>& u0,
                    DirichletPair bc, double mu, double dt);

/// One linearized Crank-Nicolson step (single linear solve, no inner iteration).
/// Throws BlowUpError if the new coefficients are non-finite or exceed kBlowUpLimit.
RunState step(RunState state);

/// Advances `state` in place; same contract as step(). On failure the state is
/// left at the old time level.
void advance(RunState& state);

/// U, U_x, U_xx of the Hermite reconstruction. Throws std::domain_error outside [a,b].
PointValues evaluate(const RunState& state, double x);

}  // namespace ew
