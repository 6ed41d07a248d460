#include "ew/timestepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ew/banded.hpp"
#include "ew/errors.hpp"

namespace ew {

RunState initialize(const Mesh& mesh, const BasisTables& tables, const std::function<double(double)>& u0,
                    DirichletPair bc, double mu, double dt) {
  const LinearSystem sys = assemble_initial_system(mesh, tables, u0, bc);
  const auto unknowns = solve(factorize(sys.matrix), sys.rhs);
  return RunState{mesh, tables, expand(mesh, unknowns, bc), 0, 0.0, mu, dt, bc};
}

void advance(RunState& state) {
  const LinearSystem sys = assemble_step_system(state.mesh, state.tables, state.coeffs, state.dt, state.mu, state.bc);
  const auto unknowns = solve(factorize(sys.matrix), sys.rhs);
  CoefficientVector next = expand(state.mesh, unknowns, state.bc);

  const std::size_t count = state.step_count + 1;
  const double t = static_cast<double>(count) * state.dt;
  const double magnitude = next.max_abs();
  if (!std::isfinite(magnitude) || magnitude > kBlowUpLimit) {
    throw BlowUpError(t, magnitude);
  }
  state.coeffs = std::move(next);
  state.step_count = count;
  state.t = t;
}

RunState step(RunState state) {
  advance(state);
  return state;
}

PointValues evaluate(const RunState& state, double x) {
  const Mesh& mesh = state.mesh;
  if (!(x >= mesh.a && x <= mesh.b)) {
    throw std::domain_error("evaluate: x=" + std::to_string(x) + " outside the domain");
  }
  const double h = mesh.h;
  std::size_t e = static_cast<std::size_t>(std::floor((x - mesh.a) / h));
  e = std::min(e, mesh.elements - 1);
  const double xi = std::clamp((x - mesh.nodes[e]) / h, 0.0, 1.0);
  const LocalBasisEval basis = eval_local(xi, h);

  PointValues p;
  for (int j = 0; j < 4; ++j) {
    const double a = state.coeffs.a[2 * e + static_cast<std::size_t>(j)];
    p.u += a * basis.H[j];
    p.ux += a * basis.A[j];
    p.uxx += a * basis.B[j];
  }
  p.ux /= h;
  p.uxx /= h * h;
  return p;
}

}  // namespace ew
