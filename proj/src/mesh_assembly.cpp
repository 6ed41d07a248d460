#include "ew/mesh_assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ew/errors.hpp"
#include "ew/kernels.hpp"

namespace ew {

Mesh build_mesh(double a, double b, std::size_t elements) {
  if (!(b > a)) {
    throw std::domain_error("build_mesh: need b > a");
  }
  if (elements < 2) {
    throw std::domain_error("build_mesh: need at least 2 elements");
  }
  Mesh m;
  m.a = a;
  m.b = b;
  m.elements = elements;
  m.h = (b - a) / static_cast<double>(elements);
  m.nodes.resize(elements + 1);
  for (std::size_t i = 0; i <= elements; ++i) {
    m.nodes[i] = a + static_cast<double>(i) * m.h;
  }
  m.nodes.back() = b;
  return m;
}

std::array<std::size_t, 4> global_dofs(const Mesh& mesh, std::size_t element) {
  if (element >= mesh.elements) {
    throw std::out_of_range("global_dofs: element " + std::to_string(element) + " out of range");
  }
  const std::size_t first = 2 * element;
  return {first, first + 1, first + 2, first + 3};
}

double CoefficientVector::max_abs() const {
  double m = 0.0;
  for (double v : a) {
    if (!std::isfinite(v)) {
      return v;
    }
    m = std::max(m, std::abs(v));
  }
  return m;
}

std::optional<std::size_t> reduced_index(const Mesh& mesh, std::size_t dof) {
  const std::size_t right_value = 2 * mesh.elements;
  if (dof == 0 || dof == right_value) {
    return std::nullopt;
  }
  if (dof > right_value + 1) {
    throw std::out_of_range("reduced_index: dof out of range");
  }
  return dof < right_value ? dof - 1 : dof - 2;
}

CoefficientVector expand(const Mesh& mesh, std::span<const double> unknowns, DirichletPair bc) {
  if (unknowns.size() != mesh.unknown_count()) {
    throw std::invalid_argument("expand: expected " + std::to_string(mesh.unknown_count()) + " unknowns");
  }
  CoefficientVector c{std::vector<double>(mesh.dof_count())};
  const std::size_t right_value = 2 * mesh.elements;
  c.a[0] = bc.left;
  std::copy(unknowns.begin(), unknowns.end() - 1, c.a.begin() + 1);
  c.a[right_value] = bc.right;
  c.a[right_value + 1] = unknowns.back();
  return c;
}

FrozenState::FrozenState(const Mesh& mesh, const BasisTables& tables, const CoefficientVector& coeffs)
    : n_(mesh.elements), data_(4 * mesh.elements) {
  if (coeffs.size() != mesh.dof_count()) {
    throw std::invalid_argument("FrozenState: coefficient count does not match mesh");
  }
  const double inv_h = 1.0 / tables.h();
  std::array<kernels::Weights4, 4> w{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) {
      w[i][j] = tables.H(j, i);
      w[2 + i][j] = tables.A(j, i) * inv_h;
    }
  }
  kernels::active().element_project(coeffs.a.data(), n_, w, data_.data());
}

bool FrozenState::finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

namespace {

void check_sizes(const Mesh& mesh, const BasisTables& tables) {
  if (std::abs(tables.h() - mesh.h) > 1e-12 * std::max(1.0, mesh.h)) {
    throw std::invalid_argument("basis tables built for a different element width");
  }
}

// Adds `coef` times DOF `dof` to row `row`, moving pinned DOFs to the rhs.
void scatter(const Mesh& mesh, LinearSystem& sys, std::size_t row, std::size_t dof, double coef, DirichletPair bc) {
  if (auto col = reduced_index(mesh, dof)) {
    sys.matrix.at(row, *col) += coef;
  } else {
    const double pinned = dof == 0 ? bc.left : bc.right;
    sys.rhs[row] -= coef * pinned;
  }
}

}  // namespace

LinearSystem assemble_step_system(const Mesh& mesh, const BasisTables& tables, const CoefficientVector& current,
                                  double dt, double mu, DirichletPair bc) {
  if (!(dt > 0.0) || !(mu > 0.0)) {
    throw std::domain_error("assemble_step_system: dt and mu must be positive");
  }
  if (current.size() != mesh.dof_count()) {
    throw std::invalid_argument("assemble_step_system: coefficient count does not match mesh");
  }
  check_sizes(mesh, tables);

  const FrozenState frozen(mesh, tables, current);
  if (!frozen.finite()) {
    throw NumericalError("assemble_step_system: frozen state is not finite");
  }

  const std::size_t n = mesh.unknown_count();
  LinearSystem sys{BandedMatrix(n, 3, 3), std::vector<double>(n, 0.0)};
  const double h = mesh.h;
  const double inv_dt = 1.0 / dt;
  const double disp = mu / (dt * h * h);

  for (std::size_t e = 0; e < mesh.elements; ++e) {
    const auto dofs = global_dofs(mesh, e);
    for (int i = 0; i < 2; ++i) {
      const std::size_t row = 2 * e + static_cast<std::size_t>(i);
      const double v = frozen.value(e, i);
      const double w = frozen.slope(e, i);
      double rhs = 0.0;
      for (int j = 0; j < 4; ++j) {
        const double hj = tables.H(j, i);
        const double aj = tables.A(j, i);
        const double bj = tables.B(j, i);
        const double lhs = hj * (inv_dt + 0.5 * w) + aj * v / (2.0 * h) - disp * bj;
        rhs += current.a[dofs[j]] * (hj * inv_dt - disp * bj);
        scatter(mesh, sys, row, dofs[j], lhs, bc);
      }
      sys.rhs[row] += rhs;
    }
  }
  return sys;
}

LinearSystem assemble_initial_system(const Mesh& mesh, const BasisTables& tables,
                                     const std::function<double(double)>& u0, DirichletPair bc) {
  check_sizes(mesh, tables);
  const std::size_t n = mesh.unknown_count();
  LinearSystem sys{BandedMatrix(n, 3, 3), std::vector<double>(n, 0.0)};
  for (std::size_t e = 0; e < mesh.elements; ++e) {
    const auto dofs = global_dofs(mesh, e);
    for (int i = 0; i < 2; ++i) {
      const std::size_t row = 2 * e + static_cast<std::size_t>(i);
      const double x = mesh.nodes[e] + tables.root(i) * mesh.h;
      const double target = u0(x);
      if (!std::isfinite(target)) {
        throw std::domain_error("assemble_initial_system: initial profile not finite at x=" + std::to_string(x));
      }
      sys.rhs[row] += target;
      for (int j = 0; j < 4; ++j) {
        scatter(mesh, sys, row, dofs[j], tables.H(j, i), bc);
      }
    }
  }
  return sys;
}

}  // namespace ew
