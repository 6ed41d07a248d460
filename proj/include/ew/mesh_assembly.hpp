#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ew/banded.hpp"
#include "ew/hermite_basis.hpp"

namespace ew {

/// Uniform partition of [a,b] into `elements` equal cells.
struct Mesh {
  double a = 0.0;
  double b = 1.0;
  std::size_t elements = 0;
  double h = 0.0;
  std::vector<double> nodes;  // elements + 1 positions

  [[nodiscard]] std::size_t dof_count() const { return 2 * elements + 2; }
  /// Unknowns left after the two Dirichlet value DOFs are eliminated.
  [[nodiscard]] std::size_t unknown_count() const { return 2 * elements; }
};

/// Throws std::domain_error unless b > a and elements >= 2.
Mesh build_mesh(double a, double b, std::size_t elements);

/// Global DOFs coupled by element e (all zero-based): 2e, 2e+1, 2e+2, 2e+3.
/// Even DOFs are nodal values, odd DOFs are nodal slopes dU/dx (the shape
/// functions H2, H4 carry the factor h, so no extra scaling is needed).
/// Throws std::out_of_range when e >= elements.
std::array<std::size_t, 4> global_dofs(const Mesh& mesh, std::size_t element);

struct DirichletPair {
  double left = 0.0;
  double right = 0.0;
  bool operator==(const DirichletPair&) const = default;
};

/// The 2N + 2 Hermite coefficients at one time level.
struct CoefficientVector {
  std::vector<double> a;

  [[nodiscard]] std::size_t size() const { return a.size(); }
  [[nodiscard]] double max_abs() const;
};

/// Position of a global DOF in the eliminated unknown vector
/// (a_1, a_2, ..., a_{2N-1}, a_{2N+1}); nullopt for the pinned DOFs 0 and 2N.
std::optional<std::size_t> reduced_index(const Mesh& mesh, std::size_t dof);

/// Rebuilds the full coefficient vector from the eliminated unknowns.
CoefficientVector expand(const Mesh& mesh, std::span<const double> unknowns, DirichletPair bc);

/// U and U_x of a coefficient state at every collocation point.
class FrozenState {
 public:
  FrozenState(const Mesh& mesh, const BasisTables& tables, const CoefficientVector& coeffs);

  [[nodiscard]] double value(std::size_t element, int root) const { return data_[root * n_ + element]; }
  [[nodiscard]] double slope(std::size_t element, int root) const { return data_[(2 + root) * n_ + element]; }
  [[nodiscard]] bool finite() const;

 private:
  std::size_t n_;
  std::vector<double> data_;  // [U@root0 | U@root1 | Ux@root0 | Ux@root1], each n_ long
};

struct LinearSystem {
  BandedMatrix matrix;
  std::vector<double> rhs;
};

/// Linearized Crank-Nicolson step matrix and right-hand side, rows ordered
/// element-major (row 2e + i is element e at collocation root i), with the
/// pinned boundary columns moved to the right-hand side.
///
/// Throws std::invalid_argument on size mismatches and NumericalError when the
/// frozen state is not finite.
LinearSystem assemble_step_system(const Mesh& mesh, const BasisTables& tables, const CoefficientVector& current,
                                  double dt, double mu, DirichletPair bc);

/// Collocation fit of an initial profile: U_N(x_e + xi_i h) = u0(...) at the
/// 2N collocation points, boundary value DOFs pinned to bc.
LinearSystem assemble_initial_system(const Mesh& mesh, const BasisTables& tables,
                                     const std::function<double(double)>& u0, DirichletPair bc);

}  // namespace ew
