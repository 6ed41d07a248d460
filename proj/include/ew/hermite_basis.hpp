#pragma once

#include <array>

namespace ew {

/// Which quadratic's shifted roots serve as the two interior collocation points.
enum class RootFamily { Legendre, Chebyshev };

struct CollocationRoots {
  double first;   // smaller root in (0,1)
  double second;  // larger root in (0,1)
};

CollocationRoots collocation_roots(RootFamily family);

/// Cubic Hermite shape functions on the unit element, with first and second
/// derivatives in the local coordinate xi = (x - x_k) / h.
///
/// H2 and H4 (and their derivatives) carry the factor h, so the matching
/// degrees of freedom are the nodal slopes dU/dx.
struct LocalBasisEval {
  std::array<double, 4> H{};
  std::array<double, 4> A{};  // dH/dxi
  std::array<double, 4> B{};  // d2H/dxi2
  double xi = 0.0;
};

/// Throws std::domain_error when xi is outside [0,1] or h <= 0.
LocalBasisEval eval_local(double xi, double h);

/// Shape-function values at the two collocation roots for a fixed element
/// width. Indexing is zero-based: H(j, i) is shape j in 0..3 at root i in 0..1.
class BasisTables {
 public:
  BasisTables(RootFamily family, double h);

  [[nodiscard]] double H(int j, int i) const { return at_[i].H[j]; }
  [[nodiscard]] double A(int j, int i) const { return at_[i].A[j]; }
  [[nodiscard]] double B(int j, int i) const { return at_[i].B[j]; }

  [[nodiscard]] const LocalBasisEval& at_root(int i) const { return at_[i]; }
  [[nodiscard]] double root(int i) const { return at_[i].xi; }
  [[nodiscard]] double h() const { return h_; }
  [[nodiscard]] RootFamily family() const { return family_; }

 private:
  RootFamily family_;
  double h_;
  std::array<LocalBasisEval, 2> at_;
};

inline BasisTables build_tables(RootFamily family, double h) { return BasisTables(family, h); }

}  // namespace ew
