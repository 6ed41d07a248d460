#include "ew/hermite_basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ew {

CollocationRoots collocation_roots(RootFamily family) {
  // Shifted roots of P2 (1/sqrt(3)) or T2 (1/sqrt(2)) mapped from [-1,1] to [0,1].
  const double half_width = family == RootFamily::Legendre ? 0.5 / std::sqrt(3.0) : 0.5 / std::sqrt(2.0);
  return {0.5 - half_width, 0.5 + half_width};
}

LocalBasisEval eval_local(double xi, double h) {
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw std::domain_error("eval_local: xi=" + std::to_string(xi) + " outside [0,1]");
  }
  if (!(h > 0.0)) {
    throw std::domain_error("eval_local: element width must be positive");
  }
  const double s = xi;
  const double s2 = s * s;
  const double m = 1.0 - s;

  LocalBasisEval e;
  e.xi = xi;
  e.H = {(1.0 + 2.0 * s) * m * m, s * m * m * h, s2 * (3.0 - 2.0 * s), s2 * (s - 1.0) * h};
  e.A = {6.0 * s2 - 6.0 * s, (1.0 - 4.0 * s + 3.0 * s2) * h, 6.0 * s - 6.0 * s2, (3.0 * s2 - 2.0 * s) * h};
  e.B = {12.0 * s - 6.0, (6.0 * s - 4.0) * h, 6.0 - 12.0 * s, (6.0 * s - 2.0) * h};
  return e;
}

BasisTables::BasisTables(RootFamily family, double h) : family_(family), h_(h) {
  const auto roots = collocation_roots(family);
  at_[0] = eval_local(roots.first, h);
  at_[1] = eval_local(roots.second, h);
}

}  // namespace ew
