#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ew/hermite_basis.hpp"

namespace ew {

/// One simulation run. Problem-specific fields that a problem does not use
/// are carried along untouched.
struct RunConfig {
  std::string problem;
  double a = 0.0;
  double b = 1.0;
  std::size_t N = 2;
  double dt = 0.1;
  double T = 1.0;
  double mu = 1.0;
  RootFamily roots = RootFamily::Legendre;
  std::vector<double> c;
  std::vector<double> x0;
  double U0 = 0.0;
  double d = 1.0;
  double report_every = 1.0;
  /// Explicit report times; when non-empty this replaces report_every.
  std::vector<double> report_times;
  std::vector<double> snapshots;
  std::string out_diag;
  std::string out_snap;

  bool operator==(const RunConfig&) const = default;
};

}  // namespace ew
