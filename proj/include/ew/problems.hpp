#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ew/mesh_assembly.hpp"
#include "ew/run_config.hpp"

namespace ew {

struct InvariantTriple {
  double i1 = 0.0;
  double i2 = 0.0;
  double i3 = 0.0;
};

using Profile = std::function<double(double)>;
using ExactSolution = std::function<double(double, double)>;

/// A benchmark scenario: initial profile, boundary values and whatever closed
/// forms are known for it.
struct ProblemSpec {
  std::string name;
  double a = 0.0;
  double b = 1.0;
  double mu = 1.0;
  DirichletPair bc;
  Profile u0;
  std::optional<ExactSolution> exact;
  std::optional<InvariantTriple> analytic_invariants;
  /// Linear growth rates dI/dt, for the undular bore.
  std::optional<InvariantTriple> growth_rates;
};

/// 3c sech^2(k (x - x0 - c t)) with k = 1/sqrt(4 mu). Throws std::domain_error
/// when c == 0 or mu <= 0.
ProblemSpec single_solitary_wave(double c, double mu, double x0, double a = 0.0, double b = 30.0);

/// Superposition of 3 c_j sech^2(0.5 (x - x_j - c_j)). Throws
/// std::invalid_argument on empty or mismatched lists.
ProblemSpec multi_wave(const std::vector<double>& c, const std::vector<double>& x, double mu, double a, double b);

/// exp(-(x - 20)^2).
ProblemSpec maxwellian(double mu, double a = 0.0, double b = 50.0);

/// 0.5 U0 (1 - tanh((x - x0) / d)) with U(a) = U0, U(b) = 0.
ProblemSpec undular_bore(double u0, double d, double x0, double mu, double a = -20.0, double b = 50.0);

/// The benchmark parameters for a named problem. Throws ConfigError for
/// unknown names. Known names: single, two_waves, three_waves, maxwellian,
/// bore, collision.
RunConfig default_run(const std::string& problem);

/// Builds the scenario a configuration describes.
ProblemSpec make_problem(const RunConfig& config);

}  // namespace ew
