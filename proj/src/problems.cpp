#include "ew/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ew/errors.hpp"

namespace ew {
namespace {

double sech2(double z) {
  const double s = 1.0 / std::cosh(z);
  return s * s;
}

}  // namespace

ProblemSpec single_solitary_wave(double c, double mu, double x0, double a, double b) {
  if (c == 0.0) {
    throw std::domain_error("single_solitary_wave: c must be nonzero");
  }
  if (!(mu > 0.0)) {
    throw std::domain_error("single_solitary_wave: mu must be positive");
  }
  const double k = 1.0 / std::sqrt(4.0 * mu);
  ProblemSpec p;
  p.name = "single";
  p.a = a;
  p.b = b;
  p.mu = mu;
  p.exact = [=](double x, double t) { return 3.0 * c * sech2(k * (x - x0 - c * t)); };
  p.u0 = [exact = *p.exact](double x) { return exact(x, 0.0); };
  p.analytic_invariants =
      InvariantTriple{6.0 * c / k, 12.0 * c * c / k + 48.0 / 5.0 * k * c * c * mu, 144.0 / 5.0 * c * c * c / k};
  return p;
}

ProblemSpec multi_wave(const std::vector<double>& c, const std::vector<double>& x, double mu, double a, double b) {
  if (c.empty() || c.size() != x.size()) {
    throw std::invalid_argument("multi_wave: need equally long, non-empty amplitude and position lists");
  }
  // The initial profile hard-codes the width 0.5, i.e. the mu = 1 soliton width.
  constexpr double k = 0.5;
  ProblemSpec p;
  p.name = "multi_wave";
  p.a = a;
  p.b = b;
  p.mu = mu;
  p.u0 = [c, x](double pos) {
    double u = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      u += 3.0 * c[j] * sech2(k * (pos - x[j] - c[j]));
    }
    return u;
  };
  InvariantTriple inv;
  for (double cj : c) {
    inv.i1 += 6.0 * cj / k;
    inv.i2 += 12.0 * cj * cj / k + 48.0 / 5.0 * k * cj * cj * mu;
    inv.i3 += 144.0 / 5.0 * cj * cj * cj / k;
  }
  p.analytic_invariants = inv;
  return p;
}

ProblemSpec maxwellian(double mu, double a, double b) {
  if (!(mu > 0.0)) {
    throw std::domain_error("maxwellian: mu must be positive");
  }
  ProblemSpec p;
  p.name = "maxwellian";
  p.a = a;
  p.b = b;
  p.mu = mu;
  p.u0 = [](double x) { return std::exp(-(x - 20.0) * (x - 20.0)); };
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  // int (e^{-2s^2} + mu (2s e^{-s^2})^2) ds = sqrt(pi/2) (1 + mu)
  p.analytic_invariants =
      InvariantTriple{sqrt_pi, std::sqrt(std::numbers::pi / 2.0) * (1.0 + mu), std::sqrt(std::numbers::pi / 3.0)};
  return p;
}

ProblemSpec undular_bore(double u0, double d, double x0, double mu, double a, double b) {
  if (!(u0 > 0.0) || !(d > 0.0)) {
    throw std::domain_error("undular_bore: U0 and d must be positive");
  }
  ProblemSpec p;
  p.name = "bore";
  p.a = a;
  p.b = b;
  p.mu = mu;
  p.bc = {u0, 0.0};
  p.u0 = [=](double x) { return 0.5 * u0 * (1.0 - std::tanh((x - x0) / d)); };
  p.growth_rates = InvariantTriple{0.5 * u0 * u0, 2.0 / 3.0 * u0 * u0 * u0, 0.75 * u0 * u0 * u0 * u0};
  return p;
}

RunConfig default_run(const std::string& problem) {
  RunConfig r;
  r.problem = problem;
  if (problem == "single") {
    r.a = 0.0;
    r.b = 30.0;
    r.N = 1000;
    r.dt = 0.05;
    r.T = 80.0;
    r.c = {0.1};
    r.x0 = {10.0};
    r.report_every = 10.0;
    r.snapshots = {0.0, 20.0, 40.0, 60.0, 80.0};
  } else if (problem == "two_waves") {
    r.a = 0.0;
    r.b = 80.0;
    r.N = 800;
    r.dt = 0.01;
    r.T = 30.0;
    r.c = {1.5, 0.75};
    r.x0 = {10.0, 25.0};
    r.report_every = 5.0;
    r.report_times = {0.0, 1.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0};
    r.snapshots = {0.0, 10.0, 20.0, 30.0};
  } else if (problem == "three_waves") {
    r.a = 0.0;
    r.b = 100.0;
    r.N = 1000;
    r.dt = 0.1;
    r.T = 15.0;
    r.c = {4.5, 1.5, 0.5};
    r.x0 = {10.0, 25.0, 35.0};
    r.report_every = 3.0;
    r.snapshots = {0.0, 5.0, 10.0, 15.0};
  } else if (problem == "maxwellian") {
    r.a = 0.0;
    r.b = 50.0;
    r.N = 1000;
    r.dt = 0.025;
    r.T = 12.0;
    r.mu = 0.1;
    r.report_every = 3.0;
    r.snapshots = {0.0, 12.0};
  } else if (problem == "bore") {
    r.a = -20.0;
    r.b = 50.0;
    r.N = 1000;
    r.dt = 0.05;
    r.T = 800.0;
    r.mu = 0.16666667;
    r.U0 = 0.1;
    r.d = 2.0;
    r.x0 = {0.0};
    r.report_every = 100.0;
    r.snapshots = {0.0, 200.0, 400.0, 800.0};
  } else if (problem == "collision") {
    r.a = -40.0;
    r.b = 40.0;
    // h = 0.025: the 3c = 3.6 waves need it to hold I2 within 0.2%.
    r.N = 3200;
    r.dt = 0.1;
    r.T = 100.0;
    r.c = {-1.2, 1.2};
    r.x0 = {-20.0, 20.0};
    r.report_every = 5.0;
    r.snapshots = {0.0, 15.0, 50.0, 100.0};
  } else {
    throw ConfigError(0, "unknown problem '" + problem + "'");
  }
  return r;
}

ProblemSpec make_problem(const RunConfig& config) {
  const std::string& name = config.problem;
  ProblemSpec p;
  if (name == "single") {
    if (config.c.size() != 1 || config.x0.size() != 1) {
      throw ConfigError(0, "single: c and x0 take exactly one value");
    }
    p = single_solitary_wave(config.c[0], config.mu, config.x0[0], config.a, config.b);
  } else if (name == "two_waves" || name == "three_waves" || name == "collision") {
    p = multi_wave(config.c, config.x0, config.mu, config.a, config.b);
  } else if (name == "maxwellian") {
    p = maxwellian(config.mu, config.a, config.b);
  } else if (name == "bore") {
    if (config.x0.size() != 1) {
      throw ConfigError(0, "bore: x0 takes exactly one value");
    }
    p = undular_bore(config.U0, config.d, config.x0[0], config.mu, config.a, config.b);
  } else {
    throw ConfigError(0, "unknown problem '" + name + "'");
  }
  p.name = name;
  return p;
}

}  // namespace ew
