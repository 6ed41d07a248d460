#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ew/diagnostics.hpp"
#include "ew/errors.hpp"
#include "ew/problems.hpp"
#include "ew/timestepper.hpp"

using namespace ew;

namespace {

RunState benchmark_fit() {
  const auto p = single_solitary_wave(0.1, 1.0, 10.0);
  const auto mesh = build_mesh(p.a, p.b, 1000);
  return initialize(mesh, build_tables(RootFamily::Legendre, mesh.h), p.u0, p.bc, 1.0, 0.05);
}

}  // namespace

TEST_CASE("zero state stays zero") {
  const auto mesh = build_mesh(0.0, 4.0, 16);
  auto s = initialize(mesh, build_tables(RootFamily::Legendre, mesh.h), [](double) { return 0.0; }, {}, 1.0, 0.1);
  CHECK(s.coeffs.max_abs() == 0.0);
  CHECK(s.t == 0.0);
  s = step(s);
  CHECK(s.coeffs.max_abs() == 0.0);
  CHECK(s.step_count == 1);
  CHECK(s.t == doctest::Approx(0.1));
}

TEST_CASE("time is step count times dt") {
  auto s = benchmark_fit();
  for (int k = 0; k < 7; ++k) {
    advance(s);
  }
  CHECK(s.step_count == 7);
  CHECK(s.t == 7 * 0.05);
}

TEST_CASE("initial fit of the solitary wave") {
  const auto s = benchmark_fit();
  const auto p = single_solitary_wave(0.1, 1.0, 10.0);
  // Reference t = 0 row: L2 * 1e3 = 0.000679
  const auto err = error_norms(s, *p.exact);
  CHECK(1e3 * err.l2 == doctest::Approx(0.000679).epsilon(0.01));
  CHECK(std::abs(evaluate(s, 10.0).u - 0.3) <= 1e-6);
  CHECK(evaluate(s, 30.0).u == s.bc.right);
  CHECK(evaluate(s, 0.0).u == s.bc.left);
}

TEST_CASE("Maxwellian fit is accurate at the nodes") {
  const auto p = maxwellian(0.1);
  const auto mesh = build_mesh(p.a, p.b, 1000);
  const auto s = initialize(mesh, build_tables(RootFamily::Legendre, mesh.h), p.u0, p.bc, p.mu, 0.025);
  double worst = 0.0;
  for (std::size_t i = 0; i <= mesh.elements; ++i) {
    worst = std::max(worst, std::abs(s.coeffs.a[2 * i] - p.u0(mesh.nodes[i])));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("evaluate reproduces a cubic at the nodes and is C1") {
  const auto mesh = build_mesh(-1.0, 2.0, 12);
  auto p = [](double x) { return 0.5 - x + 0.25 * x * x - 0.3 * x * x * x; };
  auto dp = [](double x) { return -1.0 + 0.5 * x - 0.9 * x * x; };
  CoefficientVector c;
  for (const double x : mesh.nodes) {
    c.a.push_back(p(x));
    c.a.push_back(dp(x));
  }
  const RunState s{mesh, build_tables(RootFamily::Legendre, mesh.h), c, 0, 0.0, 1.0, 0.1, {p(-1.0), p(2.0)}};
  for (const double x : mesh.nodes) {
    const auto v = evaluate(s, x);
    CHECK(std::abs(v.u - p(x)) <= 1e-12);
    CHECK(std::abs(v.ux - dp(x)) <= 1e-12);
    CHECK(std::abs(v.uxx - (0.5 - 1.8 * x)) <= 1e-9);
  }
  for (const double x : {-0.9, 0.123, 1.77}) {
    CHECK(std::abs(evaluate(s, x).u - p(x)) <= 1e-12);
  }
  CHECK_THROWS_AS(evaluate(s, -1.0 - 1e-9), std::domain_error);
  CHECK_THROWS_AS(evaluate(s, 2.0 + 1e-9), std::domain_error);
}

TEST_CASE("C1 continuity across elements for a generic state") {
  auto s = benchmark_fit();
  for (int k = 0; k < 20; ++k) {
    advance(s);
  }
  const double h = s.mesh.h;
  for (std::size_t i = 1; i < s.mesh.elements; i += 37) {
    // Left element evaluated at xi = 1, right element at xi = 0.
    const auto left = eval_local(1.0, h);
    const auto right = eval_local(0.0, h);
    double ul = 0, ur = 0, dl = 0, dr = 0;
    for (int j = 0; j < 4; ++j) {
      ul += s.coeffs.a[2 * (i - 1) + j] * left.H[j];
      dl += s.coeffs.a[2 * (i - 1) + j] * left.A[j] / h;
      ur += s.coeffs.a[2 * i + j] * right.H[j];
      dr += s.coeffs.a[2 * i + j] * right.A[j] / h;
    }
    CHECK(std::abs(ul - ur) <= 1e-12);
    CHECK(std::abs(dl - dr) <= 1e-12);
  }
}

TEST_CASE("I2 drift for the solitary wave stays below 1e-6") {
  auto s = benchmark_fit();
  const double i2 = invariants(s).i2;
  for (int k = 1; k <= 1600; ++k) {
    advance(s);
    if (k % 200 == 0) {
      CHECK(std::abs(invariants(s).i2 - i2) / i2 <= 1e-6);
    }
  }
}

TEST_CASE("blow-up is detected") {
  const auto mesh = build_mesh(0.0, 1.0, 8);
  CoefficientVector c{std::vector<double>(mesh.dof_count(), 0.0)};
  c.a[5] = 1e7;
  RunState s{mesh, build_tables(RootFamily::Legendre, mesh.h), c, 0, 0.0, 1.0, 1e-3, {}};
  CHECK_THROWS_AS(advance(s), BlowUpError);
  CHECK(s.step_count == 0);
  CHECK(s.coeffs.a[5] == 1e7);
}
