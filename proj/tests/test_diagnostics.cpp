#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ew/diagnostics.hpp"
#include "ew/problems.hpp"
#include "ew/timestepper.hpp"
#include "oracles.hpp"

using namespace ew;
using namespace ew::oracle;

namespace {

RunState random_state(std::size_t n, double a, double b, double mu, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto mesh = build_mesh(a, b, n);
  CoefficientVector c;
  c.a.resize(mesh.dof_count());
  for (auto& v : c.a) {
    v = u(rng);
  }
  return RunState{mesh, build_tables(RootFamily::Legendre, mesh.h), c, 0, 0.0, mu, 0.1, {c.a[0], c.a[2 * n]}};
}

}  // namespace

TEST_CASE("zero state has zero invariants and norms") {
  const auto mesh = build_mesh(0.0, 3.0, 10);
  const RunState s{mesh, build_tables(RootFamily::Legendre, mesh.h),
                   CoefficientVector{std::vector<double>(mesh.dof_count(), 0.0)}, 0, 0.0, 1.0, 0.1, {}};
  const auto inv = invariants(s);
  CHECK(inv.i1 == 0.0);
  CHECK(inv.i2 == 0.0);
  CHECK(inv.i3 == 0.0);
  const auto err = error_norms(s, [](double, double) { return 0.0; });
  CHECK(err.l2 == 0.0);
  CHECK(err.linf == 0.0);
}

TEST_CASE("Gauss quadrature against a 1e6-point trapezoid oracle") {
  for (const std::uint64_t seed : {1u, 2u, 3u}) {
    const auto s = random_state(12, -1.0, 2.0, 0.7, seed);
    const auto gl = invariants(s);
    const auto tr = trapezoid(s, 1'000'001);
    CHECK(std::abs(gl.i1 - tr.i1) <= 1e-8 * std::abs(tr.i1));
    CHECK(std::abs(gl.i2 - tr.i2) <= 1e-8 * std::abs(tr.i2));
    CHECK(std::abs(gl.i3 - tr.i3) <= 1e-8 * std::abs(tr.i3));
  }
}

TEST_CASE("quadrature is exact for a single cubic") {
  // U = x^3 on [0, 2] represented exactly; int U = 4, int U^3 = 2^10 / 10,
  // int U^2 + mu (3x^2)^2 = 2^7/7 + 9 mu 2^5/5.
  const auto mesh = build_mesh(0.0, 2.0, 4);
  CoefficientVector c;
  for (const double x : mesh.nodes) {
    c.a.push_back(x * x * x);
    c.a.push_back(3 * x * x);
  }
  const double mu = 0.3;
  const RunState s{mesh, build_tables(RootFamily::Legendre, mesh.h), c, 0, 0.0, mu, 0.1, {0.0, 8.0}};
  const auto inv = invariants(s);
  CHECK(std::abs(inv.i1 - 4.0) <= 1e-13 * 4.0);
  CHECK(std::abs(inv.i2 - (128.0 / 7.0 + 9.0 * mu * 32.0 / 5.0)) <= 1e-13 * 30.0);
  CHECK(std::abs(inv.i3 - 102.4) <= 1e-13 * 102.4);
}

TEST_CASE("solitary wave fit invariants") {
  const auto p = single_solitary_wave(0.1, 1.0, 10.0);
  const auto mesh = build_mesh(p.a, p.b, 1000);
  const auto s = initialize(mesh, build_tables(RootFamily::Legendre, mesh.h), p.u0, p.bc, 1.0, 0.05);
  const auto inv = invariants(s);
  CHECK(std::abs(inv.i1 - 1.2) <= 1e-4);
  CHECK(std::abs(inv.i2 - 0.288) <= 1e-4);
  CHECK(std::abs(inv.i3 - 0.0576) <= 1e-4);

  // The reference t = 0 row is the right-endpoint nodal sum.
  const auto nodal = nodal_sum_invariants(s);
  CHECK(nodal.i1 == doctest::Approx(1.1999445724).epsilon(1e-9));
}

TEST_CASE("Maxwellian fit I2") {
  const auto p = maxwellian(0.1);
  const auto mesh = build_mesh(p.a, p.b, 1000);
  const auto s = initialize(mesh, build_tables(RootFamily::Legendre, mesh.h), p.u0, p.bc, p.mu, 0.025);
  // sqrt(pi/2) (1 + mu); the reference mu = 0.1 column starts at 1.378646
  CHECK(std::abs(invariants(s).i2 - 1.378646) <= 1e-4);
}

TEST_CASE("error norms are homogeneous") {
  const auto s = random_state(30, 0.0, 3.0, 1.0, 11);
  const auto base = error_norms(s, [](double, double) { return 0.0; });
  CHECK(base.l2 > 0.0);
  CHECK(base.linf > 0.0);
  RunState scaled = s;
  for (auto& v : scaled.coeffs.a) {
    v *= -2.5;
  }
  const auto err = error_norms(scaled, [](double, double) { return 0.0; });
  CHECK(err.l2 == doctest::Approx(2.5 * base.l2).epsilon(1e-14));
  CHECK(err.linf == doctest::Approx(2.5 * base.linf).epsilon(1e-14));

  // Nodes 1..N only: the value at x = a does not count.
  RunState left = s;
  left.coeffs.a[0] += 100.0;
  CHECK(error_norms(left, [](double, double) { return 0.0; }).linf == base.linf);
}

TEST_CASE("relative changes") {
  std::vector<DiagnosticsRow> rows(3);
  for (int k = 0; k < 3; ++k) {
    rows[k].t = k;
    rows[k].inv = {2.0, 3.0, 4.0};
  }
  for (const auto& d : relative_changes(rows)) {
    CHECK(d.value.i1 == 0.0);
    CHECK(d.value.i2 == 0.0);
    CHECK(d.value.i3 == 0.0);
    CHECK_FALSE(d.i1_absolute);
  }

  std::vector<DiagnosticsRow> bench(2);
  bench[0].inv = {1.1999445724, 0.2880005667, 0.0575999985};
  bench[1].inv = {1.2000388017, 0.2880005667, 0.0576000018};
  const auto d = relative_changes(bench);
  CHECK(d[1].value.i1 == doctest::Approx(7.85e-5).epsilon(1e-3));

  // Zero start switches to the absolute change.
  std::vector<DiagnosticsRow> coll(2);
  coll[0].inv = {0.0, 82.9, 0.0};
  coll[1].inv = {1e-5, 83.0, -2e-4};
  const auto fwd = relative_changes(coll);
  CHECK(fwd[1].i1_absolute);
  CHECK(fwd[1].i3_absolute);
  CHECK_FALSE(fwd[1].i2_absolute);
  CHECK(fwd[1].value.i1 == 1e-5);
  CHECK(fwd[1].value.i3 == -2e-4);
  CHECK(fwd[1].value.i2 == doctest::Approx(0.1 / 82.9).epsilon(1e-12));

  CHECK(relative_changes({}).empty());
}

TEST_CASE("bore rates") {
  std::vector<DiagnosticsRow> two(2);
  two[0] = {0.0, {1.9965, 0.0, 0.0}, std::nullopt};
  two[1] = {100.0, {2.4965, 0.0, 0.0}, std::nullopt};
  CHECK(bore_rates(two).i1 == doctest::Approx(5e-3).epsilon(1e-12));

  std::vector<DiagnosticsRow> flat(5);
  for (int k = 0; k < 5; ++k) {
    flat[k] = {10.0 * k, {1.0, 2.0, 3.0}, std::nullopt};
  }
  const auto r = bore_rates(flat);
  CHECK(r.i1 == 0.0);
  CHECK(r.i2 == 0.0);
  CHECK(r.i3 == 0.0);

  CHECK_THROWS_AS(bore_rates(std::vector<DiagnosticsRow>(1)), std::invalid_argument);
  CHECK_THROWS_AS(bore_rates(std::vector<DiagnosticsRow>(3)), std::invalid_argument);
}

TEST_CASE("find_peak") {
  const auto p = single_solitary_wave(0.1, 1.0, 10.0);
  const auto mesh = build_mesh(p.a, p.b, 1000);
  const auto s = initialize(mesh, build_tables(RootFamily::Legendre, mesh.h), p.u0, p.bc, 1.0, 0.05);
  const auto peak = find_peak(s, p.a, p.b);
  CHECK(std::abs(peak.x - 10.0) <= mesh.h / 10.0);
  CHECK(std::abs(peak.u - 0.3) <= 1e-4);
  CHECK(peak.u >= evaluate(s, peak.x - mesh.h / 10.0).u);
  CHECK(peak.u >= evaluate(s, peak.x + mesh.h / 10.0).u);

  // Monotone on the window: the maximum is at its left edge.
  const auto edge = find_peak(s, 12.0, 20.0);
  CHECK(edge.x == 12.0);
  CHECK(edge.u == evaluate(s, 12.0).u);

  CHECK_THROWS_AS(find_peak(s, 5.0, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(find_peak(s, -1.0, 5.0), std::domain_error);
}
