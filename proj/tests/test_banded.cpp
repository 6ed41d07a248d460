#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ew/banded.hpp"
#include "ew/errors.hpp"
#include "oracles.hpp"

using namespace ew;
using namespace ew::oracle;

TEST_CASE("band storage") {
  BandedMatrix m(6);
  CHECK(m.size() == 6);
  CHECK(m.lower() == 3);
  CHECK(m.upper() == 3);
  m.at(0, 3) = 2.0;
  m.at(5, 2) = -1.0;
  CHECK(m.get(0, 3) == 2.0);
  CHECK(m.get(5, 2) == -1.0);
  CHECK(m.get(0, 4) == 0.0);
  CHECK(m.get(5, 1) == 0.0);
  CHECK_THROWS_AS(m.at(0, 4), std::out_of_range);
  CHECK_THROWS_AS(m.at(6, 6), std::out_of_range);
  CHECK(m.max_abs() == 2.0);
  CHECK(m.norm_inf() == 2.0);

  const auto dense = m.to_dense();
  CHECK(dense.size() == 36);
  CHECK(dense[0 * 6 + 3] == 2.0);
  CHECK(dense[5 * 6 + 2] == -1.0);

  const std::vector<double> x{1, 2, 3, 4, 5, 6};
  const auto y = m.multiply(x);
  CHECK(y[0] == 8.0);
  CHECK(y[5] == -3.0);
  CHECK(y[2] == 0.0);
}

TEST_CASE("identity solves to unit vectors") {
  const std::size_t n = 9;
  BandedMatrix id(n);
  for (std::size_t i = 0; i < n; ++i) {
    id.at(i, i) = 1.0;
  }
  const auto f = factorize(id);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    CHECK(solve(f, e) == e);
  }
}

TEST_CASE("zero and rank-deficient matrices are singular") {
  CHECK_THROWS_AS(factorize(BandedMatrix(5)), SingularMatrixError);

  BandedMatrix m(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      m.at(r, c) = 1.0;  // rank one
    }
  }
  CHECK_THROWS_AS(factorize(m), SingularMatrixError);
  try {
    (void)factorize(m);
  } catch (const SingularMatrixError& e) {
    CHECK(e.column() == 1);
  }
}

TEST_CASE("length mismatch") {
  BandedMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    m.at(i, i) = 2.0;
  }
  const auto f = factorize(m);
  CHECK_THROWS_AS(solve(f, std::vector<double>(4, 1.0)), std::invalid_argument);
  CHECK(solve(f, std::vector<double>(3, 0.0)) == std::vector<double>(3, 0.0));
}

TEST_CASE("diagonally dominant n=12 matches dense oracle") {
  std::mt19937_64 rng(12);
  const auto m = random_band(12, rng, 8.0);
  std::vector<double> rhs(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& v : rhs) {
    v = u(rng);
  }
  const auto x = solve(factorize(m), rhs);
  const auto ref = dense_solve(m.to_dense(), rhs);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(std::abs(x[i] - ref[i]) <= 1e-11 * max_abs(ref));
  }
}

TEST_CASE("oracle equivalence and residual bound for n <= 50, pivoting required") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n = 1; n <= 50; ++n) {
    // No diagonal boost: row exchanges happen routinely.
    const auto m = random_band(n, rng, 0.0);
    std::vector<double> y(n);
    for (auto& v : y) {
      v = u(rng);
    }
    const auto rhs = m.multiply(y);
    BandedFactorization f;
    try {
      f = factorize(m);
    } catch (const SingularMatrixError&) {
      continue;  // a random draw can be numerically singular
    }
    const auto x = solve(f, rhs);
    const auto ref = dense_solve(m.to_dense(), rhs);

    const auto mx = m.multiply(x);
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      resid = std::max(resid, std::abs(mx[i] - rhs[i]));
    }
    CHECK(resid <= 1e-10 * (m.norm_inf() * max_abs(x) + max_abs(rhs)));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(x[i] - ref[i]) <= 1e-10 * std::max(1.0, max_abs(ref)));
    }
  }
}

TEST_CASE("multiply then solve round trip") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto m = random_band(200, rng, 4.0);
  std::vector<double> y(200);
  for (auto& v : y) {
    v = u(rng);
  }
  const auto x = solve(factorize(m), m.multiply(y));
  for (std::size_t i = 0; i < y.size(); ++i) {
    CHECK(std::abs(x[i] - y[i]) <= 1e-10);
  }
}

TEST_CASE("deterministic output") {
  std::mt19937_64 rng(5);
  const auto m = random_band(40, rng, 1.0);
  std::vector<double> rhs(40, 1.0);
  const auto a = solve(factorize(m), rhs);
  const auto b = solve(factorize(m), rhs);
  CHECK(a == b);
}
