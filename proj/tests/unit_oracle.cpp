// Copyright 2026 The Sextic Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sextic/oracle.hpp"
#include "sextic/poly.hpp"
#include "sextic/rng.hpp"
#include "test_util.hpp"

using namespace sextic;
using sextic::testing::poly;

TEST_CASE("oracle_roots: fixed vectors") {
  RootMultiset exact;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int k = 0; k < 6; ++k)
    exact.push_back(Cplx(std::cos(two_pi * k / 6), std::sin(two_pi * k / 6)));
  const RootMultiset unity = oracle_roots(poly({-1, 0, 0, 0, 0, 0}));
  CHECK(match_roots(unity, exact).max_distance <= 1e-10);

  const RootMultiset ints{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}};
  const RootMultiset found = oracle_roots(polynomial_from_roots(ints));
  CHECK(match_roots(found, ints).max_distance <= 1e-8);

  // Sextuple root: accuracy is conditioning-limited, not a defect.
  const RootMultiset all_zero = oracle_roots(poly({0, 0, 0, 0, 0, 0}));
  for (const Cplx& z : all_zero) CHECK(std::abs(z) <= 1e-2);
}

TEST_CASE("oracle_roots: reconstruction of random simple-root sextics") {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Cplx> coeffs;
    for (int n = 0; n < 6; ++n) coeffs.push_back(rng.uniform_complex(-2, 2));
    const MonicPolynomial p{coeffs};
    const MonicPolynomial rebuilt = polynomial_from_roots(oracle_roots(p));
    CHECK(sextic::testing::coeff_distance(rebuilt, p) <=
          1e-8 * (1.0 + coeff_magnitude(p)));
  }
}

TEST_CASE("oracle_roots: deterministic") {
  const MonicPolynomial p = poly({{1, 2}, {-0.5, 0.25}, {3, 0}, {0, -1}, {2, 2}, {-1, 0}});
  const RootMultiset a = oracle_roots(p);
  const RootMultiset b = oracle_roots(p);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("oracle_roots: conjugate closure for real coefficients") {
  SplitMix64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Cplx> coeffs;
    for (int n = 0; n < 6; ++n) coeffs.push_back(Cplx(rng.uniform(-2, 2), 0));
    const RootMultiset roots = oracle_roots(MonicPolynomial{coeffs});
    RootMultiset conjugated;
    for (const Cplx& z : roots) conjugated.push_back(std::conj(z));
    CHECK(match_roots(roots, conjugated).max_distance <= 1e-8);
  }
}

TEST_CASE("oracle_roots: multiple-root cluster centroids stay put") {
  // (z-1)^2 (z-2)(z-3)(z-4)(z-5)
  {
    const RootMultiset roots =
        oracle_roots(polynomial_from_roots({{1, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}}));
    std::vector<Cplx> cluster;
    for (const Cplx& z : roots)
      if (std::abs(z - Cplx(1, 0)) < 0.5) cluster.push_back(z);
    REQUIRE(cluster.size() == 2);
    const Cplx centroid = (cluster[0] + cluster[1]) / 2.0;
    CHECK(std::abs(centroid - Cplx(1, 0)) <= 1e-8);
  }
  // (z-1)^3 (z-2)(z-3)(z-4)
  {
    const RootMultiset roots =
        oracle_roots(polynomial_from_roots({{1, 0}, {1, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}));
    std::vector<Cplx> cluster;
    for (const Cplx& z : roots)
      if (std::abs(z - Cplx(1, 0)) < 0.5) cluster.push_back(z);
    REQUIRE(cluster.size() == 3);
    const Cplx centroid = (cluster[0] + cluster[1] + cluster[2]) / 3.0;
    CHECK(std::abs(centroid - Cplx(1, 0)) <= 1e-8);
  }
}

TEST_CASE("oracle_roots: non-convergence carries the best iterate") {
  OracleConfig cfg;
  cfg.max_iterations = 1;
  CHECK_THROWS_AS(oracle_roots(poly({-1, 0, 0, 0, 0, 0}), cfg), ConvergenceError);
  try {
    oracle_roots(poly({-1, 0, 0, 0, 0, 0}), cfg);
  } catch (const ConvergenceError& e) {
    CHECK(e.best_roots.size() == 6);
    CHECK(e.residuals.size() == 6);
  }
}

TEST_CASE("oracle_roots: config validation") {
  OracleConfig bad;
  bad.max_iterations = 0;
  CHECK_THROWS_AS(oracle_roots(poly({-1, 0, 0, 0, 0, 0}), bad), std::invalid_argument);
  OracleConfig bad_tol;
  bad_tol.convergence_tol = 0.0;
  CHECK_THROWS_AS(oracle_roots(poly({-1, 0, 0, 0, 0, 0}), bad_tol), std::invalid_argument);
}

TEST_CASE("oracle_roots: degree 1 and degree 2") {
  const RootMultiset lin = oracle_roots(MonicPolynomial{{Cplx(-3.5, 2)}});
  REQUIRE(lin.size() == 1);
  CHECK(std::abs(lin[0] - Cplx(3.5, -2)) <= 1e-12);

  const RootMultiset quad = oracle_roots(poly({-1, 0}));
  REQUIRE(quad.size() == 2);
  CHECK(match_roots(quad, {{1, 0}, {-1, 0}}).max_distance <= 1e-12);
}
