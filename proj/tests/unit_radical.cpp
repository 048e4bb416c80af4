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

#include "doctest.h"
#include "sextic/poly.hpp"
#include "sextic/radical.hpp"
#include "sextic/rng.hpp"
#include "test_util.hpp"

using namespace sextic;
using sextic::testing::close;
using sextic::testing::poly;

TEST_CASE("solve_quadratic: branch labels follow the principal square root") {
  // y^2 - 1: principal sqrt(4) = 2, so lambda=1 takes -1.
  const QuadraticRoots a = solve_quadratic(Cplx(0, 0), Cplx(-1, 0));
  CHECK(a.y1 == Cplx(-1, 0));
  CHECK(a.y2 == Cplx(1, 0));

  // (y-1)^2: double root.
  const QuadraticRoots b = solve_quadratic(Cplx(-2, 0), Cplx(1, 0));
  CHECK(b.y1 == Cplx(1, 0));
  CHECK(b.y2 == Cplx(1, 0));

  // y^2 + 1: principal sqrt(-4) = 2i, so lambda=1 takes -i.
  const QuadraticRoots c = solve_quadratic(Cplx(0, 0), Cplx(1, 0));
  CHECK(close(c.y1, Cplx(0, -1), 1e-15));
  CHECK(close(c.y2, Cplx(0, 1), 1e-15));
}

TEST_CASE("solve_quadratic: Vieta residuals on random inputs") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const Cplx b1 = rng.uniform_complex(-2, 2);
    const Cplx b0 = rng.uniform_complex(-2, 2);
    const QuadraticRoots r = solve_quadratic(b1, b0);
    const double tol = 1e-12 * (1.0 + std::abs(b1) + std::abs(b0));
    CHECK(std::abs(r.y1 + r.y2 + b1) <= tol);
    CHECK(std::abs(r.y1 * r.y2 - b0) <= tol);
  }
}

TEST_CASE("solve_cubic: fixed vectors") {
  // z^3 - 1: the cube roots of unity.
  const CubicRoots unity = solve_cubic(Cplx(0, 0), Cplx(0, 0), Cplx(-1, 0));
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  const RootMultiset expected{Cplx(-0.5, -half_sqrt3), Cplx(-0.5, half_sqrt3), Cplx(1, 0)};
  const MatchReport rep = match_roots({unity.z1, unity.z2, unity.z3}, expected);
  CHECK(rep.max_distance <= 1e-12);

  // (z-1)(z-2)(z-3) = z^3 - 6z^2 + 11z - 6.
  const CubicRoots ints = solve_cubic(Cplx(-6, 0), Cplx(11, 0), Cplx(-6, 0));
  CHECK(close(ints.z1, Cplx(1, 0), 1e-10));
  CHECK(close(ints.z2, Cplx(2, 0), 1e-10));
  CHECK(close(ints.z3, Cplx(3, 0), 1e-10));

  // Triple root at 0.
  const CubicRoots zero = solve_cubic(Cplx(0, 0), Cplx(0, 0), Cplx(0, 0));
  CHECK(zero.z1 == Cplx(0, 0));
  CHECK(zero.z2 == Cplx(0, 0));
  CHECK(zero.z3 == Cplx(0, 0));
}

TEST_CASE("solve_cubic: residuals, ordering, determinism, conjugate symmetry") {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const Cplx a2 = rng.uniform_complex(-2, 2);
    const Cplx a1 = rng.uniform_complex(-2, 2);
    const Cplx a0 = rng.uniform_complex(-2, 2);
    const CubicRoots r = solve_cubic(a2, a1, a0);
    const MonicPolynomial p = poly({a0, a1, a2});
    for (const Cplx& z : {r.z1, r.z2, r.z3})
      CHECK(std::abs(evaluate(p, z)) <= 1e-9 * residual_scale(p, z));

    // Lexicographic output order.
    CHECK(!lex_less(r.z2, r.z1));
    CHECK(!lex_less(r.z3, r.z2));

    // Bit-identical on repeated calls.
    const CubicRoots again = solve_cubic(a2, a1, a0);
    CHECK(r.z1 == again.z1);
    CHECK(r.z2 == again.z2);
    CHECK(r.z3 == again.z3);
  }

  for (int trial = 0; trial < 200; ++trial) {
    const Cplx a2(rng.uniform(-2, 2), 0), a1(rng.uniform(-2, 2), 0), a0(rng.uniform(-2, 2), 0);
    const CubicRoots r = solve_cubic(a2, a1, a0);
    const RootMultiset roots{r.z1, r.z2, r.z3};
    RootMultiset conjugated;
    for (const Cplx& z : roots) conjugated.push_back(std::conj(z));
    CHECK(match_roots(roots, conjugated).max_distance <= 1e-10);
  }
}

TEST_CASE("polish_root: Newton refinement with a multiple-root guard") {
  const MonicPolynomial quad = poly({-1, 0});  // z^2 - 1
  const Cplx refined = polish_root(quad, Cplx(1.001, 0), 2);
  CHECK(std::abs(refined - Cplx(1, 0)) <= 1e-9);

  const MonicPolynomial cubic = poly({-1, 0, 0});  // z^3 - 1
  CHECK(polish_root(cubic, Cplx(1, 0), 2) == Cplx(1, 0));

  const MonicPolynomial z6 = poly({0, 0, 0, 0, 0, 0});
  const Cplx stepped = polish_root(z6, Cplx(0.1, 0), 1);
  CHECK(std::abs(stepped) < 0.1);
}
