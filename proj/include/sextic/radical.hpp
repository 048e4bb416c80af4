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

#ifndef SEXTIC_RADICAL_HPP_
#define SEXTIC_RADICAL_HPP_

#include "sextic/poly.hpp"

namespace sextic {

// Roots of y^2 + b1 y + b0 = 0.
// y_lambda = (-b1 + (-1)^lambda sqrt(b1^2 - 4 b0)) / 2: y1 takes the minus
// branch of the principal square root, y2 the plus branch.
struct QuadraticRoots {
  Cplx y1;
  Cplx y2;
};

QuadraticRoots solve_quadratic(Cplx b1, Cplx b0);

// Roots of z^3 + a2 z^2 + a1 z + a0 = 0, sorted by (re, im).  The cubic
// carries no intrinsic root order, so lexicographic order is imposed for
// reproducibility.
struct CubicRoots {
  Cplx z1;
  Cplx z2;
  Cplx z3;
};

CubicRoots solve_cubic(Cplx a2, Cplx a1, Cplx a0);

// At most max_steps Newton iterations z <- z - P(z)/P'(z).  Leaves z
// untouched once |P'(z)| < 1e-14 * residual_scale(p, z) (near-multiple
// root) or the step no longer moves the iterate.
Cplx polish_root(const MonicPolynomial& p, Cplx z0, int max_steps);

}  // namespace sextic

#endif  // SEXTIC_RADICAL_HPP_
