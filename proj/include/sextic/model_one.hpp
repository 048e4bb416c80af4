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

#ifndef SEXTIC_MODEL_ONE_HPP_
#define SEXTIC_MODEL_ONE_HPP_

#include "sextic/model_common.hpp"
#include "sextic/poly.hpp"

// Model one: sextics of the form C(z)^2 + b1 C(z) + b0 with
// C(z) = z^3 + a2 z^2 + a1 z + a0.  Solving factors through the quadratic
// resolvent y^2 + b1 y + b0 = 0 followed by the two cubics C(z) = y_lambda,
// so the six roots come out in radicals.  Membership of a general sextic is
// decided by two constraints on (c1, c2) in terms of (c3, c4, c5).

namespace sextic::model_one {

inline constexpr double kDefaultTol = 1e-9;

// The five free parameters (a0, a1, a2, b0, b1); all complex, unconstrained.
struct Params {
  Cplx a0;
  Cplx a1;
  Cplx a2;
  Cplx b0;
  Cplx b1;
};

// The six coefficients c0..c5 of the family member, by direct substitution.
// Agrees with compose(y^2 + b1 y + b0, z^3 + a2 z^2 + a1 z + a0).
MonicPolynomial coefficients_from_params(const Params& p);

// The six labeled roots by radicals: lambda picks the quadratic branch,
// mu the (lexicographically ordered) cubic root.  Each root gets at most
// two Newton polish steps against the composed sextic.
SexticRoots solve(const Params& p);

// Residuals of the two membership constraints, each normalized by the
// cubic coefficient scale 1 + max|c_n|^3.  Throws std::invalid_argument
// unless degree is 6.
ConstraintReport constraint_residuals(const MonicPolynomial& c, double tol = kDefaultTol);

// Parameters from coefficients.  a2 and a1 are determined; s = 2 a0 + b1
// is computed as c3 - 2 a1 a2 and cross-checked against (c2 - a1^2)/a2 and
// c1/a1 where those denominators are usable; a0 is the caller's free fiber
// coordinate.  Throws ConstraintError when the constraints fail at tol,
// InconsistencyError when the cross-checks disagree beyond 10 * tol * scale.
Params recover_params(const MonicPolynomial& c, Cplx free_a0, double tol = kDefaultTol);

}  // namespace sextic::model_one

#endif  // SEXTIC_MODEL_ONE_HPP_
