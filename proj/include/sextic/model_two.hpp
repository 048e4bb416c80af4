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

#ifndef SEXTIC_MODEL_TWO_HPP_
#define SEXTIC_MODEL_TWO_HPP_

#include "sextic/model_common.hpp"
#include "sextic/poly.hpp"

// Model two: sextics of the form Q(z)^3 + a2 Q(z)^2 + a1 Q(z) + a0 with
// Q(z) = z^2 + b1 z + b0.  Solving factors through the cubic resolvent
// y^3 + a2 y^2 + a1 y + a0 = 0 followed by the three quadratics
// Q(z) = y_mu.  The parameters play roles analogous to model one's but
// the two families are distinct.

namespace sextic::model_two {

inline constexpr double kDefaultTol = 1e-9;

struct Params {
  Cplx a0;
  Cplx a1;
  Cplx a2;
  Cplx b0;
  Cplx b1;
};

// Which expression recovers a1 from the coefficients.  kDirectInversion
// inverts the forward map's c2 equation and round-trips; kPrintedFormula
// is the alternative closed form kept for comparison — it carries an
// extra -a2(2 b0 + b1^2) term and does not round-trip (see the acceptance
// suite, which documents the difference on a fixed vector).
enum class A1Recovery { kDirectInversion, kPrintedFormula };

// The six coefficients c0..c5 by direct substitution.  Agrees with
// compose(y^3 + a2 y^2 + a1 y + a0, z^2 + b1 z + b0).
MonicPolynomial coefficients_from_params(const Params& p);

// Six labeled roots by radicals: mu picks the (lexicographically ordered)
// cubic resolvent root, lambda the quadratic branch.  At most two Newton
// polish steps per root.
SexticRoots solve(const Params& p);

// Residuals of the two membership constraints.  residual_1 is the raw
// homogeneous combination 27 c3 - 18 c4 c5 + 5 c5^3 (classified against
// the cubic coefficient scale); residual_2 compares c1 against its closed
// form (quintic scale).  Throws std::invalid_argument unless degree is 6.
ConstraintReport constraint_residuals(const MonicPolynomial& c, double tol = kDefaultTol);

// Parameters from coefficients with b0 as the free fiber coordinate.
// Throws ConstraintError when the constraints fail at tol.
Params recover_params(const MonicPolynomial& c, Cplx free_b0, double tol = kDefaultTol,
                      A1Recovery a1_route = A1Recovery::kDirectInversion);

}  // namespace sextic::model_two

#endif  // SEXTIC_MODEL_TWO_HPP_
