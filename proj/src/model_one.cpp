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

#include "sextic/model_one.hpp"

#include <cmath>
#include <stdexcept>

#include "sextic/radical.hpp"

namespace sextic::model_one {

MonicPolynomial coefficients_from_params(const Params& p) {
  const Cplx s = 2.0 * p.a0 + p.b1;
  std::vector<Cplx> c(6);
  c[5] = 2.0 * p.a2;
  c[4] = 2.0 * p.a1 + p.a2 * p.a2;
  c[3] = 2.0 * p.a0 + 2.0 * p.a1 * p.a2 + p.b1;
  c[2] = p.a1 * p.a1 + s * p.a2;
  c[1] = s * p.a1;
  c[0] = p.a0 * p.a0 + p.a0 * p.b1 + p.b0;
  return MonicPolynomial(std::move(c));
}

SexticRoots solve(const Params& p) {
  const MonicPolynomial sextic = coefficients_from_params(p);
  const QuadraticRoots ys = solve_quadratic(p.b1, p.b0);

  SexticRoots out;
  out.resolvents = {{1, ys.y1}, {2, ys.y2}};
  std::size_t slot = 0;
  for (int lambda = 1; lambda <= 2; ++lambda) {
    const Cplx y = lambda == 1 ? ys.y1 : ys.y2;
    // C(z) = y  <=>  z^3 + a2 z^2 + a1 z + (a0 - y) = 0.
    const CubicRoots zs = solve_cubic(p.a2, p.a1, p.a0 - y);
    const Cplx roots[3] = {zs.z1, zs.z2, zs.z3};
    for (int mu = 1; mu <= 3; ++mu) {
      Cplx z = polish_root(sextic, roots[mu - 1], 2);
      out.roots[slot++] = {lambda, mu, z};
    }
  }
  return out;
}

namespace {

void require_sextic(const MonicPolynomial& c) {
  if (c.degree() != 6)
    throw std::invalid_argument("model_one: expected a monic sextic");
}

}  // namespace

ConstraintReport constraint_residuals(const MonicPolynomial& c, double tol) {
  require_sextic(c);
  const Cplx c1 = c.coeff(1), c2 = c.coeff(2), c3 = c.coeff(3);
  const Cplx c4 = c.coeff(4), c5 = c.coeff(5);

  const Cplx e = 4.0 * c4 - c5 * c5;  // = 8 a1 on the family
  const Cplx rhs1 = e * (c3 - e * c5 / 8.0) / 8.0;
  const Cplx rhs2 = c3 * c5 / 2.0 + e * (4.0 * c4 - 5.0 * c5 * c5) / 64.0;

  ConstraintReport rep;
  rep.residual_1 = c1 - rhs1;
  rep.residual_2 = c2 - rhs2;
  rep.scale_1 = coefficient_scale(c, 3);
  rep.scale_2 = rep.scale_1;
  rep.tol = tol;
  rep.satisfied = std::abs(rep.residual_1) <= tol * rep.scale_1 &&
                  std::abs(rep.residual_2) <= tol * rep.scale_2;
  return rep;
}

Params recover_params(const MonicPolynomial& c, Cplx free_a0, double tol) {
  const ConstraintReport rep = constraint_residuals(c, tol);
  if (!rep.satisfied)
    throw ConstraintError("model_one: coefficients violate the family constraints", rep);

  const Cplx a2 = c.coeff(5) / 2.0;
  const Cplx a1 = (4.0 * c.coeff(4) - c.coeff(5) * c.coeff(5)) / 8.0;
  const Cplx s = c.coeff(3) - 2.0 * a1 * a2;  // s = 2 a0 + b1

  // The two redundant expressions for s hold on the family; disagreement
  // past 10x tolerance means the input is corrupted or tol is too tight.
  const double scale = rep.scale_1;
  if (std::abs(a2) > tol * scale) {
    const Cplx alt = (c.coeff(2) - a1 * a1) / a2;
    if (std::abs(s - alt) > 10.0 * tol * scale)
      throw InconsistencyError("model_one: (c2 - a1^2)/a2 disagrees with c3 - 2 a1 a2");
  }
  if (std::abs(a1) > tol * scale) {
    const Cplx alt = c.coeff(1) / a1;
    if (std::abs(s - alt) > 10.0 * tol * scale)
      throw InconsistencyError("model_one: c1/a1 disagrees with c3 - 2 a1 a2");
  }

  Params p;
  p.a0 = free_a0;
  p.a1 = a1;
  p.a2 = a2;
  p.b1 = s - 2.0 * free_a0;
  p.b0 = c.coeff(0) - (free_a0 + p.b1) * free_a0;
  return p;
}

}  // namespace sextic::model_one
