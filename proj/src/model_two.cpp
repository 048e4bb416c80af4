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

#include "sextic/model_two.hpp"

#include <cmath>
#include <stdexcept>

#include "sextic/radical.hpp"

namespace sextic::model_two {

MonicPolynomial coefficients_from_params(const Params& p) {
  const Cplx b1sq = p.b1 * p.b1;
  std::vector<Cplx> c(6);
  c[5] = 3.0 * p.b1;
  c[4] = p.a2 + 3.0 * (p.b0 + b1sq);
  c[3] = (2.0 * p.a2 + 6.0 * p.b0 + b1sq) * p.b1;
  c[2] = p.a1 + p.a2 * (2.0 * p.b0 + b1sq) + 3.0 * p.b0 * (p.b0 + b1sq);
  c[1] = p.a1 * p.b1 + 2.0 * p.a2 * p.b0 * p.b1 + 3.0 * p.b0 * p.b0 * p.b1;
  c[0] = p.a0 + p.a1 * p.b0 + p.a2 * p.b0 * p.b0 + p.b0 * p.b0 * p.b0;
  return MonicPolynomial(std::move(c));
}

SexticRoots solve(const Params& p) {
  const MonicPolynomial sextic = coefficients_from_params(p);
  const CubicRoots ys = solve_cubic(p.a2, p.a1, p.a0);
  const Cplx y[3] = {ys.z1, ys.z2, ys.z3};

  // Q(z) = y_mu  <=>  z^2 + b1 z + (b0 - y_mu) = 0.
  QuadraticRoots zs[3];
  for (int mu = 1; mu <= 3; ++mu) zs[mu - 1] = solve_quadratic(p.b1, p.b0 - y[mu - 1]);

  SexticRoots out;
  out.resolvents = {{1, y[0]}, {2, y[1]}, {3, y[2]}};
  std::size_t slot = 0;
  for (int lambda = 1; lambda <= 2; ++lambda) {
    for (int mu = 1; mu <= 3; ++mu) {
      const Cplx z0 = lambda == 1 ? zs[mu - 1].y1 : zs[mu - 1].y2;
      out.roots[slot++] = {lambda, mu, polish_root(sextic, z0, 2)};
    }
  }
  return out;
}

namespace {

void require_sextic(const MonicPolynomial& c) {
  if (c.degree() != 6)
    throw std::invalid_argument("model_two: expected a monic sextic");
}

}  // namespace

ConstraintReport constraint_residuals(const MonicPolynomial& c, double tol) {
  require_sextic(c);
  const Cplx c1 = c.coeff(1), c2 = c.coeff(2), c3 = c.coeff(3);
  const Cplx c4 = c.coeff(4), c5 = c.coeff(5);

  ConstraintReport rep;
  rep.residual_1 = 27.0 * c3 - 18.0 * c4 * c5 + 5.0 * c5 * c5 * c5;
  rep.residual_2 = c1 - (27.0 * c2 - 3.0 * c4 * c5 * c5 + c5 * c5 * c5 * c5) * c5 / 81.0;
  rep.scale_1 = coefficient_scale(c, 3);
  rep.scale_2 = coefficient_scale(c, 5);
  rep.tol = tol;
  rep.satisfied = std::abs(rep.residual_1) <= tol * rep.scale_1 &&
                  std::abs(rep.residual_2) <= tol * rep.scale_2;
  return rep;
}

Params recover_params(const MonicPolynomial& c, Cplx free_b0, double tol,
                      A1Recovery a1_route) {
  const ConstraintReport rep = constraint_residuals(c, tol);
  if (!rep.satisfied)
    throw ConstraintError("model_two: coefficients violate the family constraints", rep);

  Params p;
  p.b1 = c.coeff(5) / 3.0;
  p.b0 = free_b0;
  const Cplx b1sq = p.b1 * p.b1;
  p.a2 = c.coeff(4) - c.coeff(5) * c.coeff(5) / 3.0 - 3.0 * free_b0;
  if (a1_route == A1Recovery::kDirectInversion) {
    p.a1 = c.coeff(2) - p.a2 * (2.0 * free_b0 + b1sq) - 3.0 * free_b0 * (free_b0 + b1sq);
  } else {
    const Cplx c5 = c.coeff(5);
    p.a1 = c.coeff(2) -
           2.0 * (3.0 * c.coeff(4) - 9.0 * free_b0 - c5 * c5) * (18.0 * free_b0 + c5 * c5) / 27.0 -
           free_b0 * (9.0 * free_b0 + c5 * c5) / 3.0;
  }
  p.a0 = c.coeff(0) - p.a1 * free_b0 - p.a2 * free_b0 * free_b0 -
         free_b0 * free_b0 * free_b0;
  return p;
}

}  // namespace sextic::model_two
