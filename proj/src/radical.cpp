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

#include "sextic/radical.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace sextic {

QuadraticRoots solve_quadratic(Cplx b1, Cplx b0) {
  const Cplx s = std::sqrt(b1 * b1 - 4.0 * b0);  // principal branch
  Cplx y1 = (-b1 - s) / 2.0;
  Cplx y2 = (-b1 + s) / 2.0;
  // One of the two sums b1 +- s cancels; recompute that root from the
  // product y1*y2 = b0 instead.
  if (b0 != 0.0) {
    if (std::real(std::conj(b1) * s) >= 0.0) {
      y2 = b0 / y1;
    } else {
      y1 = b0 / y2;
    }
  }
  return {y1, y2};
}

namespace {

// Principal cube root: |w|^(1/3) at argument arg(w)/3 in (-pi/3, pi/3].
Cplx principal_cbrt(Cplx w) {
  if (w == 0.0) return 0.0;
  const double r = std::cbrt(std::abs(w));
  const double t = std::arg(w) / 3.0;
  return Cplx(r * std::cos(t), r * std::sin(t));
}

}  // namespace

CubicRoots solve_cubic(Cplx a2, Cplx a1, Cplx a0) {
  // Depress via z = t - a2/3: t^3 + p t + q = 0.
  const Cplx shift = a2 / 3.0;
  const Cplx p = a1 - a2 * a2 / 3.0;
  const Cplx q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;

  const Cplx disc = q * q / 4.0 + p * p * p / 27.0;
  const Cplx sd = std::sqrt(disc);
  // Pick the sqrt sign that maximizes |u^3| to dodge the cancellation
  // between -q/2 and sqrt(disc).
  const Cplx cand_plus = -q / 2.0 + sd;
  const Cplx cand_minus = -q / 2.0 - sd;
  const Cplx u3 = std::abs(cand_plus) >= std::abs(cand_minus) ? cand_plus : cand_minus;

  static const Cplx omega(-0.5, std::sqrt(3.0) / 2.0);
  std::array<Cplx, 3> t;
  const Cplx u = principal_cbrt(u3);
  if (u != 0.0) {
    // Cardano pairing u*v = -p/3 enforced by deriving v from u.
    const Cplx v = -p / (3.0 * u);
    t[0] = u + v;
    t[1] = omega * u + std::conj(omega) * v;
    t[2] = std::conj(omega) * u + omega * v;
  } else {
    // Only reachable with p = q = 0: the three cube roots of -q.
    const Cplx w = principal_cbrt(-q);
    t[0] = w;
    t[1] = omega * w;
    t[2] = std::conj(omega) * w;
  }

  std::array<Cplx, 3> z;
  for (int k = 0; k < 3; ++k) z[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k)] - shift;
  std::sort(z.begin(), z.end(), lex_less);
  return {z[0], z[1], z[2]};
}

Cplx polish_root(const MonicPolynomial& p, Cplx z0, int max_steps) {
  Cplx z = z0;
  for (int step = 0; step < max_steps; ++step) {
    const auto [val, der] = evaluate_with_derivative(p, z);
    if (val == 0.0) break;
    if (std::abs(der) < 1e-14 * residual_scale(p, z)) break;
    const Cplx next = z - val / der;
    if (next == z) break;
    z = next;
  }
  return z;
}

}  // namespace sextic
