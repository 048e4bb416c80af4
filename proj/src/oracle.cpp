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

#include "sextic/oracle.hpp"

#include <cmath>
#include <limits>

#include "sextic/radical.hpp"

namespace sextic {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// ---- error-free transformations ----
//
// The iteration stops a root when its residual is provably below the
// evaluation noise, so the quality of the evaluation bounds the quality of
// the returned roots.  Plain Horner noise near a k-fold root limits member
// placement to ~(eps)^(1/k); compensated Horner (Graillat-Langlois-Louvet)
// pushes the floor to ~eps^2, which keeps clusters tight without any
// cluster detection.

struct ErrSplit {
  double value;
  double err;
};

ErrSplit two_sum(double a, double b) {
  const double x = a + b;
  const double bv = x - a;
  return {x, (a - (x - bv)) + (b - bv)};
}

ErrSplit two_prod(double a, double b) {
  const double x = a * b;
  return {x, std::fma(a, b, -x)};
}

struct CplxSplit {
  Cplx value;
  Cplx err;
};

// a*b = value + err up to a second-order rounding in err itself.
CplxSplit two_prod(Cplx a, Cplx b) {
  const ErrSplit p1 = two_prod(a.real(), b.real());
  const ErrSplit p2 = two_prod(a.imag(), b.imag());
  const ErrSplit p3 = two_prod(a.real(), b.imag());
  const ErrSplit p4 = two_prod(a.imag(), b.real());
  const ErrSplit sre = two_sum(p1.value, -p2.value);
  const ErrSplit sim = two_sum(p3.value, p4.value);
  return {Cplx(sre.value, sim.value),
          Cplx(p1.err - p2.err + sre.err, p3.err + p4.err + sim.err)};
}

CplxSplit two_sum(Cplx a, Cplx b) {
  const ErrSplit re = two_sum(a.real(), b.real());
  const ErrSplit im = two_sum(a.imag(), b.imag());
  return {Cplx(re.value, im.value), Cplx(re.err, im.err)};
}

struct Evaluation {
  Cplx value;        // compensated P(z)
  Cplx derivative;   // compensated P'(z); near clusters the plain recurrence
                     // is all noise and Newton steps turn into a random walk
  double noise_floor;  // |P(z)| at or below this is indistinguishable from 0
};

Evaluation evaluate_compensated(const MonicPolynomial& p, Cplx z) {
  Cplx s = 1.0, se = 0.0;    // value and its accumulated error term
  Cplx d = 0.0, de = 0.0;    // derivative likewise
  double mag = 1.0;  // Horner on magnitudes: sum |c_n| |z|^n
  const double az = std::abs(z);
  for (int n = p.degree() - 1; n >= 0; --n) {
    const CplxSplit dprod = two_prod(d, z);
    const CplxSplit dsum = two_sum(dprod.value, s);
    de = de * z + (dprod.err + dsum.err + se);
    d = dsum.value;

    const CplxSplit prod = two_prod(s, z);
    const CplxSplit sum = two_sum(prod.value, p.coeff(n));
    se = se * z + (prod.err + sum.err);
    s = sum.value;

    mag = mag * az + std::abs(p.coeff(n));
  }
  const Cplx value = s + se;
  const double g = (4.0 * p.degree() + 2.0) * kEps;
  return {value, d + de, 4.0 * (kEps * std::abs(value) + g * g * mag)};
}

std::vector<Cplx> initial_guesses(const MonicPolynomial& p, double radius_factor) {
  const int d = p.degree();
  double bound = 0.0;
  for (int n = 0; n < d; ++n)
    bound = std::max(bound, std::pow(std::abs(p.coeff(n)), 1.0 / (d - n)));
  const double r = radius_factor * (1.0 + bound);
  const Cplx center = -p.coeff(d - 1) / static_cast<double>(d);

  std::vector<Cplx> z(static_cast<std::size_t>(d));
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int k = 0; k < d; ++k) {
    const double phi = two_pi * k / d + 0.4;  // fixed phase offset breaks symmetry
    z[static_cast<std::size_t>(k)] = center + r * Cplx(std::cos(phi), std::sin(phi));
  }
  return z;
}

}  // namespace

RootMultiset oracle_roots(const MonicPolynomial& p, const OracleConfig& cfg) {
  if (cfg.max_iterations < 1 || !(cfg.convergence_tol > 0.0) ||
      !(cfg.seed_radius_factor > 0.0))
    throw std::invalid_argument("oracle_roots: invalid config");

  const std::size_t d = static_cast<std::size_t>(p.degree());
  std::vector<Cplx> z = initial_guesses(p, cfg.seed_radius_factor);
  std::vector<bool> settled(d, false);

  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    std::vector<Cplx> next = z;  // simultaneous update from one snapshot
    bool all_settled = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (settled[k]) continue;
      const Evaluation ev = evaluate_compensated(p, z[k]);
      if (std::abs(ev.value) <= ev.noise_floor) {
        settled[k] = true;
        continue;
      }
      if (ev.derivative == 0.0) {
        // Stationary point; nudge deterministically and retry next sweep.
        next[k] += 1e-8 * (1.0 + std::abs(z[k])) * Cplx(1.0, 1.0);
        all_settled = false;
        continue;
      }
      const Cplx newton = ev.value / ev.derivative;
      Cplx repel = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == k) continue;
        const Cplx diff = z[k] - z[j];
        if (diff == 0.0) continue;  // collision; the nudge path separates them
        repel += 1.0 / diff;
      }
      const Cplx denom = 1.0 - newton * repel;
      const Cplx w = denom == 0.0 ? newton : newton / denom;
      next[k] = z[k] - w;
      if (std::abs(w) <= cfg.convergence_tol * (1.0 + std::abs(next[k])))
        settled[k] = true;
      else
        all_settled = false;
    }
    z = std::move(next);
    if (all_settled) break;
  }

  bool converged = true;
  for (std::size_t k = 0; k < d; ++k) converged = converged && settled[k];
  if (!converged) {
    std::vector<double> residuals(d);
    for (std::size_t k = 0; k < d; ++k) residuals[k] = std::abs(evaluate(p, z[k]));
    throw ConvergenceError("oracle_roots: no convergence after max_iterations",
                           std::move(z), std::move(residuals));
  }

  // One Newton step per root, with the compensated numerator and the usual
  // near-multiple-root guard on the derivative.
  for (Cplx& root : z) {
    const Evaluation ev = evaluate_compensated(p, root);
    if (ev.value == 0.0) continue;
    if (std::abs(ev.derivative) < 1e-14 * residual_scale(p, root)) continue;
    root -= ev.value / ev.derivative;
  }
  return z;
}

}  // namespace sextic
