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

#include "sextic/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sextic {

bool is_finite(Cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool lex_less(Cplx a, Cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

MonicPolynomial::MonicPolynomial(std::vector<Cplx> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("MonicPolynomial: degree must be >= 1");
  for (const Cplx& c : coeffs_)
    if (!is_finite(c))
      throw std::invalid_argument("MonicPolynomial: non-finite coefficient");
}

Cplx evaluate(const MonicPolynomial& p, Cplx z) {
  Cplx acc = 1.0;  // implicit leading coefficient
  for (int n = p.degree() - 1; n >= 0; --n) acc = acc * z + p.coeff(n);
  return acc;
}

std::pair<Cplx, Cplx> evaluate_with_derivative(const MonicPolynomial& p, Cplx z) {
  Cplx val = 1.0;
  Cplx der = 0.0;
  for (int n = p.degree() - 1; n >= 0; --n) {
    der = der * z + val;
    val = val * z + p.coeff(n);
  }
  return {val, der};
}

namespace {

// Full coefficient vector (ascending, leading entry included) product.
std::vector<Cplx> convolve(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
  std::vector<Cplx> out(a.size() + b.size() - 1, Cplx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

MonicPolynomial from_full(std::vector<Cplx> full) {
  // Leading entry is an exact product of 1s by construction.
  full.pop_back();
  return MonicPolynomial(std::move(full));
}

}  // namespace

MonicPolynomial polynomial_from_roots(const RootMultiset& roots) {
  if (roots.empty())
    throw std::invalid_argument("polynomial_from_roots: empty root multiset");
  std::vector<Cplx> full{1.0};
  for (const Cplx& r : roots) {
    if (!is_finite(r))
      throw std::invalid_argument("polynomial_from_roots: non-finite root");
    full = convolve(full, {-r, Cplx(1.0)});
  }
  return from_full(std::move(full));
}

MonicPolynomial compose(const MonicPolynomial& outer, const MonicPolynomial& inner) {
  std::vector<Cplx> inner_full = inner.coeffs();
  inner_full.push_back(1.0);
  // Horner in polynomial arithmetic: ((1*q + o_{m-1})*q + ...)*q + o_0.
  std::vector<Cplx> acc{1.0};
  for (int j = outer.degree() - 1; j >= 0; --j) {
    acc = convolve(acc, inner_full);
    acc[0] += outer.coeff(j);
  }
  return from_full(std::move(acc));
}

double coeff_magnitude(const MonicPolynomial& p) {
  double m = 0.0;
  for (const Cplx& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double residual_scale(const MonicPolynomial& p, Cplx z) {
  return (1.0 + coeff_magnitude(p)) * std::pow(1.0 + std::abs(z), p.degree());
}

double coefficient_scale(const MonicPolynomial& p, int power) {
  return 1.0 + std::pow(coeff_magnitude(p), power);
}

namespace {

MatchReport report_for(const RootMultiset& a, const RootMultiset& b,
                       const std::vector<std::size_t>& pairing) {
  MatchReport rep;
  rep.pairing = pairing;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = std::abs(a[i] - b[pairing[i]]);
    rep.max_distance = std::max(rep.max_distance, d);
    rep.total_distance += d;
  }
  return rep;
}

}  // namespace

MatchReport match_roots(const RootMultiset& a, const RootMultiset& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("match_roots: multiset size mismatch");
  const std::size_t n = a.size();
  if (n == 0) return MatchReport{};

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  if (n <= 8) {
    std::vector<std::size_t> best = perm;
    double best_total = report_for(a, b, perm).total_distance;
    while (std::next_permutation(perm.begin(), perm.end())) {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) total += std::abs(a[i] - b[perm[i]]);
      if (total < best_total) {
        best_total = total;
        best = perm;
      }
    }
    return report_for(a, b, best);
  }

  // Greedy nearest assignment, then improve with pairwise swaps.
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pick = n;
    double best_d = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      double d = std::abs(a[i] - b[j]);
      if (pick == n || d < best_d) {
        pick = j;
        best_d = d;
      }
    }
    perm[i] = pick;
    used[pick] = true;
  }
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double cur = std::abs(a[i] - b[perm[i]]) + std::abs(a[j] - b[perm[j]]);
        double swapped = std::abs(a[i] - b[perm[j]]) + std::abs(a[j] - b[perm[i]]);
        if (swapped < cur) {
          std::swap(perm[i], perm[j]);
          improved = true;
        }
      }
    }
  }
  return report_for(a, b, perm);
}

}  // namespace sextic
