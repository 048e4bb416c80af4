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

#ifndef SEXTIC_POLY_HPP_
#define SEXTIC_POLY_HPP_

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace sextic {

using Cplx = std::complex<double>;

bool is_finite(Cplx z);

// (re, im) lexicographic order; the tie-break used everywhere roots are sorted.
bool lex_less(Cplx a, Cplx b);

// Monic polynomial with coefficients stored in ascending powers:
// coeffs[n] holds c_n for n = 0..degree-1, the leading coefficient is an
// implicit 1.  All entries must be finite.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(std::vector<Cplx> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Cplx>& coeffs() const { return coeffs_; }
  Cplx coeff(int n) const { return coeffs_[static_cast<std::size_t>(n)]; }

 private:
  std::vector<Cplx> coeffs_;
};

using RootMultiset = std::vector<Cplx>;

// P(z) by Horner's scheme, leading coefficient treated as exactly 1.
Cplx evaluate(const MonicPolynomial& p, Cplx z);

// (P(z), P'(z)) in one Horner pass.
std::pair<Cplx, Cplx> evaluate_with_derivative(const MonicPolynomial& p, Cplx z);

// Vieta expansion: the monic polynomial with the given root multiset,
// built by incremental multiplication of linear factors.
MonicPolynomial polynomial_from_roots(const RootMultiset& roots);

// outer(inner(z)) expanded into monic coefficient form.  Both inputs monic,
// result has degree outer.degree() * inner.degree().
MonicPolynomial compose(const MonicPolynomial& outer, const MonicPolynomial& inner);

// max_n |c_n| over the stored (non-leading) coefficients.
double coeff_magnitude(const MonicPolynomial& p);

// Residual normalization at a point: (1 + max_n |c_n|) * (1 + |z|)^degree.
double residual_scale(const MonicPolynomial& p, Cplx z);

// Coefficient-space normalization: 1 + (max_n |c_n|)^power.  Used by the
// constraint tests, whose right-hand sides are polynomial in the c_n.
double coefficient_scale(const MonicPolynomial& p, int power);

struct MatchReport {
  std::vector<std::size_t> pairing;  // pairing[i]: index in b matched to a[i]
  double max_distance = 0.0;
  double total_distance = 0.0;
};

// Bijective pairing between two equal-size multisets minimizing the total
// pairwise distance.  Exact (exhaustive over permutations) for sizes <= 8;
// greedy assignment plus pairwise-swap refinement above that.
// Throws std::invalid_argument on length mismatch.
MatchReport match_roots(const RootMultiset& a, const RootMultiset& b);

}  // namespace sextic

#endif  // SEXTIC_POLY_HPP_
