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

#ifndef SEXTIC_ORACLE_HPP_
#define SEXTIC_ORACLE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/poly.hpp"

namespace sextic {

struct OracleConfig {
  int max_iterations = 200;
  // Convergence is declared on the max per-root update magnitude relative
  // to |root| + 1.
  double convergence_tol = 1e-13;
  double seed_radius_factor = 1.0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, RootMultiset best, std::vector<double> residuals)
      : std::runtime_error(msg), best_roots(std::move(best)), residuals(std::move(residuals)) {}

  RootMultiset best_roots;
  std::vector<double> residuals;
};

// All roots of p by Aberth-Ehrlich simultaneous iteration.  Seeding is
// deterministic: degree points equally spaced on a circle of radius
// seed_radius_factor * (1 + max_n |c_n|^(1/(degree-n))) around the root
// centroid -c_{degree-1}/degree, phased by 0.4 rad to break symmetry.
// Each returned root is polished with one Newton step.  Throws
// ConvergenceError (carrying the best iterate) if max_iterations is
// exhausted, std::invalid_argument on a bad config.
RootMultiset oracle_roots(const MonicPolynomial& p, const OracleConfig& cfg = {});

}  // namespace sextic

#endif  // SEXTIC_ORACLE_HPP_
