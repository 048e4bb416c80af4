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

#ifndef SEXTIC_MODEL_COMMON_HPP_
#define SEXTIC_MODEL_COMMON_HPP_

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/poly.hpp"

namespace sextic {

// One of the six sextic roots, tagged with its provenance: lambda indexes
// the quadratic stage, mu the cubic stage.
struct LabeledRoot {
  int lambda;
  int mu;
  Cplx z;
};

// Intermediate resolvent value.  label is lambda for model one (two
// entries), mu for model two (three entries).
struct Resolvent {
  int label;
  Cplx y;
};

struct SexticRoots {
  std::array<LabeledRoot, 6> roots;
  std::vector<Resolvent> resolvents;

  RootMultiset multiset() const {
    RootMultiset out;
    out.reserve(6);
    for (const LabeledRoot& r : roots) out.push_back(r.z);
    return out;
  }
};

// Residuals of a family's two membership constraints.  Each residual is
// classified against its own scale (the scales coincide for model one;
// model two normalizes residual_2 by a quintic coefficient scale).
struct ConstraintReport {
  Cplx residual_1;
  Cplx residual_2;
  double scale_1 = 1.0;
  double scale_2 = 1.0;
  double tol = 0.0;
  bool satisfied = false;
};

// Parameter recovery refused: the coefficients sit outside the family.
class ConstraintError : public std::runtime_error {
 public:
  ConstraintError(const std::string& msg, ConstraintReport report)
      : std::runtime_error(msg), report_(report) {}
  const ConstraintReport& report() const { return report_; }

 private:
  ConstraintReport report_;
};

// The redundant recovery expressions disagree beyond 10x the tolerance:
// corrupted input or a tolerance too tight for the data.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sextic

#endif  // SEXTIC_MODEL_COMMON_HPP_
