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

#ifndef SEXTIC_DETECTOR_HPP_
#define SEXTIC_DETECTOR_HPP_

#include "sextic/model_common.hpp"
#include "sextic/poly.hpp"

namespace sextic {

enum class Verdict { kModelOne, kModelTwo, kBoth, kNeither };

const char* to_string(Verdict v);

struct Classification {
  Verdict verdict;
  ConstraintReport report_one;
  ConstraintReport report_two;
  double tolerance_used;
};

// Membership test against both families at a single tolerance (each
// family applies its own residual scaling).  Throws std::invalid_argument
// unless degree is 6 and tol > 0.
Classification classify(const MonicPolynomial& c, double tol = 1e-9);

}  // namespace sextic

#endif  // SEXTIC_DETECTOR_HPP_
