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

#include "sextic/detector.hpp"

#include <stdexcept>

#include "sextic/model_one.hpp"
#include "sextic/model_two.hpp"

namespace sextic {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kModelOne: return "model_one";
    case Verdict::kModelTwo: return "model_two";
    case Verdict::kBoth: return "both";
    case Verdict::kNeither: return "neither";
  }
  return "unknown";
}

Classification classify(const MonicPolynomial& c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("classify: tol must be positive");
  Classification cls;
  cls.report_one = model_one::constraint_residuals(c, tol);
  cls.report_two = model_two::constraint_residuals(c, tol);
  cls.tolerance_used = tol;
  if (cls.report_one.satisfied && cls.report_two.satisfied)
    cls.verdict = Verdict::kBoth;
  else if (cls.report_one.satisfied)
    cls.verdict = Verdict::kModelOne;
  else if (cls.report_two.satisfied)
    cls.verdict = Verdict::kModelTwo;
  else
    cls.verdict = Verdict::kNeither;
  return cls;
}

}  // namespace sextic
