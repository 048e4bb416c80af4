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

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sextic/cli.hpp"

using nlohmann::json;

namespace {

struct Invocation {
  int exit_code;
  std::string out;
  std::string err;
  json payload;  // parsed out when JSON mode produced a single object
};

Invocation run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = sextic::cli::run(args, in, out, err);
  Invocation inv{code, out.str(), err.str(), json()};
  try {
    inv.payload = json::parse(inv.out);
  } catch (const json::exception&) {
    // text mode or multi-line output; callers that need JSON pass --format json
  }
  return inv;
}

double re_of(const json& c) { return c.is_array() ? c[0].get<double>() : c.get<double>(); }
double im_of(const json& c) { return c.is_array() ? c[1].get<double>() : 0.0; }

}  // namespace

TEST_CASE("cli gen: coefficients and labeled roots") {
  const Invocation inv =
      run_cli({"--format", "json", "gen", "--model", "1", "--params", "1", "2", "3", "4", "5"});
  REQUIRE(inv.exit_code == sextic::cli::kOk);
  REQUIRE(inv.payload.is_object());
  CHECK(inv.payload["schema"] == 1);
  CHECK(inv.payload["model"] == 1);
  const double expected[6] = {10, 14, 25, 19, 13, 6};
  for (int n = 0; n < 6; ++n) {
    CHECK(re_of(inv.payload["coefficients"][n]) == expected[n]);
    CHECK(im_of(inv.payload["coefficients"][n]) == 0.0);
  }
  CHECK(inv.payload["labeled_roots"].size() == 6);
  CHECK(inv.payload["resolvents"].size() == 2);
  CHECK(inv.payload["max_residual"].get<double>() <= 1e-10);
  CHECK(inv.payload.contains("defaults"));
}

TEST_CASE("cli check: z^6 - 1 is in both families") {
  const Invocation inv =
      run_cli({"--format", "json", "check", "--coeffs", "-1", "0", "0", "0", "0", "0"});
  REQUIRE(inv.exit_code == sextic::cli::kOk);
  CHECK(inv.payload["verdict"] == "both");
  CHECK(inv.payload["classification"]["model_one"]["satisfied"] == true);
  CHECK(inv.payload["classification"]["model_two"]["satisfied"] == true);
}

TEST_CASE("cli recover: model two fixed vector") {
  const Invocation inv = run_cli({"--format", "json", "recover", "--model", "2", "--coeffs", "7",
                                  "11", "17", "13", "9", "3", "--free", "1"});
  REQUIRE(inv.exit_code == sextic::cli::kOk);
  const double expected[5] = {1, 2, 3, 1, 1};  // (a0, a1, a2, b0, b1)
  for (int i = 0; i < 5; ++i) {
    CHECK(re_of(inv.payload["params"][i]) == expected[i]);
    CHECK(im_of(inv.payload["params"][i]) == 0.0);
  }
  CHECK(inv.payload["round_trip_residual"].get<double>() == 0.0);
}

TEST_CASE("cli pipeline: gen output feeds solve, solve output feeds check") {
  const Invocation gen =
      run_cli({"--format", "json", "gen", "--model", "1", "--params", "1", "2", "3", "4", "5"});
  REQUIRE(gen.exit_code == sextic::cli::kOk);

  const Invocation solve = run_cli({"--format", "json", "solve"}, gen.out);
  REQUIRE(solve.exit_code == sextic::cli::kOk);
  CHECK(solve.payload["method"] == "radical");
  CHECK(solve.payload["model"] == 1);
  // Same coefficients flowed through unchanged.
  for (int n = 0; n < 6; ++n) {
    CHECK(re_of(solve.payload["coefficients"][n]) == re_of(gen.payload["coefficients"][n]));
    CHECK(im_of(solve.payload["coefficients"][n]) == im_of(gen.payload["coefficients"][n]));
  }
  // Root multisets agree between the two invocations.
  for (int i = 0; i < 6; ++i) {
    bool found = false;
    for (int j = 0; j < 6; ++j) {
      const double dre = re_of(solve.payload["roots"][i]) - re_of(gen.payload["roots"][j]);
      const double dim = im_of(solve.payload["roots"][i]) - im_of(gen.payload["roots"][j]);
      if (std::abs(dre) <= 1e-9 && std::abs(dim) <= 1e-9) found = true;
    }
    CHECK(found);
  }

  const Invocation check = run_cli({"--format", "json", "check"}, solve.out);
  REQUIRE(check.exit_code == sextic::cli::kOk);
  CHECK(check.payload["verdict"] == "model_one");
}

TEST_CASE("cli solve: oracle fallback outside both families") {
  const Invocation inv =
      run_cli({"--format", "json", "solve", "--coeffs", "1", "1", "1", "1", "1", "1"});
  REQUIRE(inv.exit_code == sextic::cli::kOk);
  CHECK(inv.payload["method"] == "oracle");
  CHECK(inv.payload["model"].is_null());
  CHECK(inv.payload.contains("notice"));
  CHECK(inv.payload["roots"].size() == 6);
  CHECK(inv.payload["max_residual"].get<double>() <= 1e-9);
}

TEST_CASE("cli exit codes") {
  // Malformed payloads.
  CHECK(run_cli({"check", "--coeffs", "1", "2", "3", "4", "5"}).exit_code ==
        sextic::cli::kValidationError);
  CHECK(run_cli({"check", "--coeffs", "a", "0", "0", "0", "0", "0"}).exit_code ==
        sextic::cli::kValidationError);
  CHECK(run_cli({"frobnicate"}).exit_code == sextic::cli::kValidationError);
  CHECK(run_cli({"check"}, "not json").exit_code == sextic::cli::kValidationError);
  CHECK(run_cli({"gen", "--model", "3", "--params", "1", "2", "3", "4", "5"}).exit_code ==
        sextic::cli::kValidationError);

  // Constraint rejection with a forced model.
  CHECK(run_cli({"recover", "--model", "1", "--coeffs", "1", "1", "1", "1", "1", "1"}).exit_code ==
        sextic::cli::kConstraintRejection);
  CHECK(run_cli({"solve", "--model", "2", "--coeffs", "1", "1", "1", "1", "1", "1"}).exit_code ==
        sextic::cli::kConstraintRejection);

  // Forced oracle non-convergence.
  CHECK(run_cli({"oracle", "--coeffs", "-1", "0", "0", "0", "0", "0", "--max-iter", "1"})
            .exit_code == sextic::cli::kNoConvergence);

  // JSON mode also emits a machine-readable error object.
  const Invocation err = run_cli({"--format", "json", "recover", "--model", "1", "--coeffs", "1",
                                  "1", "1", "1", "1", "1"});
  CHECK(err.exit_code == sextic::cli::kConstraintRejection);
  CHECK(err.payload["error"]["code"] == sextic::cli::kConstraintRejection);
  CHECK(err.payload["error"].contains("constraint_report"));
  CHECK(err.payload["schema"] == 1);
  CHECK(!err.err.empty());
}

TEST_CASE("cli: complex tokens and text/json value agreement") {
  // RE,IM token form.
  const Invocation gen = run_cli({"--format", "json", "gen", "--model", "2", "--params", "1,1",
                                  "0", "0.5,-0.25", "0", "1"});
  REQUIRE(gen.exit_code == sextic::cli::kOk);
  CHECK(im_of(gen.payload["params"][0]) == 1.0);
  CHECK(re_of(gen.payload["params"][2]) == 0.5);
  CHECK(im_of(gen.payload["params"][2]) == -0.25);

  // The text rendering carries the same numbers at 15 significant digits.
  const Invocation text = run_cli({"recover", "--model", "2", "--coeffs", "7", "11", "17", "13",
                                   "9", "3", "--free", "0.5"});
  REQUIRE(text.exit_code == sextic::cli::kOk);
  const Invocation js = run_cli({"--format", "json", "recover", "--model", "2", "--coeffs", "7",
                                 "11", "17", "13", "9", "3", "--free", "0.5"});
  REQUIRE(js.exit_code == sextic::cli::kOk);
  // a2 = 9 - 3 - 1.5 = 4.5 with free b0 = 0.5.
  CHECK(re_of(js.payload["params"][2]) == 4.5);
  CHECK(text.out.find("a2 = (4.5, 0)") != std::string::npos);
}

TEST_CASE("cli bench: seeded runs reproduce instances and accuracy") {
  const std::vector<std::string> args{"--format", "json", "bench", "--trials", "4",
                                      "--seed", "7", "--reps", "3"};
  const Invocation a = run_cli(args);
  const Invocation b = run_cli(args);
  REQUIRE(a.exit_code == sextic::cli::kOk);
  REQUIRE(b.exit_code == sextic::cli::kOk);
  CHECK(a.payload["rng"] == "splitmix64");
  CHECK(a.payload["accuracy"]["max_matched_distance_per_trial"] ==
        b.payload["accuracy"]["max_matched_distance_per_trial"]);
  CHECK(a.payload["accuracy"]["max_matched_distance"].get<double>() <= 1e-6);
  CHECK(a.payload["radical"]["median_ns"].get<double>() > 0.0);
}

TEST_CASE("cli help exits zero") {
  CHECK(run_cli({"--help"}).exit_code == sextic::cli::kOk);
  const Invocation inv = run_cli({"--help"});
  CHECK(inv.out.find("gen") != std::string::npos);
}
