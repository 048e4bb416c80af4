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

#include "sextic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sextic/detector.hpp"
#include "sextic/model_one.hpp"
#include "sextic/model_two.hpp"
#include "sextic/oracle.hpp"
#include "sextic/poly.hpp"
#include "sextic/radical.hpp"
#include "sextic/rng.hpp"

namespace sextic::cli {

namespace {

using nlohmann::json;

constexpr double kDefaultTol = 1e-9;

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- number formatting (text mode mirrors the JSON values at 15 digits) ----

std::string fmt15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string fmt15(Cplx z) {
  return "(" + fmt15(z.real()) + ", " + fmt15(z.imag()) + ")";
}

// ---- wire format: complex as [re, im], bare reals accepted ----

json to_json(Cplx z) { return json::array({z.real(), z.imag()}); }

Cplx complex_from_json(const json& j) {
  if (j.is_number()) return Cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Cplx(j[0].get<double>(), j[1].get<double>());
  throw ValidationFailure("complex values must be numbers or [re, im] pairs");
}

// Command-line token: RE or RE,IM.
Cplx complex_from_token(const std::string& token) {
  const auto comma = token.find(',');
  const auto parse_real = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ValidationFailure("cannot parse number '" + s + "'");
    }
    if (used != s.size())
      throw ValidationFailure("cannot parse number '" + s + "'");
    return v;
  };
  if (comma == std::string::npos) return Cplx(parse_real(token), 0.0);
  return Cplx(parse_real(token.substr(0, comma)), parse_real(token.substr(comma + 1)));
}

std::vector<Cplx> complexes_from_tokens(const std::vector<std::string>& tokens) {
  std::vector<Cplx> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(complex_from_token(t));
  return out;
}

json coeffs_to_json(const MonicPolynomial& p) {
  json arr = json::array();
  for (const Cplx& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

// Coefficients from --coeffs tokens, else from the JSON payload on stdin
// (any object carrying a "coefficients" array, e.g. earlier gen/solve
// output).
MonicPolynomial read_sextic(const std::vector<std::string>& tokens, std::istream& in) {
  std::vector<Cplx> c;
  if (!tokens.empty()) {
    c = complexes_from_tokens(tokens);
  } else {
    std::string text(std::istreambuf_iterator<char>(in), {});
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception&) {
      throw ValidationFailure("no --coeffs given and stdin is not a JSON payload");
    }
    if (!j.is_object() || !j.contains("coefficients"))
      throw ValidationFailure("stdin payload lacks a \"coefficients\" field");
    for (const json& e : j["coefficients"]) c.push_back(complex_from_json(e));
  }
  if (c.size() != 6)
    throw ValidationFailure("expected 6 coefficients c0..c5, got " + std::to_string(c.size()));
  for (const Cplx& z : c)
    if (!is_finite(z)) throw ValidationFailure("coefficients must be finite");
  return MonicPolynomial(std::move(c));
}

// ---- report fragments shared by the subcommands ----

json defaults_json() {
  return json{{"tolerance", kDefaultTol}, {"free_parameter", to_json(Cplx(0.0, 0.0))}};
}

json report_to_json(const ConstraintReport& rep) {
  return json{{"residual_1", to_json(rep.residual_1)},
              {"residual_2", to_json(rep.residual_2)},
              {"scale_1", rep.scale_1},
              {"scale_2", rep.scale_2},
              {"satisfied", rep.satisfied}};
}

json classification_to_json(const Classification& cls) {
  return json{{"verdict", to_string(cls.verdict)},
              {"tolerance", cls.tolerance_used},
              {"model_one", report_to_json(cls.report_one)},
              {"model_two", report_to_json(cls.report_two)}};
}

json params_to_json_one(const model_one::Params& p) {
  return json::array({to_json(p.a0), to_json(p.a1), to_json(p.a2), to_json(p.b0), to_json(p.b1)});
}

json params_to_json_two(const model_two::Params& p) {
  return json::array({to_json(p.a0), to_json(p.a1), to_json(p.a2), to_json(p.b0), to_json(p.b1)});
}

json labeled_roots_json(const SexticRoots& roots, const MonicPolynomial& sextic,
                        double* max_residual) {
  json arr = json::array();
  double worst = 0.0;
  for (const LabeledRoot& r : roots.roots) {
    const double res = std::abs(evaluate(sextic, r.z));
    worst = std::max(worst, res);
    arr.push_back(json{{"lambda", r.lambda}, {"mu", r.mu}, {"z", to_json(r.z)}, {"residual", res}});
  }
  if (max_residual) *max_residual = worst;
  return arr;
}

json plain_roots_json(const RootMultiset& roots) {
  json arr = json::array();
  for (const Cplx& z : roots) arr.push_back(to_json(z));
  return arr;
}

void print_report_text(std::ostream& out, const char* name, const ConstraintReport& rep) {
  out << "  " << name << ": residual_1 = " << fmt15(rep.residual_1)
      << "  residual_2 = " << fmt15(rep.residual_2)
      << "  scales = " << fmt15(rep.scale_1) << ", " << fmt15(rep.scale_2)
      << "  satisfied = " << (rep.satisfied ? "yes" : "no") << "\n";
}

void print_labeled_roots_text(std::ostream& out, const json& roots) {
  for (const json& r : roots) {
    out << "  z[lambda=" << r["lambda"] << ", mu=" << r["mu"]
        << "] = " << fmt15(complex_from_json(r["z"]))
        << "  |P(z)| = " << fmt15(r["residual"].get<double>()) << "\n";
  }
}

void print_defaults_text(std::ostream& out) {
  out << "defaults: tolerance = " << fmt15(kDefaultTol)
      << ", free parameter = " << fmt15(Cplx(0.0, 0.0)) << "\n";
}

// ---- subcommand option bags ----

struct GenOpts {
  int model = 0;
  std::vector<std::string> params;
};

struct SolveOpts {
  std::vector<std::string> coeffs;
  int model = 0;  // 0 = detect
  std::string free_parameter = "0";
  double tol = kDefaultTol;
};

struct CheckOpts {
  std::vector<std::string> coeffs;
  double tol = kDefaultTol;
};

struct RecoverOpts {
  std::vector<std::string> coeffs;
  int model = 0;
  std::string free_parameter = "0";
  double tol = kDefaultTol;
};

struct OracleOpts {
  std::vector<std::string> coeffs;
  int max_iter = 200;
};

struct BenchOpts {
  int trials = 10;
  std::uint64_t seed = 0;
  int reps = 1000;
};

void emit(const json& j, bool json_mode, std::ostream& out,
          const std::function<void()>& text_renderer) {
  if (json_mode)
    out << j.dump() << "\n";
  else
    text_renderer();
}

// ---- gen ----

int cmd_gen(const GenOpts& o, bool json_mode, std::ostream& out) {
  const std::vector<Cplx> vals = complexes_from_tokens(o.params);
  if (vals.size() != 5) throw ValidationFailure("--params expects 5 values");

  MonicPolynomial sextic({0, 0, 0, 0, 0, 0});
  SexticRoots roots;
  json params;
  if (o.model == 1) {
    const model_one::Params p{vals[0], vals[1], vals[2], vals[3], vals[4]};
    sextic = model_one::coefficients_from_params(p);
    roots = model_one::solve(p);
    params = params_to_json_one(p);
  } else {
    const model_two::Params p{vals[0], vals[1], vals[2], vals[3], vals[4]};
    sextic = model_two::coefficients_from_params(p);
    roots = model_two::solve(p);
    params = params_to_json_two(p);
  }

  double max_residual = 0.0;
  json j{{"schema", 1},
         {"command", "gen"},
         {"model", o.model},
         {"params", params},
         {"coefficients", coeffs_to_json(sextic)},
         {"labeled_roots", labeled_roots_json(roots, sextic, &max_residual)},
         {"roots", plain_roots_json(roots.multiset())},
         {"max_residual", max_residual},
         {"defaults", defaults_json()}};
  json resolvents = json::array();
  for (const Resolvent& r : roots.resolvents)
    resolvents.push_back(json{{"label", r.label}, {"y", to_json(r.y)}});
  j["resolvents"] = resolvents;

  emit(j, json_mode, out, [&] {
    out << "model " << o.model << " sextic, coefficients c0..c5:\n";
    for (int n = 0; n < 6; ++n) out << "  c" << n << " = " << fmt15(sextic.coeff(n)) << "\n";
    out << "resolvent values:\n";
    for (const Resolvent& r : roots.resolvents)
      out << "  y[" << r.label << "] = " << fmt15(r.y) << "\n";
    out << "roots:\n";
    print_labeled_roots_text(out, j["labeled_roots"]);
    out << "max residual = " << fmt15(max_residual) << "\n";
    print_defaults_text(out);
  });
  return kOk;
}

// ---- check ----

int cmd_check(const CheckOpts& o, bool json_mode, std::istream& in, std::ostream& out) {
  const MonicPolynomial sextic = read_sextic(o.coeffs, in);
  const Classification cls = classify(sextic, o.tol);

  json j{{"schema", 1},
         {"command", "check"},
         {"coefficients", coeffs_to_json(sextic)},
         {"classification", classification_to_json(cls)},
         {"verdict", to_string(cls.verdict)},
         {"defaults", defaults_json()}};

  emit(j, json_mode, out, [&] {
    out << "verdict: " << to_string(cls.verdict) << " (tolerance " << fmt15(o.tol) << ")\n";
    print_report_text(out, "model one", cls.report_one);
    print_report_text(out, "model two", cls.report_two);
    print_defaults_text(out);
  });
  return kOk;
}

// ---- recover ----

int cmd_recover(const RecoverOpts& o, bool json_mode, std::istream& in, std::ostream& out) {
  const MonicPolynomial sextic = read_sextic(o.coeffs, in);
  const Cplx free_value = complex_from_token(o.free_parameter);

  json params;
  MonicPolynomial regenerated({0, 0, 0, 0, 0, 0});
  if (o.model == 1) {
    const model_one::Params p = model_one::recover_params(sextic, free_value, o.tol);
    params = params_to_json_one(p);
    regenerated = model_one::coefficients_from_params(p);
  } else {
    const model_two::Params p = model_two::recover_params(sextic, free_value, o.tol);
    params = params_to_json_two(p);
    regenerated = model_two::coefficients_from_params(p);
  }
  double round_trip = 0.0;
  for (int n = 0; n < 6; ++n)
    round_trip = std::max(round_trip, std::abs(regenerated.coeff(n) - sextic.coeff(n)));

  json j{{"schema", 1},
         {"command", "recover"},
         {"model", o.model},
         {"coefficients", coeffs_to_json(sextic)},
         {"free_parameter", to_json(free_value)},
         {"tolerance", o.tol},
         {"params", params},
         {"round_trip_residual", round_trip},
         {"defaults", defaults_json()}};

  emit(j, json_mode, out, [&] {
    static const char* names[5] = {"a0", "a1", "a2", "b0", "b1"};
    out << "model " << o.model << " parameters (free parameter " << fmt15(free_value) << "):\n";
    for (int i = 0; i < 5; ++i)
      out << "  " << names[i] << " = " << fmt15(complex_from_json(j["params"][i])) << "\n";
    out << "round-trip residual = " << fmt15(round_trip) << "\n";
    print_defaults_text(out);
  });
  return kOk;
}

// ---- oracle ----

int cmd_oracle(const OracleOpts& o, bool json_mode, std::istream& in, std::ostream& out) {
  const MonicPolynomial sextic = read_sextic(o.coeffs, in);
  OracleConfig cfg;
  cfg.max_iterations = o.max_iter;
  const RootMultiset roots = oracle_roots(sextic, cfg);

  json residuals = json::array();
  double max_residual = 0.0;
  for (const Cplx& z : roots) {
    const double r = std::abs(evaluate(sextic, z));
    max_residual = std::max(max_residual, r);
    residuals.push_back(r);
  }

  json j{{"schema", 1},
         {"command", "oracle"},
         {"coefficients", coeffs_to_json(sextic)},
         {"roots", plain_roots_json(roots)},
         {"residuals", residuals},
         {"max_residual", max_residual},
         {"max_iterations", o.max_iter},
         {"defaults", defaults_json()}};

  emit(j, json_mode, out, [&] {
    out << "iterative roots:\n";
    for (std::size_t i = 0; i < roots.size(); ++i)
      out << "  z[" << i << "] = " << fmt15(roots[i])
          << "  |P(z)| = " << fmt15(residuals[i].get<double>()) << "\n";
    out << "max residual = " << fmt15(max_residual) << "\n";
    print_defaults_text(out);
  });
  return kOk;
}

// ---- solve ----

int cmd_solve(const SolveOpts& o, bool json_mode, std::istream& in, std::ostream& out) {
  const MonicPolynomial sextic = read_sextic(o.coeffs, in);
  const Cplx free_value = complex_from_token(o.free_parameter);
  const Classification cls = classify(sextic, o.tol);

  int model = o.model;
  if (model == 0) {
    if (cls.verdict == Verdict::kModelOne || cls.verdict == Verdict::kBoth)
      model = 1;
    else if (cls.verdict == Verdict::kModelTwo)
      model = 2;
  }

  json j{{"schema", 1},
         {"command", "solve"},
         {"coefficients", coeffs_to_json(sextic)},
         {"classification", classification_to_json(cls)},
         {"free_parameter", to_json(free_value)},
         {"tolerance", o.tol},
         {"defaults", defaults_json()}};

  std::string notice;
  double max_residual = 0.0;
  if (model != 0) {
    SexticRoots roots;
    if (model == 1) {
      const model_one::Params p = model_one::recover_params(sextic, free_value, o.tol);
      roots = model_one::solve(p);
      j["params"] = params_to_json_one(p);
    } else {
      const model_two::Params p = model_two::recover_params(sextic, free_value, o.tol);
      roots = model_two::solve(p);
      j["params"] = params_to_json_two(p);
    }
    j["method"] = "radical";
    j["model"] = model;
    j["labeled_roots"] = labeled_roots_json(roots, sextic, &max_residual);
    j["roots"] = plain_roots_json(roots.multiset());
  } else {
    notice = "coefficients lie in neither family; falling back to the iterative oracle";
    const RootMultiset roots = oracle_roots(sextic);
    j["method"] = "oracle";
    j["model"] = nullptr;
    j["notice"] = notice;
    j["roots"] = plain_roots_json(roots);
    for (const Cplx& z : roots)
      max_residual = std::max(max_residual, std::abs(evaluate(sextic, z)));
  }
  j["max_residual"] = max_residual;

  emit(j, json_mode, out, [&] {
    out << "verdict: " << to_string(cls.verdict) << "\n";
    if (!notice.empty()) out << "note: " << notice << "\n";
    out << "method: " << j["method"].get<std::string>();
    if (model != 0) out << " (model " << model << ")";
    out << "\n";
    if (j.contains("labeled_roots")) {
      out << "roots:\n";
      print_labeled_roots_text(out, j["labeled_roots"]);
    } else {
      out << "roots:\n";
      for (const json& z : j["roots"]) out << "  " << fmt15(complex_from_json(z)) << "\n";
    }
    out << "max residual = " << fmt15(max_residual) << "\n";
    print_defaults_text(out);
  });
  return kOk;
}

// ---- bench ----

struct BenchStats {
  double median_ns = 0.0;
  double p95_ns = 0.0;
};

BenchStats summarize(std::vector<double> ns) {
  std::sort(ns.begin(), ns.end());
  const std::size_t n = ns.size();
  BenchStats s;
  s.median_ns = n % 2 == 1 ? ns[n / 2] : 0.5 * (ns[n / 2 - 1] + ns[n / 2]);
  const std::size_t idx = std::min(n - 1, static_cast<std::size_t>(std::ceil(0.95 * n)) - 1);
  s.p95_ns = ns[idx];
  return s;
}

int cmd_bench(const BenchOpts& o, bool json_mode, std::ostream& out) {
  if (o.trials < 1) throw ValidationFailure("--trials must be >= 1");
  if (o.reps < 1) throw ValidationFailure("--reps must be >= 1");
  using clock = std::chrono::steady_clock;

  SplitMix64 rng(o.seed);
  std::vector<double> radical_ns, oracle_ns, matched;
  double max_radical_residual = 0.0, max_oracle_residual = 0.0;
  double sink = 0.0;

  for (int t = 0; t < o.trials; ++t) {
    const int model = t % 2 + 1;
    const Cplx v0 = rng.uniform_complex(-2, 2), v1 = rng.uniform_complex(-2, 2),
               v2 = rng.uniform_complex(-2, 2), v3 = rng.uniform_complex(-2, 2),
               v4 = rng.uniform_complex(-2, 2);

    MonicPolynomial sextic({0, 0, 0, 0, 0, 0});
    SexticRoots radical;
    const model_one::Params p1{v0, v1, v2, v3, v4};
    const model_two::Params p2{v0, v1, v2, v3, v4};
    if (model == 1) {
      sextic = model_one::coefficients_from_params(p1);
      radical = model_one::solve(p1);
    } else {
      sextic = model_two::coefficients_from_params(p2);
      radical = model_two::solve(p2);
    }

    auto start = clock::now();
    for (int r = 0; r < o.reps; ++r) {
      const SexticRoots roots = model == 1 ? model_one::solve(p1) : model_two::solve(p2);
      sink += roots.roots[0].z.real();
    }
    radical_ns.push_back(
        std::chrono::duration<double, std::nano>(clock::now() - start).count() / o.reps);

    const RootMultiset oracle = oracle_roots(sextic);
    start = clock::now();
    for (int r = 0; r < o.reps; ++r) {
      const RootMultiset roots = oracle_roots(sextic);
      sink += roots[0].real();
    }
    oracle_ns.push_back(
        std::chrono::duration<double, std::nano>(clock::now() - start).count() / o.reps);

    matched.push_back(match_roots(radical.multiset(), oracle).max_distance);
    for (const LabeledRoot& r : radical.roots)
      max_radical_residual = std::max(max_radical_residual, std::abs(evaluate(sextic, r.z)));
    for (const Cplx& z : oracle)
      max_oracle_residual = std::max(max_oracle_residual, std::abs(evaluate(sextic, z)));
  }
  volatile double keep = sink;
  (void)keep;

  const BenchStats rad = summarize(radical_ns);
  const BenchStats ora = summarize(oracle_ns);
  const double worst_match = *std::max_element(matched.begin(), matched.end());

  json j{{"schema", 1},
         {"command", "bench"},
         {"trials", o.trials},
         {"seed", o.seed},
         {"repetitions", o.reps},
         {"rng", "splitmix64"},
         {"radical", json{{"median_ns", rad.median_ns}, {"p95_ns", rad.p95_ns}}},
         {"oracle", json{{"median_ns", ora.median_ns}, {"p95_ns", ora.p95_ns}}},
         {"accuracy",
          json{{"max_matched_distance", worst_match},
               {"max_matched_distance_per_trial", matched},
               {"max_radical_residual", max_radical_residual},
               {"max_oracle_residual", max_oracle_residual}}},
         {"defaults", defaults_json()}};

  emit(j, json_mode, out, [&] {
    out << "bench: " << o.trials << " in-family instances, seed " << o.seed << ", "
        << o.reps << " repetitions per timing (rng splitmix64)\n";
    out << "  radical solve: median " << fmt15(rad.median_ns) << " ns, p95 "
        << fmt15(rad.p95_ns) << " ns\n";
    out << "  oracle solve:  median " << fmt15(ora.median_ns) << " ns, p95 "
        << fmt15(ora.p95_ns) << " ns\n";
    out << "  max matched distance radical vs oracle = " << fmt15(worst_match) << "\n";
    out << "  max residual: radical " << fmt15(max_radical_residual) << ", oracle "
        << fmt15(max_oracle_residual) << "\n";
    print_defaults_text(out);
  });
  return kOk;
}

// ---- error reporting ----

int fail(int code, const std::string& kind, const std::string& message, bool json_mode,
         std::ostream& out, std::ostream& err, const ConstraintReport* report = nullptr) {
  err << "error: " << message << "\n";
  if (json_mode) {
    json j{{"schema", 1}, {"error", json{{"code", code}, {"kind", kind}, {"message", message}}}};
    if (report) j["error"]["constraint_report"] = report_to_json(*report);
    out << j.dump() << "\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"explicitly solvable sextic polynomial toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  GenOpts gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "coefficients and roots from parameters");
  gen_cmd->add_option("--model", gen.model, "family: 1 or 2")->required()->check(CLI::Range(1, 2));
  gen_cmd->add_option("--params", gen.params, "a0 a1 a2 b0 b1 (each RE or RE,IM)")
      ->required()
      ->expected(5);

  SolveOpts solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "roots of a sextic, by radicals when possible");
  solve_cmd->add_option("--coeffs", solve.coeffs, "c0..c5 (each RE or RE,IM)")->expected(6);
  solve_cmd->add_option("--model", solve.model, "force family 1 or 2")->check(CLI::Range(1, 2));
  solve_cmd->add_option("--free", solve.free_parameter, "free fiber parameter");
  solve_cmd->add_option("--tol", solve.tol, "constraint tolerance")->check(CLI::PositiveNumber);

  CheckOpts check;
  CLI::App* check_cmd = app.add_subcommand("check", "family membership of a sextic");
  check_cmd->add_option("--coeffs", check.coeffs, "c0..c5")->expected(6);
  check_cmd->add_option("--tol", check.tol, "constraint tolerance")->check(CLI::PositiveNumber);

  RecoverOpts recover;
  CLI::App* recover_cmd = app.add_subcommand("recover", "parameters from coefficients");
  recover_cmd->add_option("--coeffs", recover.coeffs, "c0..c5")->expected(6);
  recover_cmd->add_option("--model", recover.model, "family: 1 or 2")
      ->required()
      ->check(CLI::Range(1, 2));
  recover_cmd->add_option("--free", recover.free_parameter, "free fiber parameter");
  recover_cmd->add_option("--tol", recover.tol, "constraint tolerance")->check(CLI::PositiveNumber);

  OracleOpts oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "roots by simultaneous iteration");
  oracle_cmd->add_option("--coeffs", oracle.coeffs, "c0..c5")->expected(6);
  oracle_cmd->add_option("--max-iter", oracle.max_iter, "iteration cap")
      ->check(CLI::PositiveNumber);

  BenchOpts bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "radical vs oracle timing and accuracy");
  bench_cmd->add_option("--trials", bench.trials, "number of random in-family instances");
  bench_cmd->add_option("--seed", bench.seed, "rng seed");
  bench_cmd->add_option("--reps", bench.reps, "repetitions per timing");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(kValidationError, "usage", e.what(), format == "json", out, err);
  }

  const bool json_mode = format == "json";
  try {
    if (app.got_subcommand(gen_cmd)) return cmd_gen(gen, json_mode, out);
    if (app.got_subcommand(solve_cmd)) return cmd_solve(solve, json_mode, in, out);
    if (app.got_subcommand(check_cmd)) return cmd_check(check, json_mode, in, out);
    if (app.got_subcommand(recover_cmd)) return cmd_recover(recover, json_mode, in, out);
    if (app.got_subcommand(oracle_cmd)) return cmd_oracle(oracle, json_mode, in, out);
    if (app.got_subcommand(bench_cmd)) return cmd_bench(bench, json_mode, out);
    return fail(kValidationError, "usage", "no subcommand given", json_mode, out, err);
  } catch (const ValidationFailure& e) {
    return fail(kValidationError, "validation", e.what(), json_mode, out, err);
  } catch (const ConstraintError& e) {
    return fail(kConstraintRejection, "constraint_rejection", e.what(), json_mode, out, err,
                &e.report());
  } catch (const InconsistencyError& e) {
    return fail(kConstraintRejection, "inconsistency", e.what(), json_mode, out, err);
  } catch (const ConvergenceError& e) {
    return fail(kNoConvergence, "no_convergence", e.what(), json_mode, out, err);
  } catch (const std::invalid_argument& e) {
    return fail(kValidationError, "validation", e.what(), json_mode, out, err);
  }
}

}  // namespace sextic::cli
