// Copyright 2026 The hadspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hadspec/harness.hpp"
#include "hadspec/io.hpp"
#include "hadspec/laws.hpp"

namespace {

using namespace hadspec;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotConverged = 3;

int default_workers() {
  if (const char* env = std::getenv("HSPEC_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

void print_interval(const char* name, const CertifiedValue& cv) {
  std::printf("%s = %.12g\n", name, cv.value);
  std::printf("interval = [%.17g, %.17g]  width = %.3g  iterations = %ld  %s\n",
              cv.lo, cv.hi, cv.width(), cv.iterations,
              cv.converged ? "converged" : "NOT converged");
}

int cmd_laws() {
  for (const LawSpec& s : catalog()) {
    std::printf("%s  [%s]  \"%s\"\n", s.id.c_str(), s.source.c_str(),
                s.source_quote.c_str());
    std::printf("    chain: %s\n", s.chain.c_str());
    std::printf("    shape: %s\n", shape_summary(s.shape).c_str());
    std::printf("    mode: %s  functionals:",
                s.mode == LawMode::entrywise ? "entrywise" : "scalar-chain");
    if (s.functionals.empty()) {
      std::printf(" (entrywise)");
    } else {
      for (Functional f : s.functionals)
        std::printf(" %s", functional_name(f));
    }
    std::printf("\n");
  }
  return kExitOk;
}

struct CheckArgs {
  std::string law = "all";
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  int min_dim = 1;
  int max_dim = 6;
  std::string entry_model = "loguniform";
  double zero_density = 0.15;
  double structured_rate = 0.10;
  double rtol = 1e-9;
  double atol = 1e-12;
  double spectral_rtol = 1e-10;
  double spectral_atol = 1e-14;
  long max_iter = 100000;
  int workers = 0;
  std::string functional;
  std::string json_path;
};

int cmd_check(const CheckArgs& args) {
  GenConfig cfg;
  cfg.seed = args.seed;
  cfg.min_dim = args.min_dim;
  cfg.max_dim = args.max_dim;
  cfg.entry_model = entry_model_from_name(args.entry_model);
  cfg.zero_density = args.zero_density;
  cfg.structured_injection_rate = args.structured_rate;
  EvalOptions opts;
  opts.rtol = args.rtol;
  opts.atol = args.atol;
  opts.spectral.rtol = args.spectral_rtol;
  opts.spectral.atol = args.spectral_atol;
  opts.spectral.max_iter = args.max_iter;

  std::vector<std::string> ids;
  if (args.law == "all") {
    for (const LawSpec& s : catalog()) ids.push_back(s.id);
  } else {
    ids.push_back(law_by_id(args.law).id);
  }

  const int workers = args.workers > 0 ? args.workers : default_workers();
  CampaignReport rep = run_campaign(ids, args.trials, cfg, opts, workers);

  std::uint64_t passes = 0, fails = 0, skips = 0;
  for (const LawRunStats& row : rep.rows) {
    passes += row.passes;
    fails += row.fails;
    skips += row.skips;
    std::printf("%s %-9s trials=%llu pass=%llu fail=%llu skip=%llu "
                "max_slack=%.3g\n",
                row.law_id.c_str(), row.functional.c_str(),
                static_cast<unsigned long long>(row.trials),
                static_cast<unsigned long long>(row.passes),
                static_cast<unsigned long long>(row.fails),
                static_cast<unsigned long long>(row.skips), row.max_slack);
  }
  std::printf("total: pass=%llu fail=%llu skip=%llu  counterexamples=%zu  "
              "wall=%.1fs\n",
              static_cast<unsigned long long>(passes),
              static_cast<unsigned long long>(fails),
              static_cast<unsigned long long>(skips),
              rep.counterexamples.size(), rep.wall_seconds);
  if (!args.json_path.empty())
    save_report(campaign_report_to_json(rep, cfg, opts, args.trials),
                args.json_path);
  return rep.counterexamples.empty() ? kExitOk : kExitCounterexample;
}

int cmd_eval(const std::string& law, const std::string& input_path,
             const std::string& json_path) {
  std::ifstream in(input_path);
  if (!in) raise(errc::io_error, "cannot open '" + input_path + "'");
  nlohmann::json spec_json = nlohmann::json::parse(in);
  std::string base_dir = ".";
  const auto slash = input_path.find_last_of('/');
  if (slash != std::string::npos) base_dir = input_path.substr(0, slash);
  const LawInput input = law_input_from_json(spec_json, base_dir);
  const LawReport rep = evaluate_law(law, input);
  for (std::size_t i = 0; i < rep.values.size(); ++i)
    std::printf("  %-55s %.12g\n", rep.labels[i].c_str(), rep.values[i]);
  std::printf("%s: %s (slack used %.3g)\n", rep.law_id.c_str(),
              rep.pass ? "pass" : "fail", rep.slack_used);
  if (!rep.pass) std::printf("failing link: %d\n", rep.failing_link);
  if (!json_path.empty()) {
    nlohmann::json j = law_report_to_json(rep, 0, input_digest(input));
    if (!rep.pass) j["counterexample"] = law_input_to_json(input);
    save_report(j, json_path);
  }
  return rep.pass ? kExitOk : kExitCounterexample;
}

int cmd_rho(const std::string& functional, const std::string& matrix_path,
            double rtol, double atol) {
  const NonnegMatrix a = load_matrix(matrix_path);
  SpectralOptions opts;
  opts.rtol = rtol;
  opts.atol = atol;
  const Functional f = functional_from_name(functional);
  const CertifiedValue cv = evaluate_certified(f, a, opts);
  print_interval(functional.c_str(), cv);
  return cv.converged ? kExitOk : kExitNotConverged;
}

int cmd_refine(const std::string& matrix_path, double alpha,
               std::optional<double> beta, int depth,
               const std::string& json_path) {
  const NonnegMatrix a = load_matrix(matrix_path);
  const RefinementSequence rs = refinement_sequence(
      a, alpha, beta, depth, Functional::spectral_radius);
  for (std::size_t n = 0; n < rs.values.size(); ++n)
    std::printf("rho_%zu = %.12g  (width %.3g)\n", n, rs.values[n],
                rs.certified[n].width());
  std::printf("cap = %.12g  (spectral %.12g, norm %.12g)\n", rs.cap,
              rs.cap_spectral, rs.cap_norm);
  if (!json_path.empty()) {
    nlohmann::json j;
    j["alpha"] = alpha;
    if (beta.has_value()) j["beta"] = *beta;
    j["depth"] = depth;
    j["values"] = rs.values;
    j["cap"] = rs.cap;
    j["cap_spectral"] = rs.cap_spectral;
    j["cap_norm"] = rs.cap_norm;
    j["tool_version"] = kToolVersion;
    j["schema_version"] = kSchemaVersion;
    save_report(j, json_path);
  }
  return rs.converged ? kExitOk : kExitNotConverged;
}

int cmd_profile(const std::string& matrix_path, const std::string& functional,
                int grid, const std::string& json_path) {
  const NonnegMatrix a = load_matrix(matrix_path);
  const Functional f = functional_from_name(functional);
  const AlphaProfile prof = alpha_profile(a, f, grid);
  bool converged = true;
  for (std::size_t i = 0; i < prof.grid.size(); ++i) {
    std::printf("alpha=%.6f  %s=%.12g\n", prof.grid[i], functional.c_str(),
                prof.values[i]);
    converged = converged && prof.certified[i].converged;
  }
  if (!json_path.empty()) {
    nlohmann::json j;
    j["functional"] = functional;
    j["grid"] = prof.grid;
    j["values"] = prof.values;
    j["tool_version"] = kToolVersion;
    j["schema_version"] = kSchemaVersion;
    save_report(j, json_path);
  }
  return converged ? kExitOk : kExitNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hadspec: spectral bounds for Hadamard weighted geometric "
               "means of nonnegative matrices, with a seeded law-checking "
               "harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("hadspec ") + kToolVersion);

  app.add_subcommand("laws", "print the law catalog");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "run a fuzz campaign over the catalog");
  c->add_option("--law", check.law, "law id or 'all'");
  c->add_option("--trials", check.trials, "trials per law and functional");
  c->add_option("--seed", check.seed, "campaign seed");
  c->add_option("--min-dim", check.min_dim, "minimum matrix dimension");
  c->add_option("--max-dim", check.max_dim, "maximum matrix dimension");
  c->add_option("--entry-model", check.entry_model,
                "uniform01|loguniform|smallint");
  c->add_option("--zero-density", check.zero_density, "per-entry zero rate");
  c->add_option("--structured-rate", check.structured_rate,
                "structured case injection rate");
  c->add_option("--rtol", check.rtol, "chain relative slack");
  c->add_option("--atol", check.atol, "chain absolute slack");
  c->add_option("--spectral-rtol", check.spectral_rtol);
  c->add_option("--spectral-atol", check.spectral_atol);
  c->add_option("--max-iter", check.max_iter);
  c->add_option("--workers", check.workers,
                "worker threads (default: HSPEC_WORKERS or hardware)");
  c->add_option("--json", check.json_path, "write the campaign report here");

  std::string eval_law, eval_input, eval_json;
  auto* e = app.add_subcommand("eval", "evaluate one law on given inputs");
  e->add_option("--law", eval_law)->required();
  e->add_option("--input", eval_input, "JSON input description")->required();
  e->add_option("--json", eval_json, "write the law report here");

  std::string rho_functional = "r", rho_matrix;
  double rho_rtol = 1e-10, rho_atol = 1e-14;
  auto* r = app.add_subcommand("rho", "evaluate one functional on a matrix");
  r->add_option("--functional", rho_functional, "r|op1|op2|opinf|w|maxentry");
  r->add_option("--matrix", rho_matrix, "Matrix Market file")->required();
  r->add_option("--rtol", rho_rtol);
  r->add_option("--atol", rho_atol);

  std::string ref_matrix, ref_json;
  double ref_alpha = 0.5;
  double ref_beta = -1.0;
  int ref_depth = 4;
  auto* rf = app.add_subcommand("refine", "dyadic refinement sequence");
  rf->add_option("--matrix", ref_matrix)->required();
  rf->add_option("--alpha", ref_alpha)->required();
  rf->add_option("--beta", ref_beta, "second exponent (default 1 - alpha)");
  rf->add_option("--depth", ref_depth);
  rf->add_option("--json", ref_json);

  std::string prof_matrix, prof_functional = "r", prof_json;
  int prof_grid = 21;
  auto* p = app.add_subcommand("profile", "sample f(alpha) = rho(S_alpha(K))");
  p->add_option("--matrix", prof_matrix)->required();
  p->add_option("--functional", prof_functional, "r|op2|w");
  p->add_option("--grid", prof_grid, "odd sample count >= 3");
  p->add_option("--json", prof_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help, --version
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("laws")) return cmd_laws();
    if (app.got_subcommand("check")) return cmd_check(check);
    if (app.got_subcommand("eval"))
      return cmd_eval(eval_law, eval_input, eval_json);
    if (app.got_subcommand("rho"))
      return cmd_rho(rho_functional, rho_matrix, rho_rtol, rho_atol);
    if (app.got_subcommand("refine")) {
      std::optional<double> beta;
      if (rf->count("--beta")) beta = ref_beta;
      return cmd_refine(ref_matrix, ref_alpha, beta, ref_depth, ref_json);
    }
    if (app.got_subcommand("profile"))
      return cmd_profile(prof_matrix, prof_functional, prof_grid, prof_json);
  } catch (const Error& err) {
    std::fprintf(stderr, "error [%s]: %s\n", errc_name(err.code()),
                 err.what());
    return kExitUsage;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitUsage;
  }
  return kExitUsage;
}
