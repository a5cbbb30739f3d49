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

#include "hadspec/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hadspec {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void parse_fail(const std::string& name, int line,
                             const std::string& msg) {
  raise(errc::parse_error,
        name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

double parse_real(const std::string& tok, const std::string& name, int line) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0')
    parse_fail(name, line, "expected a number, got '" + tok + "'");
  return v;
}

long parse_int(const std::string& tok, const std::string& name, int line) {
  char* end = nullptr;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0')
    parse_fail(name, line, "expected an integer, got '" + tok + "'");
  return v;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

NonnegMatrix parse_matrix_market(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) parse_fail(name, 1, "empty file");
  ++lineno;
  auto head = tokens(line);
  if (head.size() < 4 || lower(head[0]) != "%%matrixmarket" ||
      lower(head[1]) != "matrix")
    parse_fail(name, lineno, "expected a MatrixMarket matrix header");
  const std::string format = lower(head[2]);
  const std::string field = lower(head[3]);
  const std::string symmetry = head.size() > 4 ? lower(head[4]) : "general";
  if (format != "array" && format != "coordinate")
    parse_fail(name, lineno, "format must be array or coordinate");
  if (field != "real" && field != "integer")
    parse_fail(name, lineno, "field must be real");
  if (symmetry != "general")
    parse_fail(name, lineno, "symmetry must be general");

  auto next_data_line = [&](std::vector<std::string>& out) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] == '%') continue;
      out = tokens(line);
      if (!out.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  if (!next_data_line(toks)) parse_fail(name, lineno, "missing size line");
  const int size_line = lineno;

  if (format == "array") {
    if (toks.size() != 2) parse_fail(name, size_line, "array size line needs 2 fields");
    const long rows = parse_int(toks[0], name, size_line);
    const long cols = parse_int(toks[1], name, size_line);
    if (rows != cols)
      raise(errc::non_square, name + ": matrix is " + std::to_string(rows) +
                                  "x" + std::to_string(cols));
    if (rows < 1) parse_fail(name, size_line, "dimension must be positive");
    const int n = static_cast<int>(rows);
    std::vector<double> colmajor;
    colmajor.reserve(static_cast<std::size_t>(n) * n);
    while (colmajor.size() < static_cast<std::size_t>(n) * n) {
      std::vector<std::string> vals;
      if (!next_data_line(vals))
        parse_fail(name, lineno, "unexpected end of file, expected " +
                                      std::to_string(n * n) + " values");
      for (const auto& t : vals) {
        if (colmajor.size() >= static_cast<std::size_t>(n) * n)
          parse_fail(name, lineno, "too many values");
        colmajor.push_back(parse_real(t, name, lineno));
      }
    }
    // array format is column-major
    std::vector<double> e(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        e[static_cast<std::size_t>(i) * n + j] =
            colmajor[static_cast<std::size_t>(j) * n + i];
    return NonnegMatrix::from_entries(n, std::move(e));
  }

  if (toks.size() != 3)
    parse_fail(name, size_line, "coordinate size line needs 3 fields");
  const long rows = parse_int(toks[0], name, size_line);
  const long cols = parse_int(toks[1], name, size_line);
  const long nnz = parse_int(toks[2], name, size_line);
  if (rows != cols)
    raise(errc::non_square, name + ": matrix is " + std::to_string(rows) +
                                "x" + std::to_string(cols));
  if (rows < 1) parse_fail(name, size_line, "dimension must be positive");
  const int n = static_cast<int>(rows);
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (long k = 0; k < nnz; ++k) {
    std::vector<std::string> vals;
    if (!next_data_line(vals))
      parse_fail(name, lineno, "unexpected end of file, expected " +
                                    std::to_string(nnz) + " entries");
    if (vals.size() != 3)
      parse_fail(name, lineno, "coordinate entries need 'i j value'");
    const long i = parse_int(vals[0], name, lineno);
    const long j = parse_int(vals[1], name, lineno);
    const double v = parse_real(vals[2], name, lineno);
    if (i < 1 || i > n || j < 1 || j > n)
      parse_fail(name, lineno, "index out of range");
    e[static_cast<std::size_t>(i - 1) * n + (j - 1)] += v;
  }
  return NonnegMatrix::from_entries(n, std::move(e));
}

NonnegMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io_error, "cannot open '" + path + "'");
  return parse_matrix_market(in, path);
}

void write_matrix_market(const NonnegMatrix& a, std::ostream& out) {
  const int n = a.dim();
  out << "%%MatrixMarket matrix array real general\n";
  out << n << " " << n << "\n";
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out << fmt_double(a(i, j)) << "\n";
}

void save_matrix(const NonnegMatrix& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(errc::io_error, "cannot open '" + path + "' for writing");
  write_matrix_market(a, out);
  if (!out) raise(errc::io_error, "write failed for '" + path + "'");
}

nlohmann::json matrix_to_json(const NonnegMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

NonnegMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    raise(errc::parse_error, "matrix JSON must be a nonempty array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) raise(errc::parse_error, "matrix rows must be arrays");
    rows.push_back(r.get<std::vector<double>>());
  }
  return NonnegMatrix::from_rows(rows);
}

nlohmann::json law_input_to_json(const LawInput& in) {
  nlohmann::json j;
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& m : in.matrices) mats.push_back(matrix_to_json(m));
  j["matrices"] = std::move(mats);
  if (in.grid_rows > 0) {
    j["grid_rows"] = in.grid_rows;
    j["grid_cols"] = in.grid_cols;
  }
  if (in.weights.has_value()) j["weights"] = in.weights->alphas;
  if (in.tau.has_value()) j["tau"] = in.tau->image_one_based();
  if (in.nu.has_value()) j["nu"] = in.nu->image_one_based();
  j["alpha"] = in.alpha;
  if (in.beta.has_value()) j["beta"] = *in.beta;
  j["mix"] = in.mix;
  j["t"] = in.t;
  j["m"] = in.m_pow;
  j["l"] = in.l_pow;
  j["depth"] = in.depth;
  j["gridsize"] = in.gridsize;
  j["functional"] = functional_name(in.functional);
  if (!in.diag_perturbations.empty()) j["diagonals"] = in.diag_perturbations;
  return j;
}

LawInput law_input_from_json(const nlohmann::json& j,
                             const std::string& base_dir) {
  LawInput in;
  if (!j.contains("matrices") || !j["matrices"].is_array() ||
      j["matrices"].empty())
    raise(errc::parse_error, "input needs a nonempty 'matrices' array");
  for (const auto& m : j["matrices"]) {
    if (m.is_string()) {
      std::string p = m.get<std::string>();
      if (!p.empty() && p[0] != '/') p = base_dir + "/" + p;
      in.matrices.push_back(load_matrix(p));
    } else {
      in.matrices.push_back(matrix_from_json(m));
    }
  }
  in.grid_rows = j.value("grid_rows", 0);
  in.grid_cols = j.value("grid_cols", 0);
  if (j.contains("weights"))
    in.weights = Weights::of(j["weights"].get<std::vector<double>>());
  if (j.contains("tau"))
    in.tau = Permutation::from_image(j["tau"].get<std::vector<int>>());
  if (j.contains("nu"))
    in.nu = Permutation::from_image(j["nu"].get<std::vector<int>>());
  in.alpha = j.value("alpha", 0.5);
  if (j.contains("beta") && !j["beta"].is_null())
    in.beta = j["beta"].get<double>();
  in.mix = j.value("mix", 1.0);
  in.t = j.value("t", 1.0);
  in.m_pow = j.value("m", 1);
  in.l_pow = j.value("l", 1);
  in.depth = j.value("depth", 0);
  in.gridsize = j.value("gridsize", 0);
  if (j.contains("functional"))
    in.functional = functional_from_name(j["functional"].get<std::string>());
  if (j.contains("diagonals"))
    in.diag_perturbations =
        j["diagonals"].get<std::vector<std::vector<double>>>();
  return in;
}

std::string input_digest(const LawInput& in) {
  const std::string bytes = law_input_to_json(in).dump();
  const std::uint64_t h = fnv1a64(bytes);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json law_report_to_json(const LawReport& rep, std::uint64_t seed,
                                  const std::string& digest) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["law_id"] = rep.law_id;
  j["labels"] = rep.labels;
  j["values"] = rep.values;
  j["slack_used"] = rep.slack_used;
  j["verdict"] = rep.pass ? "pass" : "fail";
  j["inputs_digest"] = digest;
  j["seed"] = seed;
  j["tool_version"] = kToolVersion;
  j["mode"] =
      rep.mode == LawMode::entrywise ? "entrywise" : "scalar-chain";
  j["functional"] = functional_name(rep.functional);
  j["segments"] = rep.segment_starts;
  if (rep.mode == LawMode::entrywise)
    j["scales"] = rep.scales;
  else
    j["widths"] = rep.widths;
  if (!rep.pass) j["failing_link"] = rep.failing_link;
  return j;
}

nlohmann::json counterexample_to_json(const Counterexample& cex) {
  nlohmann::json j;
  j["law_id"] = cex.law_id;
  j["functional"] = cex.functional;
  j["trial"] = cex.trial;
  j["shrink_steps"] = cex.shrink_steps;
  j["input"] = law_input_to_json(cex.input);
  j["report"] = law_report_to_json(cex.report, 0, input_digest(cex.input));
  return j;
}

nlohmann::json campaign_report_to_json(const CampaignReport& rep,
                                       const GenConfig& cfg,
                                       const EvalOptions& opts,
                                       std::uint64_t trials) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["seed"] = rep.seed;
  j["tool_version"] = kToolVersion;
  nlohmann::json config;
  config["trials"] = trials;
  config["min_dim"] = cfg.min_dim;
  config["max_dim"] = cfg.max_dim;
  config["entry_model"] = entry_model_name(cfg.entry_model);
  config["zero_density"] = cfg.zero_density;
  config["structured_injection_rate"] = cfg.structured_injection_rate;
  config["rtol"] = opts.rtol;
  config["atol"] = opts.atol;
  config["spectral_rtol"] = opts.spectral.rtol;
  config["spectral_atol"] = opts.spectral.atol;
  config["max_iter"] = opts.spectral.max_iter;
  j["config"] = std::move(config);
  nlohmann::json laws = nlohmann::json::array();
  for (const auto& row : rep.rows) {
    nlohmann::json r;
    r["law_id"] = row.law_id;
    r["functional"] = row.functional;
    r["trials"] = row.trials;
    r["passes"] = row.passes;
    r["fails"] = row.fails;
    r["skips"] = row.skips;
    r["max_slack"] = row.max_slack;
    laws.push_back(std::move(r));
  }
  j["laws"] = std::move(laws);
  nlohmann::json cexs = nlohmann::json::array();
  for (const auto& cex : rep.counterexamples)
    cexs.push_back(counterexample_to_json(cex));
  j["counterexamples"] = std::move(cexs);
  return j;
}

void save_report(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(errc::io_error, "cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  if (!out) raise(errc::io_error, "write failed for '" + path + "'");
}

}  // namespace hadspec
