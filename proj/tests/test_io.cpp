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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hadspec/io.hpp"
#include "test_util.hpp"

using namespace hadspec;

TEST_CASE("matrix market array format is column-major") {
  std::istringstream in(
      "%%MatrixMarket matrix array real general\n"
      "2 2\n"
      "1\n3\n2\n4\n");
  CHECK(parse_matrix_market(in, "mem") == M({{1, 2}, {3, 4}}));
}

TEST_CASE("matrix market coordinate format defaults to zero") {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate real general\n"
      "% a comment\n"
      "2 2 1\n"
      "1 2 5.0\n");
  CHECK(parse_matrix_market(in, "mem") == M({{0, 5}, {0, 0}}));
}

TEST_CASE("matrix market rejects bad content") {
  std::istringstream neg(
      "%%MatrixMarket matrix array real general\n2 2\n1\n-1\n2\n4\n");
  try {
    parse_matrix_market(neg, "mem");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::negative_entry);
  }

  std::istringstream rect(
      "%%MatrixMarket matrix array real general\n2 3\n1\n1\n1\n1\n1\n1\n");
  try {
    parse_matrix_market(rect, "mem");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::non_square);
  }

  std::istringstream junk(
      "%%MatrixMarket matrix array real general\n2 2\n1\nx\n2\n4\n");
  try {
    parse_matrix_market(junk, "mem");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find(":4:") != std::string::npos);
  }

  CHECK_THROWS_AS(load_matrix("/nonexistent/matrix.mtx"), Error);
}

TEST_CASE("save then load is the identity on values") {
  GenConfig cfg;
  Stream st(derive_key(31, "mm-roundtrip", "", 0));
  const std::string path = "roundtrip_test.mtx";
  for (int trial = 0; trial < 10; ++trial) {
    const NonnegMatrix a = gen_matrix(cfg, st);
    save_matrix(a, path);
    CHECK(load_matrix(path) == a);
  }
  std::remove(path.c_str());
}

TEST_CASE("law input round-trips through JSON") {
  LawInput in;
  in.matrices = {M({{1, 2}, {3, 4}}), M({{0, 1}, {2, 0.125}})};
  in.weights = Weights::of({0.25, 0.75});
  in.tau = Permutation::from_image({2, 1});
  in.alpha = 0.375;
  in.beta = 0.75;
  in.t = 2.0;
  in.m_pow = 2;
  in.functional = Functional::op_norm_2;
  in.diag_perturbations = {{0.5, -1.0}};
  const nlohmann::json j = law_input_to_json(in);
  const LawInput back = law_input_from_json(j);
  CHECK(law_input_to_json(back).dump() == j.dump());
  CHECK(back.matrices[1] == in.matrices[1]);
  CHECK(back.functional == Functional::op_norm_2);
  CHECK(input_digest(back) == input_digest(in));
}

TEST_CASE("report JSON carries the schema fields and is byte-stable") {
  LawInput in;
  in.matrices = {M({{1, 2}, {3, 4}})};
  in.alpha = 0.5;
  in.functional = Functional::spectral_radius;
  const LawReport rep = evaluate_law("L17", in);
  const nlohmann::json j = law_report_to_json(rep, 42, input_digest(in));
  CHECK(j["schema_version"] == "1");
  CHECK(j["law_id"] == "L17");
  CHECK(j.contains("labels"));
  CHECK(j.contains("values"));
  CHECK(j.contains("slack_used"));
  CHECK(j["verdict"] == "pass");
  CHECK(j.contains("inputs_digest"));
  CHECK(j["seed"] == 42);
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j.dump() == law_report_to_json(rep, 42, input_digest(in)).dump());

  const std::string path = "report_test.json";
  save_report(j, path);
  std::ifstream f(path);
  const nlohmann::json parsed = nlohmann::json::parse(f);
  CHECK(parsed.dump() == j.dump());
  std::remove(path.c_str());
}

TEST_CASE("an empty campaign is still valid JSON") {
  GenConfig cfg;
  const CampaignReport rep = run_campaign({}, 1, cfg, {}, 1);
  const nlohmann::json j = campaign_report_to_json(rep, cfg, {}, 1);
  CHECK(j["laws"].is_array());
  CHECK(j["laws"].empty());
  CHECK(j["counterexamples"].empty());
  CHECK_FALSE(j.dump().empty());
}

TEST_CASE("campaign JSON nests per-law rows") {
  GenConfig cfg;
  cfg.seed = 12;
  cfg.max_dim = 3;
  const CampaignReport rep = run_campaign({"L17"}, 4, cfg, {}, 1);
  const nlohmann::json j = campaign_report_to_json(rep, cfg, {}, 4);
  CHECK(j["schema_version"] == "1");
  CHECK(j["seed"] == 12);
  CHECK(j["laws"].is_array());
  CHECK(j["laws"].size() == 3);  // r, op2, w
  CHECK(j["counterexamples"].is_array());
  CHECK(j["counterexamples"].empty());
  for (const auto& row : j["laws"]) {
    CHECK(row["law_id"] == "L17");
    CHECK(row["trials"] == 4);
    CHECK(row["fails"] == 0);
  }
}
