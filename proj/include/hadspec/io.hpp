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

#ifndef HADSPEC_IO_HPP
#define HADSPEC_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hadspec/harness.hpp"
#include "hadspec/laws.hpp"
#include "hadspec/matrix.hpp"

namespace hadspec {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

/// Matrix Market, array or coordinate, real, general.  Coordinate entries not
/// listed are zero; duplicates accumulate.  Parse errors carry line numbers.
NonnegMatrix load_matrix(const std::string& path);
NonnegMatrix parse_matrix_market(std::istream& in, const std::string& name);

/// Array-format writer; load(save(A)) is the identity on values.
void save_matrix(const NonnegMatrix& a, const std::string& path);
void write_matrix_market(const NonnegMatrix& a, std::ostream& out);

nlohmann::json matrix_to_json(const NonnegMatrix& a);
NonnegMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json law_input_to_json(const LawInput& input);
/// Matrices may be inline arrays or file path strings (resolved against
/// base_dir).
LawInput law_input_from_json(const nlohmann::json& j,
                             const std::string& base_dir = ".");

std::string input_digest(const LawInput& input);

nlohmann::json law_report_to_json(const LawReport& rep, std::uint64_t seed,
                                  const std::string& digest);
nlohmann::json counterexample_to_json(const Counterexample& cex);
nlohmann::json campaign_report_to_json(const CampaignReport& rep,
                                       const GenConfig& cfg,
                                       const EvalOptions& opts,
                                       std::uint64_t trials);

/// Keys come out sorted (nlohmann objects are ordered maps), so identical
/// runs serialize byte-identically.
void save_report(const nlohmann::json& j, const std::string& path);

}  // namespace hadspec

#endif  // HADSPEC_IO_HPP
