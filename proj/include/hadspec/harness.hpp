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

#ifndef HADSPEC_HARNESS_HPP
#define HADSPEC_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hadspec/laws.hpp"
#include "hadspec/rng.hpp"

namespace hadspec {

enum class EntryModel { uniform01, loguniform, smallint };

const char* entry_model_name(EntryModel m);
EntryModel entry_model_from_name(const std::string& name);

struct GenConfig {
  std::uint64_t seed = 0;
  int min_dim = 1;
  int max_dim = 6;
  EntryModel entry_model = EntryModel::loguniform;
  double zero_density = 0.15;
  double structured_injection_rate = 0.10;

  void validate() const;  // 1 <= min <= max <= 64, probabilities in [0,1]
};

struct Counterexample {
  std::string law_id;
  std::string functional;  // short name, or "entrywise"
  std::uint64_t trial = 0;
  LawInput input;
  LawReport report;
  int shrink_steps = 0;
};

struct LawRunStats {
  std::string law_id;
  std::string functional;
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  std::uint64_t fails = 0;
  std::uint64_t skips = 0;
  double max_slack = 0.0;
};

struct CampaignReport {
  std::uint64_t seed = 0;
  std::uint64_t trials_per_law = 0;
  std::vector<LawRunStats> rows;  // sorted by (law_id, functional)
  std::vector<Counterexample> counterexamples;
  double wall_seconds = 0.0;  // never serialized; reports stay byte-stable
};

using EvaluateFn = std::function<LawReport(
    const LawSpec&, const LawInput&, const EvalOptions&)>;

/// Random matrix: dimension in [min_dim, max_dim], entries from the model
/// with independent zeroing, or (with structured_injection_rate) one of the
/// structured cases zero / identity / permutation / rank-one / diagonal /
/// nilpotent.
NonnegMatrix gen_matrix(const GenConfig& cfg, Stream& stream);
NonnegMatrix gen_matrix_dim(const GenConfig& cfg, Stream& stream, int dim);

/// Input satisfying the law's shape.  Throws Error(errc::unsatisfiable) when
/// a filtered hypothesis (L14) cannot be met within 1000 attempts; campaigns
/// record that as a skip.
LawInput gen_law_input(const LawSpec& spec, Functional f, const GenConfig& cfg,
                       Stream& stream);

/// Runs `trials` per law x admissible functional.  Per-trial streams are
/// keyed by (seed, law, functional, index) so reports are identical for any
/// worker count.  A failing trial is re-evaluated at 10x tighter spectral
/// tolerance before it is recorded (and shrunk) as a counterexample.
CampaignReport run_campaign(const std::vector<std::string>& law_ids,
                            std::uint64_t trials, const GenConfig& cfg,
                            const EvalOptions& opts = {}, int workers = 1,
                            EvaluateFn evaluate = {});

/// Greedy reduction while the failure persists: drop a dimension, drop a
/// matrix (weights renormalized), zero an entry, round to 3 significant
/// digits.  Every kept step re-checks that the shrunk input still fails.
Counterexample shrink(const Counterexample& cex, const EvalOptions& opts,
                      EvaluateFn evaluate = {});

/// Functional names a campaign iterates for a law ("entrywise" for
/// functional-free laws).
std::vector<std::string> campaign_functionals(const LawSpec& spec);

}  // namespace hadspec

#endif  // HADSPEC_HARNESS_HPP
