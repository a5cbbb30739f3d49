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

#ifndef HADSPEC_LAWS_HPP
#define HADSPEC_LAWS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hadspec/constructions.hpp"
#include "hadspec/matrix.hpp"
#include "hadspec/spectral.hpp"

namespace hadspec {

enum class LawMode { scalar_chain, entrywise };

enum class InputKind {
  single,       // one matrix
  two,          // exactly two matrices
  list,         // n matrices
  pair_list,    // m pairs (f_i, g_i), stored f's then g's
  grid,         // l x n grid, row-major
  diag_family,  // base matrix plus diagonal perturbations
  perm_family,  // m operators with tau (and maybe nu)
};

enum class WeightRule { none, convex, ge1, convex_or_ge1 };
enum class AlphaRule {
  none,
  unit,          // alpha in [0,1]
  pair_ge1,      // alpha, beta >= 0, alpha + beta >= 1
  unit_or_pair,  // beta optional; default beta = 1 - alpha
  ge_inv_m,      // alpha >= 1/m
  ge_2_over_m,   // alpha >= 2/m
  ge_half,       // alpha >= 1/2
  ge_third,      // alpha >= 1/3
};
enum class MParity { any, even, odd };

struct InputShape {
  InputKind kind = InputKind::single;
  int min_n = 1;
  int max_n = 4;
  int min_rows = 1;
  int max_rows = 3;
  WeightRule weights = WeightRule::none;
  AlphaRule alpha = AlphaRule::none;
  bool w_requires_convex = false;  // numerical radius admissible only at s_n=1
  bool needs_t = false;
  bool needs_m_pow = false;
  bool needs_l_pow = false;
  bool needs_tau = false;
  bool needs_nu = false;
  bool needs_mix = false;  // the [0,1] exponent mixing two families
  MParity parity = MParity::any;
  bool zero_diag_filter = false;  // mean diagonal must vanish
  bool needs_depth = false;
  bool needs_gridsize = false;
};

struct LawSpec {
  std::string id;
  std::string source;        // theorem / equation tag
  std::string source_quote;  // anchor phrase
  InputShape shape;
  std::vector<Functional> functionals;  // empty for entrywise laws
  LawMode mode = LawMode::scalar_chain;
  std::string chain;  // display form of the inequality chain
};

struct LawInput {
  std::vector<NonnegMatrix> matrices;
  int grid_rows = 0;
  int grid_cols = 0;
  std::optional<Weights> weights;
  std::optional<Permutation> tau;
  std::optional<Permutation> nu;
  double t = 1.0;
  int m_pow = 1;
  int l_pow = 1;
  double alpha = 0.5;
  std::optional<double> beta;
  double mix = 1.0;
  int depth = 0;
  int gridsize = 0;
  Functional functional = Functional::spectral_radius;
  std::vector<std::vector<double>> diag_perturbations;
};

/// Labeled comparison chain.  Scalar mode: values are expected nondecreasing
/// within each segment, links widened by the certification widths of both
/// ends.  Entrywise mode: values are per-link worst gaps checked against
/// rtol * scale + atol.
struct LawReport {
  std::string law_id;
  LawMode mode = LawMode::scalar_chain;
  Functional functional = Functional::spectral_radius;
  std::vector<std::string> labels;
  std::vector<double> values;
  std::vector<double> widths;              // scalar mode, per value
  std::vector<double> scales;              // entrywise mode, per link
  std::vector<std::size_t> segment_starts{0};
  double slack_used = 0.0;
  bool pass = false;
  int failing_link = -1;
};

struct EvalOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  SpectralOptions spectral{};
};

const std::vector<LawSpec>& catalog();
const LawSpec& law_by_id(const std::string& id);  // throws unknown_law

/// One-line description of a law's input shape for catalog listings.
std::string shape_summary(const InputShape& shape);

/// Throws input_shape_mismatch when the input does not satisfy the law's
/// shape (counts, weights, exponent domains, parity, hypothesis filters).
void validate_input(const LawSpec& spec, const LawInput& input);

LawReport evaluate_law(const std::string& id, const LawInput& input,
                       const EvalOptions& opts = {});

/// Re-derives the verdict from the stored chain; idempotent with the verdict
/// embedded by evaluate_law at the same tolerances.
bool check_report(const LawReport& rep, double rtol, double atol,
                  int* failing_link = nullptr);

}  // namespace hadspec

#endif  // HADSPEC_LAWS_HPP
