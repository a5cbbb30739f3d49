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

#include "hadspec/laws.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

namespace hadspec {

namespace {

using FL = std::vector<Functional>;
constexpr Functional R_ = Functional::spectral_radius;
constexpr Functional O1 = Functional::op_norm_1;
constexpr Functional O2 = Functional::op_norm_2;
constexpr Functional OI = Functional::op_norm_inf;
constexpr Functional W_ = Functional::numerical_radius;

LawSpec mk(std::string id, std::string source, std::string quote,
           InputShape shape, FL fns, LawMode mode, std::string chain) {
  LawSpec s;
  s.id = std::move(id);
  s.source = std::move(source);
  s.source_quote = std::move(quote);
  s.shape = shape;
  s.functionals = std::move(fns);
  s.mode = mode;
  s.chain = std::move(chain);
  return s;
}

std::vector<LawSpec> build_catalog() {
  std::vector<LawSpec> c;
  InputShape sh;

  sh = {};
  sh.kind = InputKind::list;
  sh.weights = WeightRule::convex_or_ge1;
  sh.w_requires_convex = true;
  c.push_back(mk("L01", "Thm 1.1, Eq. (1.3)", "the following inequalities hold",
                 sh, {R_, O1, O2, OI, W_}, LawMode::scalar_chain,
                 "rho(o K_i^(a_i)) <= prod rho(K_i)^(a_i)"));

  sh = {};
  sh.kind = InputKind::grid;
  sh.weights = WeightRule::convex_or_ge1;
  c.push_back(mk("L02", "Thm 1.1, Eq. (1.4)",
                 "H ≤ (K_{11} ⋯ K_{l1})^{(α_1)}", sh, {},
                 LawMode::entrywise,
                 "H <= o (K_{1i}...K_{li})^(a_i) entrywise"));

  sh = {};
  sh.kind = InputKind::grid;
  sh.weights = WeightRule::convex_or_ge1;
  sh.w_requires_convex = true;
  c.push_back(mk("L03", "Thm 1.1, Eq. (1.8)", "the following inequalities hold",
                 sh, {R_, O1, O2, OI, W_}, LawMode::scalar_chain,
                 "rho(H) <= rho(o col-prods^(a_i)) <= prod rho(col-prod)^(a_i)"));

  sh = {};
  sh.kind = InputKind::single;
  c.push_back(mk("L04", "Thm 1.1, Eq. (1.5)",
                 "define operators on L and the inequalities", sh,
                 {O1, O2, OI}, LawMode::scalar_chain, "k(i,j) <= |K|"));

  sh = {};
  sh.kind = InputKind::list;
  sh.needs_t = true;
  c.push_back(mk("L05", "Thm 1.1, Eq. (1.6)",
                 "K_1^{(t)} ⋯ K_n^{(t)} ≤", sh, {},
                 LawMode::entrywise,
                 "K_1^(t)...K_n^(t) <= (K_1...K_n)^(t) entrywise, t >= 1"));

  sh = {};
  sh.kind = InputKind::list;
  sh.needs_t = true;
  c.push_back(mk("L06", "Thm 1.1, Eq. (1.7)",
                 "ρ(K_1^{(t)} ⋯ K_n^{(t)})", sh, {R_, O1, O2, OI},
                 LawMode::scalar_chain,
                 "rho(K_1^(t)...K_n^(t)) <= rho(K_1...K_n)^t"));

  sh = {};
  sh.kind = InputKind::list;
  sh.weights = WeightRule::convex;
  c.push_back(mk("L07", "Eq. (1.9)",
                 "between weighted geometric and weighted arithmetic", sh, {},
                 LawMode::entrywise, "GM <= C <= AM entrywise"));

  sh = {};
  sh.kind = InputKind::list;
  sh.weights = WeightRule::convex;
  c.push_back(mk("L08", "Thm 1.2, Eq. (1.10)", "Then for ρ = r we have",
                 sh, {R_}, LawMode::scalar_chain,
                 "r(C(K_1..K_n, a)) <= sum a_i r(K_i)"));

  sh = {};
  sh.kind = InputKind::diag_family;
  sh.weights = WeightRule::convex;
  c.push_back(mk("L09", "Thm 1.2, Eq. (1.12)",
                 "have the same non-diagonal part", sh, {R_},
                 LawMode::scalar_chain,
                 "r(sum a_i (K+D_i)) <= sum a_i r(K+D_i)"));

  sh = {};
  sh.kind = InputKind::pair_list;
  sh.alpha = AlphaRule::pair_ge1;
  c.push_back(mk("L10", "Eq. (1.13)", "following well known inequality", sh,
                 {}, LawMode::entrywise,
                 "sum f_i^a g_i^b <= (sum f_i)^a (sum g_i)^b entrywise"));

  sh = {};
  sh.kind = InputKind::grid;
  sh.weights = WeightRule::ge1;
  c.push_back(mk("L11", "Thm 2.1, Eq. (2.2)",
                 "where δ = max{M^{s_n}, 1}", sh, {R_, O1, O2, OI, W_},
                 LawMode::scalar_chain,
                 "rho(H) <= rho(o H_i^(a_i)) <= b rho(o H_i^(b_i)) <= "
                 "b prod rho(H_i)^(b_i) <= b sum b_i rho(H_i) <= "
                 "b sum a_i rho(H_i)"));

  sh = {};
  sh.kind = InputKind::grid;
  sh.weights = WeightRule::ge1;
  c.push_back(mk("L12", "Thm 2.1, Eq. (2.3)",
                 "where δ = max{M^{s_n}, 1}", sh, {R_, O1, O2, OI},
                 LawMode::scalar_chain,
                 "rho(H) <= rho(o H_i^(a_i)) <= b rho(o H_i^(b_i)) <= "
                 "b rho(C(H, b)) <= b sum b_i rho(H_i)"));

  sh = {};
  sh.kind = InputKind::grid;
  sh.weights = WeightRule::ge1;
  c.push_back(mk("L13", "Thm 2.1, Eq. (2.4)", "hold for d = ‖·‖",
                 sh, {O1, O2, OI, W_}, LawMode::scalar_chain,
                 "d(H) <= d(o H_i^(a_i)) <= b d(o H_i^(b_i)) <= b d(C(H, b)) "
                 "<= b d(sum b_i H_i) <= b sum b_i d(H_i)"));

  sh = {};
  sh.kind = InputKind::grid;
  sh.weights = WeightRule::ge1;
  sh.zero_diag_filter = true;
  c.push_back(mk("L14", "Thm 2.1, Eq. (2.5)",
                 "where δ = max{M^{s_n}, 1}", sh, {R_},
                 LawMode::scalar_chain,
                 "r(H) <= r(o H_i^(a_i)) <= (m-1) delta, zero mean diagonal"));

  sh = {};
  sh.kind = InputKind::list;
  sh.max_n = 3;
  sh.alpha = AlphaRule::unit;
  c.push_back(mk("L15", "Prop 2.2, Eq. (2.6)",
                 "for all ρ ∈ {r, r_ess, γ, ‖·‖, w}",
                 sh, {R_, O2, W_}, LawMode::scalar_chain,
                 "rho(S_a(K_1)...S_a(K_n)) <= rho((K_1..K_n)^(a) o "
                 "((K_n..K_1)*)^(1-a)) <= rho(K_1..K_n)^a rho(K_n..K_1)^(1-a)"));

  sh = {};
  sh.kind = InputKind::list;
  sh.alpha = AlphaRule::unit;
  c.push_back(mk("L16", "Prop 2.2, Eq. (2.7)",
                 "ρ(S_α(K_1)+ ⋯ + S_α(K_m))", sh,
                 {R_, O2, W_}, LawMode::scalar_chain,
                 "rho(sum S_a(K_i)) <= rho(S_a(sum K_i)) <= rho(sum K_i)"));

  sh = {};
  sh.kind = InputKind::single;
  sh.alpha = AlphaRule::unit;
  c.push_back(mk("L17", "Prop 2.2, Eq. (2.8)",
                 "ρ(S_α(K)) ≤ ρ(K)", sh, {R_, O2, W_},
                 LawMode::scalar_chain, "rho(S_a(K)) <= rho(K)"));

  sh = {};
  sh.kind = InputKind::two;
  sh.alpha = AlphaRule::unit;
  c.push_back(mk("L18", "Prop 2.2, Eq. (2.9)",
                 "ρ(S_α(K_1) S_α(K_2))", sh, {R_},
                 LawMode::scalar_chain,
                 "r(S_a(K_1)S_a(K_2)) <= r((K_1K_2)^(a) o ((K_2K_1)*)^(1-a)) "
                 "<= r(K_1K_2)"));

  sh = {};
  sh.kind = InputKind::list;
  sh.max_n = 3;
  sh.alpha = AlphaRule::pair_ge1;
  c.push_back(mk("L19", "Prop 2.3, Eq. (2.10)",
                 "nonnegative numbers such that α + β ≥ 1", sh,
                 {R_, O2}, LawMode::scalar_chain,
                 "rho(S_ab(K_1)...S_ab(K_n)) <= rho((K_1..K_n)^(a) o "
                 "((K_n..K_1)*)^(b)) <= rho(K_1..K_n)^a rho(K_n..K_1)^b"));

  sh = {};
  sh.kind = InputKind::single;
  sh.alpha = AlphaRule::pair_ge1;
  c.push_back(mk("L20", "Prop 2.3, Eq. (2.11)",
                 "ρ(S_{α,β}(K)) ≤ ρ(K)^{α+β}",
                 sh, {R_, O2}, LawMode::scalar_chain,
                 "rho(S_ab(K)) <= rho(K)^(a+b)"));

  sh = {};
  sh.kind = InputKind::list;
  sh.alpha = AlphaRule::pair_ge1;
  c.push_back(mk("L21", "Prop 2.3, Eq. (2.12)",
                 "ρ(S_{α,β}(K_1)+ ⋯ )", sh, {R_, O2},
                 LawMode::scalar_chain,
                 "rho(sum S_ab(K_i)) <= rho(S_ab(sum K_i)) <= "
                 "rho(sum K_i)^(a+b)"));

  sh = {};
  sh.kind = InputKind::two;
  sh.alpha = AlphaRule::pair_ge1;
  c.push_back(mk("L22", "Prop 2.3, Eq. (2.13)",
                 "ρ(S_{α,β}(K_1) S_{α,β}(K_2))", sh,
                 {R_}, LawMode::scalar_chain,
                 "r(S_ab(K_1)S_ab(K_2)) <= r(K_1K_2)^(a+b)"));

  sh = {};
  sh.kind = InputKind::list;
  sh.max_n = 3;
  sh.alpha = AlphaRule::pair_ge1;
  c.push_back(mk("L23", "Prop 2.3, Eq. (2.14)",
                 "where δ = max{‖K_1 ⋯ K_n‖∞", sh, {R_},
                 LawMode::scalar_chain,
                 "rho(S_ab(K_1)...S_ab(K_n)) <= rho(prod^(a) o (rev*)^(b)) <= "
                 "d rho(prod^(a/(a+b)) o (rev*)^(b/(a+b))) <= "
                 "d rho(prod)^(a/(a+b)) rho(rev)^(b/(a+b))"));

  sh = {};
  sh.kind = InputKind::single;
  sh.alpha = AlphaRule::pair_ge1;
  c.push_back(mk("L24", "Prop 2.3, Eq. (2.15)",
                 "‖K‖∞^{α+β-1}", sh, {R_, O2, W_},
                 LawMode::scalar_chain,
                 "rho(S_ab(K)) <= |K|inf^(a+b-1) rho(S_{a/(a+b)}(K)) <= "
                 "|K|inf^(a+b-1) rho(K)"));

  sh = {};
  sh.kind = InputKind::list;
  sh.alpha = AlphaRule::pair_ge1;
  c.push_back(mk("L25", "Prop 2.3, Eq. (2.16)",
                 "ρ(S_{α,β}(K_1)+ … )", sh, {R_, O2, W_},
                 LawMode::scalar_chain,
                 "rho(sum S_ab(K_i)) <= rho(S_ab(S)) <= "
                 "|S|inf^(a+b-1) rho(S_{a/(a+b)}(S)) <= |S|inf^(a+b-1) rho(S)"));

  sh = {};
  sh.kind = InputKind::two;
  sh.alpha = AlphaRule::pair_ge1;
  c.push_back(mk("L26", "Prop 2.3, Eq. (2.17)",
                 "max{‖K_1 K_2‖∞, ‖K_2K_1‖∞}", sh,
                 {R_}, LawMode::scalar_chain,
                 "r(S_ab(K_1)S_ab(K_2)) <= r((K_1K_2)^(a) o ((K_2K_1)*)^(b)) "
                 "<= d r(...^(a/(a+b)) o ...) <= d r(K_1K_2)"));

  sh = {};
  sh.kind = InputKind::single;
  sh.alpha = AlphaRule::unit_or_pair;
  c.push_back(mk("L27", "Lemma 2.4, Eqs. (2.18)-(2.19)",
                 "S_α(K²) ≥ S_α(K)²", sh, {},
                 LawMode::entrywise,
                 "S_a(K)^2 <= S_a(K^2) and S_ab(K)^2 <= S_ab(K^2) entrywise"));

  sh = {};
  sh.kind = InputKind::single;
  sh.alpha = AlphaRule::unit_or_pair;
  sh.needs_depth = true;
  c.push_back(mk("L28", "Thm 2.5",
                 "ρ_n = ρ(S_α(K^{2^n}))^{2^{-n}}", sh, {R_},
                 LawMode::scalar_chain,
                 "rho_0 <= rho_1 <= ... <= rho_depth <= cap"));

  sh = {};
  sh.kind = InputKind::single;
  sh.alpha = AlphaRule::unit;
  sh.needs_m_pow = true;
  c.push_back(mk("L29", "Prop 2.6, Eqs. (2.20)-(2.21)",
                 "Since S(K) = S(S_α(K))", sh, {R_, O2, W_},
                 LawMode::scalar_chain,
                 "rho(S(K^n))^(1/n) <= rho(S_a(K^n))^(1/n) <= rho(K)"));

  sh = {};
  sh.kind = InputKind::single;
  sh.needs_gridsize = true;
  c.push_back(mk("L30", "Thm 2.7", "decreasing in [0, 0.5]", sh, {R_, O2, W_},
                 LawMode::scalar_chain,
                 "f_rho(a) = rho(S_a(K)) unimodal with minimum at a = 1/2"));

  sh = {};
  sh.kind = InputKind::list;
  sh.max_n = 3;
  sh.weights = WeightRule::convex;
  sh.needs_m_pow = true;
  c.push_back(mk("L31", "Thm 3.1, Eq. (3.1)",
                 "The following refinement of inequality", sh, {R_},
                 LawMode::scalar_chain,
                 "r(o K_i^(a_i)) <= r(o (K_i^m)^(a_i))^(1/m) <= "
                 "prod r(K_i)^(a_i)"));

  sh = {};
  sh.kind = InputKind::list;
  sh.max_n = 3;
  sh.weights = WeightRule::convex;
  sh.needs_m_pow = true;
  sh.needs_l_pow = true;
  c.push_back(mk("L32", "Cor 3.2, Eq. (3.2)", "we obtain its refinement", sh,
                 {R_}, LawMode::scalar_chain,
                 "r(o K_i^(a_i)) <= r(o (K_i^m)^(a_i))^(1/m) <= "
                 "r(o (K_i^{ml})^(a_i))^(1/ml) <= prod r(K_i)^(a_i)"));

  sh = {};
  sh.kind = InputKind::list;
  sh.max_n = 3;
  sh.weights = WeightRule::ge1;
  sh.needs_m_pow = true;
  sh.needs_l_pow = true;
  c.push_back(mk("L33", "Cor 3.3, Eq. (3.3)", "M = max ‖K_i‖∞",
                 sh, {R_}, LawMode::scalar_chain,
                 "r(o K_i^(a_i)) <= b r(o K_i^(b_i)) <= "
                 "b r(o (K_i^m)^(b_i))^(1/m) <= b r(o (K_i^{ml})^(b_i))^(1/ml) "
                 "<= b prod r(K_i)^(b_i)"));

  sh = {};
  sh.kind = InputKind::list;
  sh.max_n = 3;
  sh.weights = WeightRule::ge1;
  sh.needs_m_pow = true;
  sh.needs_l_pow = true;
  c.push_back(mk("L34", "Thm 3.4, Eq. (3.4)", "hold also under the condition",
                 sh, {R_}, LawMode::scalar_chain,
                 "r(o K_i^(a_i)) <= r(o (K_i^m)^(a_i))^(1/m) <= "
                 "r(o (K_i^{ml})^(a_i))^(1/ml) <= "
                 "r(o (K_i^{ml})^(b_i))^(s/ml) <= prod r(K_i)^(a_i)"));

  sh = {};
  sh.kind = InputKind::list;
  sh.max_n = 3;
  sh.weights = WeightRule::ge1;
  sh.needs_m_pow = true;
  sh.needs_l_pow = true;
  c.push_back(mk("L35", "Thm 3.4, Eq. (3.5)", "hold also under the condition",
                 sh, {R_}, LawMode::scalar_chain,
                 "r(o K_i^(a_i)) <= r(o (K_i^m)^(a_i))^(1/m) <= "
                 "r(o (K_i^m)^(b_i))^(s/m) <= r(o (K_i^{ml})^(b_i))^(s/ml) <= "
                 "prod r(K_i)^(a_i)"));

  sh = {};
  sh.kind = InputKind::perm_family;
  sh.parity = MParity::even;
  sh.needs_tau = true;
  sh.needs_nu = true;
  sh.alpha = AlphaRule::ge_inv_m;
  c.push_back(mk("L36", "Thm 3.5, Eqs. (3.6)-(3.7)", "Let m be even", sh,
                 {O2}, LawMode::scalar_chain,
                 "|o H_i^(a)| <= r(o A_j^(a))^(1/2) <= r(o P_i^(a))^(1/2m) <= "
                 "r(A_{v(1)}...A_{v(m)})^(a/2)"));

  sh = {};
  sh.kind = InputKind::perm_family;
  sh.parity = MParity::even;
  sh.needs_tau = true;
  sh.needs_mix = true;
  sh.alpha = AlphaRule::ge_inv_m;
  c.push_back(mk("L37", "Cor 3.6", "By interchanging H_i with H_i^*", sh,
                 {O2}, LawMode::scalar_chain,
                 "|o H_i^(a)| <= r(o B_j^(a))^(1/2); "
                 "|o H_i^(a)| <= r(o A_j^(a))^(b/2) r(o B_j^(a))^((1-b)/2)"));

  sh = {};
  sh.kind = InputKind::perm_family;
  sh.parity = MParity::even;
  sh.needs_tau = true;
  sh.alpha = AlphaRule::ge_2_over_m;
  c.push_back(mk("L38", "Thm 3.8, Eq. (3.8)",
                 "Let m be even, α ≥ 2/m", sh, {O2},
                 LawMode::scalar_chain,
                 "|o H_i^(a)| <= r(o_{j<=m} A_j^(a))^(1/2) <= "
                 "r(o_{j<=m/2} A_j^(a)) <= r(o S_i^(a))^(2/m) <= "
                 "r(H*_{t(1)}H_{t(2)}...)^a"));

  sh = {};
  sh.kind = InputKind::perm_family;
  sh.parity = MParity::even;
  sh.needs_tau = true;
  sh.needs_mix = true;
  sh.alpha = AlphaRule::ge_2_over_m;
  c.push_back(mk("L39", "Cor 3.9, Eq. (3.9)",
                 "T_i = B_i ⋯ B_{m/2} B_1 ⋯ B_{i-1}", sh, {O2},
                 LawMode::scalar_chain,
                 "|o H_i^(a)| <= r(o A^(a))^(b/2) r(o B^(a))^((1-b)/2) <= ... "
                 "<= r(S_1)^(ab) r(T_1)^(a(1-b))"));

  sh = {};
  sh.kind = InputKind::perm_family;
  sh.needs_tau = true;
  sh.needs_nu = true;
  sh.alpha = AlphaRule::ge_inv_m;
  c.push_back(mk("L40", "Thm 3.10, Eqs. (3.10)-(3.11)",
                 "Q_j = H*_{τ(j)} H_{ν(j)}", sh, {O2},
                 LawMode::scalar_chain,
                 "|o H_i^(a)| <= r(o (H*_{t(j)}H_{v(j)})^(a))^(1/2) <= "
                 "r(o Q_j^(a))^(1/2m) <= r(Q_1)^(a/2)"));

  sh = {};
  sh.kind = InputKind::perm_family;
  sh.parity = MParity::odd;
  sh.max_n = 3;
  sh.alpha = AlphaRule::ge_inv_m;
  c.push_back(mk("L41", "Cor 3.11, Eqs. (3.12)-(3.13)", "Let m be odd", sh,
                 {O2}, LawMode::scalar_chain,
                 "|o H_i^(a)| <= r((H_1*H_2)^(a) o ... o (H_{m-1}*H_m)^(a))"
                 "^(1/2) <= r(H_1*H_2 ... H_{m-1}*H_m)^(a/2)"));

  sh = {};
  sh.kind = InputKind::two;
  sh.alpha = AlphaRule::ge_third;
  c.push_back(mk("L42", "Cor 3.12, Eqs. (3.14)-(3.15)",
                 "Jordan triple product ABA", sh, {O2}, LawMode::scalar_chain,
                 "|A^(a) o (B*)^(a) o A^(a)| <= r^(1/2)(...) <= r^(1/6)(...) "
                 "<= |ABA|^a"));

  sh = {};
  sh.kind = InputKind::single;
  sh.alpha = AlphaRule::ge_half;
  c.push_back(mk("L43", "Lemma 3.13", "let C be a nonnegative matrix", sh,
                 {R_}, LawMode::scalar_chain,
                 "r(C^(a) o (C*)^(a)) <= r(C^(a) o C^(a)) <= r(C)^(2a)"));

  sh = {};
  sh.kind = InputKind::two;
  sh.alpha = AlphaRule::ge_half;
  c.push_back(mk("L44", "Cor 3.14, Eq. (3.16)",
                 "Let α ≥ 1/2 and let A and B", sh, {O2},
                 LawMode::scalar_chain,
                 "|A^(a) o B^(a)| <= r((A*B)^(a) o (B*A)^(a))^(1/2) <= "
                 "r((A*B)^(a) o (A*B)^(a))^(1/2) <= r(A*B)^a"));

  return c;
}

// ---- chain assembly ----

struct Chain {
  std::vector<std::string> labels;
  std::vector<CertifiedValue> cvs;
  std::vector<std::size_t> segs{0};

  void add(std::string label, const CertifiedValue& cv) {
    labels.push_back(std::move(label));
    cvs.push_back(cv);
  }
  void seg() { segs.push_back(labels.size()); }
};

LawReport finalize_scalar(const LawSpec& spec, const LawInput& input,
                          Chain&& ch, const EvalOptions& opts) {
  LawReport rep;
  rep.law_id = spec.id;
  rep.mode = LawMode::scalar_chain;
  rep.functional = input.functional;
  rep.labels = std::move(ch.labels);
  rep.segment_starts = std::move(ch.segs);
  rep.values.reserve(ch.cvs.size());
  rep.widths.reserve(ch.cvs.size());
  for (const CertifiedValue& cv : ch.cvs) {
    rep.values.push_back(cv.value);
    rep.widths.push_back(cv.width());
    rep.slack_used += cv.width();
  }
  rep.pass = check_report(rep, opts.rtol, opts.atol, &rep.failing_link);
  return rep;
}

struct EwChain {
  std::vector<std::string> labels;
  std::vector<double> gaps;
  std::vector<double> scales;

  void add(std::string label, const NonnegMatrix& lhs,
           const NonnegMatrix& rhs) {
    const EntrywiseCmp c = entrywise_leq(lhs, rhs, 0.0, 0.0);
    labels.push_back(std::move(label));
    gaps.push_back(c.worst_gap);
    scales.push_back(std::max(max_entry(lhs), max_entry(rhs)));
  }
};

LawReport finalize_entrywise(const LawSpec& spec, const LawInput& input,
                             EwChain&& ch, const EvalOptions& opts) {
  LawReport rep;
  rep.law_id = spec.id;
  rep.mode = LawMode::entrywise;
  rep.functional = input.functional;
  rep.labels = std::move(ch.labels);
  rep.values = std::move(ch.gaps);
  rep.scales = std::move(ch.scales);
  rep.pass = check_report(rep, opts.rtol, opts.atol, &rep.failing_link);
  return rep;
}

// ---- shared pieces ----

NonnegMatrix prod(const std::vector<NonnegMatrix>& v) {
  NonnegMatrix p = v.front();
  for (std::size_t i = 1; i < v.size(); ++i) p = matmul(p, v[i]);
  return p;
}

NonnegMatrix prod_rev(const std::vector<NonnegMatrix>& v) {
  NonnegMatrix p = v.back();
  for (std::size_t i = v.size() - 1; i-- > 0;) p = matmul(p, v[i]);
  return p;
}

NonnegMatrix msum(const std::vector<NonnegMatrix>& v) {
  return linear_comb(std::vector<double>(v.size(), 1.0), v);
}

std::vector<NonnegMatrix> map_pow(const std::vector<NonnegMatrix>& v, long k) {
  std::vector<NonnegMatrix> out;
  out.reserve(v.size());
  for (const auto& m : v) out.push_back(matpow(m, k));
  return out;
}

std::vector<std::vector<NonnegMatrix>> as_grid(const LawInput& in) {
  std::vector<std::vector<NonnegMatrix>> g;
  g.reserve(in.grid_rows);
  for (int r = 0; r < in.grid_rows; ++r) {
    std::vector<NonnegMatrix> row;
    row.reserve(in.grid_cols);
    for (int c = 0; c < in.grid_cols; ++c)
      row.push_back(in.matrices[static_cast<std::size_t>(r) * in.grid_cols + c]);
    g.push_back(std::move(row));
  }
  return g;
}

std::vector<NonnegMatrix> diag_family_matrices(const LawInput& in) {
  const NonnegMatrix& k = in.matrices.front();
  const int n = k.dim();
  std::vector<NonnegMatrix> out;
  out.reserve(in.diag_perturbations.size());
  for (const auto& d : in.diag_perturbations) {
    std::vector<double> e = k.entries();
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] += d[i];
    out.push_back(NonnegMatrix::from_entries(n, std::move(e)));
  }
  return out;
}

// L41 permutations from the odd-m corollary (1-based formulas).
Permutation odd_tau(int m) {
  std::vector<int> img(m);
  for (int j = 1; j <= (m + 1) / 2; ++j) img[j - 1] = 2 * j - 1;
  for (int j = (m + 3) / 2; j <= m; ++j) img[j - 1] = 2 * (j - (m + 1) / 2);
  return Permutation::from_image(img);
}

Permutation odd_nu(int m) {
  std::vector<int> img(m);
  for (int j = 1; j <= (m - 1) / 2; ++j) img[j - 1] = 2 * j;
  for (int j = (m + 1) / 2; j <= m; ++j)
    img[j - 1] = 2 * (j - (m - 1) / 2) - 1;
  return Permutation::from_image(img);
}

Weights flat_weights(int m, double alpha) {
  return Weights::of(std::vector<double>(m, alpha));
}

std::string fmt_alpha_label(double a) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "f_rho(a=%.4f)", a);
  return buf;
}

}  // namespace

const std::vector<LawSpec>& catalog() {
  static const std::vector<LawSpec> c = build_catalog();
  return c;
}

const LawSpec& law_by_id(const std::string& id) {
  for (const LawSpec& s : catalog())
    if (s.id == id) return s;
  raise(errc::unknown_law, "unknown law id '" + id + "'");
}

std::string shape_summary(const InputShape& sh) {
  std::string out;
  switch (sh.kind) {
    case InputKind::single: out = "one matrix"; break;
    case InputKind::two: out = "two matrices"; break;
    case InputKind::list:
      out = "n in [" + std::to_string(sh.min_n) + "," +
            std::to_string(sh.max_n) + "] matrices";
      break;
    case InputKind::pair_list: out = "m pairs (f_i, g_i)"; break;
    case InputKind::grid: out = "l x n grid of matrices"; break;
    case InputKind::diag_family:
      out = "base matrix + diagonal perturbations";
      break;
    case InputKind::perm_family:
      out = "family of m operators";
      if (sh.parity == MParity::even) out += ", m even";
      if (sh.parity == MParity::odd) out += ", m odd";
      break;
  }
  switch (sh.weights) {
    case WeightRule::none: break;
    case WeightRule::convex: out += "; convex weights"; break;
    case WeightRule::ge1: out += "; weights with s_n >= 1"; break;
    case WeightRule::convex_or_ge1: out += "; weights with s_n >= 1 (s_n = 1 for w)"; break;
  }
  switch (sh.alpha) {
    case AlphaRule::none: break;
    case AlphaRule::unit: out += "; alpha in [0,1]"; break;
    case AlphaRule::pair_ge1: out += "; alpha + beta >= 1"; break;
    case AlphaRule::unit_or_pair:
      out += "; alpha in [0,1] or alpha + beta >= 1";
      break;
    case AlphaRule::ge_inv_m: out += "; alpha >= 1/m"; break;
    case AlphaRule::ge_2_over_m: out += "; alpha >= 2/m"; break;
    case AlphaRule::ge_half: out += "; alpha >= 1/2"; break;
    case AlphaRule::ge_third: out += "; alpha >= 1/3"; break;
  }
  if (sh.needs_t) out += "; t >= 1";
  if (sh.needs_m_pow) out += "; power m";
  if (sh.needs_l_pow) out += "; power l";
  if (sh.needs_tau) out += "; tau";
  if (sh.needs_nu) out += "; nu";
  if (sh.needs_mix) out += "; mixing exponent in [0,1]";
  if (sh.needs_depth) out += "; depth";
  if (sh.needs_gridsize) out += "; odd gridsize";
  if (sh.zero_diag_filter) out += "; zero mean diagonal required";
  return out;
}

void validate_input(const LawSpec& spec, const LawInput& in) {
  const InputShape& sh = spec.shape;
  auto fail = [&](const std::string& msg) {
    raise(errc::input_shape_mismatch, spec.id + ": " + msg);
  };
  if (in.matrices.empty()) fail("no matrices");
  const int dim = in.matrices.front().dim();
  for (const auto& m : in.matrices)
    if (m.dim() != dim) fail("mixed matrix dimensions");

  const int count = static_cast<int>(in.matrices.size());
  int family_m = count;
  switch (sh.kind) {
    case InputKind::single:
      if (count != 1) fail("expects one matrix");
      break;
    case InputKind::two:
      if (count != 2) fail("expects two matrices");
      break;
    case InputKind::list:
      break;
    case InputKind::pair_list:
      if (count % 2 != 0) fail("expects matrices in (f_i, g_i) pairs");
      break;
    case InputKind::grid:
      if (in.grid_rows < 1 || in.grid_cols < 1 ||
          in.grid_rows * in.grid_cols != count)
        fail("grid dimensions do not match the matrix count");
      break;
    case InputKind::diag_family:
      if (count != 1) fail("expects one base matrix");
      if (in.diag_perturbations.empty()) fail("needs diagonal perturbations");
      for (const auto& d : in.diag_perturbations) {
        if (static_cast<int>(d.size()) != dim)
          fail("diagonal perturbation length mismatch");
        for (int i = 0; i < dim; ++i)
          if (in.matrices[0](i, i) + d[i] < 0.0)
            fail("K + D_i has a negative diagonal entry");
      }
      break;
    case InputKind::perm_family:
      if (sh.parity == MParity::even && count % 2 != 0)
        raise(errc::odd_m, spec.id + ": needs even m");
      if (sh.parity == MParity::odd && count % 2 == 0)
        fail("needs odd m");
      break;
  }

  int weight_count = count;
  if (sh.kind == InputKind::grid) weight_count = in.grid_cols;
  if (sh.kind == InputKind::diag_family)
    weight_count = static_cast<int>(in.diag_perturbations.size());
  if (sh.weights != WeightRule::none) {
    if (!in.weights.has_value()) fail("needs weights");
    if (in.weights->size() != weight_count) fail("weight count mismatch");
    const double s = in.weights->s_n;
    const bool w_func = in.functional == Functional::numerical_radius;
    switch (sh.weights) {
      case WeightRule::convex:
        if (std::fabs(s - 1.0) > 1e-9) fail("weights must sum to 1");
        break;
      case WeightRule::ge1:
        if (s < 1.0 - 1e-12) fail("weights must have s_n >= 1");
        break;
      case WeightRule::convex_or_ge1:
        if (s < 1.0 - 1e-12) fail("weights must have s_n >= 1");
        if (sh.w_requires_convex && w_func && std::fabs(s - 1.0) > 1e-9)
          fail("numerical radius admissible only for convex weights");
        break;
      case WeightRule::none:
        break;
    }
  }

  if (spec.mode == LawMode::scalar_chain) {
    bool ok = false;
    for (Functional f : spec.functionals) ok = ok || f == in.functional;
    if (!ok)
      fail(std::string("functional '") + functional_name(in.functional) +
           "' is not admissible");
  }

  switch (sh.alpha) {
    case AlphaRule::none:
      break;
    case AlphaRule::unit:
      if (in.alpha < 0.0 || in.alpha > 1.0) fail("alpha must lie in [0,1]");
      break;
    case AlphaRule::pair_ge1:
      if (!in.beta.has_value()) fail("needs beta");
      if (in.alpha < 0.0 || *in.beta < 0.0 ||
          in.alpha + *in.beta < 1.0 - 1e-12)
        fail("needs alpha, beta >= 0 with alpha + beta >= 1");
      break;
    case AlphaRule::unit_or_pair:
      if (in.beta.has_value()) {
        if (in.alpha < 0.0 || *in.beta < 0.0 ||
            in.alpha + *in.beta < 1.0 - 1e-12)
          fail("needs alpha, beta >= 0 with alpha + beta >= 1");
      } else if (in.alpha < 0.0 || in.alpha > 1.0) {
        fail("alpha must lie in [0,1]");
      }
      break;
    case AlphaRule::ge_inv_m:
      if (in.alpha < 1.0 / family_m - 1e-12) fail("needs alpha >= 1/m");
      break;
    case AlphaRule::ge_2_over_m:
      if (in.alpha < 2.0 / family_m - 1e-12) fail("needs alpha >= 2/m");
      break;
    case AlphaRule::ge_half:
      if (in.alpha < 0.5 - 1e-12) fail("needs alpha >= 1/2");
      break;
    case AlphaRule::ge_third:
      if (in.alpha < 1.0 / 3.0 - 1e-12) fail("needs alpha >= 1/3");
      break;
  }

  if (sh.needs_t && !(in.t >= 1.0)) fail("needs t >= 1");
  if (sh.needs_m_pow && in.m_pow < 1) fail("needs m >= 1");
  if (sh.needs_l_pow && in.l_pow < 1) fail("needs l >= 1");
  if (sh.needs_tau) {
    if (!in.tau.has_value())
      raise(errc::missing_permutation, spec.id + ": needs tau");
    if (in.tau->size() != family_m) fail("tau size mismatch");
  }
  if (sh.needs_nu) {
    if (!in.nu.has_value())
      raise(errc::missing_permutation, spec.id + ": needs nu");
    if (in.nu->size() != family_m) fail("nu size mismatch");
  }
  if (sh.needs_depth && in.depth < 0) fail("needs depth >= 0");
  if (sh.needs_gridsize && (in.gridsize < 3 || in.gridsize % 2 == 0))
    fail("needs odd gridsize >= 3");

  if (sh.zero_diag_filter) {
    const GridBundle gb = grid_bundle(as_grid(in), *in.weights);
    const NonnegMatrix mean = weighted_gmean(gb.H_list, *in.weights);
    for (int i = 0; i < mean.dim(); ++i)
      if (mean(i, i) != 0.0)
        fail("hypothesis requires a zero mean diagonal");
  }
}

LawReport evaluate_law(const std::string& id, const LawInput& in,
                       const EvalOptions& opts) {
  const LawSpec& spec = law_by_id(id);
  validate_input(spec, in);

  const auto F = [&](const NonnegMatrix& m) {
    return evaluate_certified(in.functional, m, opts.spectral);
  };
  const auto R = [&](const NonnegMatrix& m) {
    return evaluate_certified(Functional::spectral_radius, m, opts.spectral);
  };
  const auto N2 = [&](const NonnegMatrix& m) {
    return op_norm_certified(m, PNorm::two, opts.spectral);
  };
  const double a = in.alpha;
  const double b = in.beta.value_or(1.0 - in.alpha);

  Chain ch;
  EwChain ew;

  if (id == "L01") {
    const Weights& w = *in.weights;
    ch.add("rho(o K_i^(a_i))", F(weighted_gmean(in.matrices, w)));
    CertifiedValue rhs = cv_exact(1.0);
    for (std::size_t i = 0; i < in.matrices.size(); ++i)
      rhs = cv_mul(rhs, cv_pow(F(in.matrices[i]), w.alphas[i]));
    ch.add("prod_i rho(K_i)^(a_i)", rhs);
  } else if (id == "L02") {
    const GridBundle gb = grid_bundle(as_grid(in), *in.weights);
    ew.add("H <= o (K_{1i}...K_{li})^(a_i)", gb.H,
           weighted_gmean(gb.H_list, *in.weights));
  } else if (id == "L03") {
    const GridBundle gb = grid_bundle(as_grid(in), *in.weights);
    ch.add("rho(H)", F(gb.H));
    ch.add("rho(o col-prods^(a_i))", F(weighted_gmean(gb.H_list, *in.weights)));
    CertifiedValue rhs = cv_exact(1.0);
    for (std::size_t i = 0; i < gb.H_list.size(); ++i)
      rhs = cv_mul(rhs, cv_pow(F(gb.H_list[i]), in.weights->alphas[i]));
    ch.add("prod_i rho(col-prod_i)^(a_i)", rhs);
  } else if (id == "L04") {
    ch.add("max_entry(K)", cv_exact(max_entry(in.matrices[0])));
    ch.add("|K|", F(in.matrices[0]));
  } else if (id == "L05") {
    std::vector<NonnegMatrix> powered;
    powered.reserve(in.matrices.size());
    for (const auto& m : in.matrices)
      powered.push_back(hadamard_power(m, in.t));
    ew.add("K_1^(t)...K_n^(t) <= (K_1...K_n)^(t)", prod(powered),
           hadamard_power(prod(in.matrices), in.t));
  } else if (id == "L06") {
    std::vector<NonnegMatrix> powered;
    powered.reserve(in.matrices.size());
    for (const auto& m : in.matrices)
      powered.push_back(hadamard_power(m, in.t));
    ch.add("rho(K_1^(t)...K_n^(t))", F(prod(powered)));
    ch.add("rho(K_1...K_n)^t", cv_pow(F(prod(in.matrices)), in.t));
  } else if (id == "L07") {
    const Weights& w = *in.weights;
    const NonnegMatrix g = weighted_gmean(in.matrices, w);
    const NonnegMatrix cm = c_matrix(in.matrices, w);
    const NonnegMatrix am = linear_comb(w.alphas, in.matrices);
    ew.add("GM <= C", g, cm);
    ew.add("C <= AM", cm, am);
  } else if (id == "L08") {
    const Weights& w = *in.weights;
    ch.add("r(C(K_1..K_n, a))", R(c_matrix(in.matrices, w)));
    CertifiedValue rhs = cv_exact(0.0);
    for (std::size_t i = 0; i < in.matrices.size(); ++i)
      rhs = cv_add(rhs, cv_scale(R(in.matrices[i]), w.alphas[i]));
    ch.add("sum_i a_i r(K_i)", rhs);
  } else if (id == "L09") {
    const Weights& w = *in.weights;
    const std::vector<NonnegMatrix> mats = diag_family_matrices(in);
    ch.add("r(sum a_i (K+D_i))", R(linear_comb(w.alphas, mats)));
    CertifiedValue rhs = cv_exact(0.0);
    for (std::size_t i = 0; i < mats.size(); ++i)
      rhs = cv_add(rhs, cv_scale(R(mats[i]), w.alphas[i]));
    ch.add("sum_i a_i r(K+D_i)", rhs);
  } else if (id == "L10") {
    const std::size_t m = in.matrices.size() / 2;
    NonnegMatrix lhs = NonnegMatrix::zero(in.matrices[0].dim());
    std::vector<NonnegMatrix> fs(in.matrices.begin(),
                                 in.matrices.begin() + m);
    std::vector<NonnegMatrix> gs(in.matrices.begin() + m, in.matrices.end());
    for (std::size_t i = 0; i < m; ++i)
      lhs = linear_comb({1.0, 1.0},
                        {lhs, hadamard_product(hadamard_power(fs[i], a),
                                               hadamard_power(gs[i], b))});
    const NonnegMatrix rhs = hadamard_product(
        hadamard_power(msum(fs), a), hadamard_power(msum(gs), b));
    ew.add("sum f_i^(a) o g_i^(b) <= (sum f)^(a) o (sum g)^(b)", lhs, rhs);
  } else if (id == "L11" || id == "L12" || id == "L13") {
    const Weights& w = *in.weights;
    const GridBundle gb = grid_bundle(as_grid(in), w);
    const Weights bw = Weights::of(w.betas);
    std::vector<CertifiedValue> fh;
    fh.reserve(gb.H_list.size());
    for (const auto& hi : gb.H_list) fh.push_back(F(hi));
    ch.add(id == "L13" ? "d(H)" : "rho(H)", F(gb.H));
    ch.add("(o H_i^(a_i))", F(weighted_gmean(gb.H_list, w)));
    ch.add("b * (o H_i^(b_i))",
           cv_scale(F(weighted_gmean(gb.H_list, bw)), gb.beta));
    if (id == "L11") {
      CertifiedValue t4 = cv_exact(1.0);
      for (std::size_t i = 0; i < fh.size(); ++i)
        t4 = cv_mul(t4, cv_pow(fh[i], bw.alphas[i]));
      ch.add("b * prod rho(H_i)^(b_i)", cv_scale(t4, gb.beta));
      CertifiedValue t5 = cv_exact(0.0);
      for (std::size_t i = 0; i < fh.size(); ++i)
        t5 = cv_add(t5, cv_scale(fh[i], bw.alphas[i]));
      ch.add("b * sum b_i rho(H_i)", cv_scale(t5, gb.beta));
      CertifiedValue t6 = cv_exact(0.0);
      for (std::size_t i = 0; i < fh.size(); ++i)
        t6 = cv_add(t6, cv_scale(fh[i], w.alphas[i]));
      ch.add("b * sum a_i rho(H_i)", cv_scale(t6, gb.beta));
    } else if (id == "L12") {
      ch.add("b * rho(C(H_1..H_n, b))",
             cv_scale(F(c_matrix(gb.H_list, bw)), gb.beta));
      CertifiedValue t5 = cv_exact(0.0);
      for (std::size_t i = 0; i < fh.size(); ++i)
        t5 = cv_add(t5, cv_scale(fh[i], bw.alphas[i]));
      ch.add("b * sum b_i rho(H_i)", cv_scale(t5, gb.beta));
    } else {
      ch.add("b * d(C(H_1..H_n, b))",
             cv_scale(F(c_matrix(gb.H_list, bw)), gb.beta));
      ch.add("b * d(sum b_i H_i)",
             cv_scale(F(linear_comb(bw.alphas, gb.H_list)), gb.beta));
      CertifiedValue t6 = cv_exact(0.0);
      for (std::size_t i = 0; i < fh.size(); ++i)
        t6 = cv_add(t6, cv_scale(fh[i], bw.alphas[i]));
      ch.add("b * sum b_i d(H_i)", cv_scale(t6, gb.beta));
    }
  } else if (id == "L14") {
    const Weights& w = *in.weights;
    const GridBundle gb = grid_bundle(as_grid(in), w);
    ch.add("r(H)", R(gb.H));
    ch.add("r(o H_i^(a_i))", R(weighted_gmean(gb.H_list, w)));
    ch.add("(m-1) * delta",
           cv_exact((in.matrices[0].dim() - 1) * gb.delta));
  } else if (id == "L15" || id == "L19") {
    const double be = (id == "L15") ? 1.0 - a : b;
    std::vector<NonnegMatrix> syms;
    syms.reserve(in.matrices.size());
    for (const auto& m : in.matrices) syms.push_back(sym(m, a, be));
    const NonnegMatrix pf = prod(in.matrices);
    const NonnegMatrix pr = prod_rev(in.matrices);
    ch.add("rho(S(K_1)...S(K_n))", F(prod(syms)));
    ch.add("rho((K_1..K_n)^(a) o ((K_n..K_1)*)^(b))",
           F(hadamard_product(hadamard_power(pf, a),
                              hadamard_power(transpose(pr), be))));
    ch.add("rho(K_1..K_n)^a rho(K_n..K_1)^b",
           cv_mul(cv_pow(F(pf), a), cv_pow(F(pr), be)));
  } else if (id == "L16") {
    std::vector<NonnegMatrix> syms;
    syms.reserve(in.matrices.size());
    for (const auto& m : in.matrices) syms.push_back(sym(m, a, 1.0 - a));
    const NonnegMatrix total = msum(in.matrices);
    ch.add("rho(sum S_a(K_i))", F(msum(syms)));
    ch.add("rho(S_a(sum K_i))", F(sym(total, a, 1.0 - a)));
    ch.add("rho(sum K_i)", F(total));
  } else if (id == "L17") {
    ch.add("rho(S_a(K))", F(sym(in.matrices[0], a, 1.0 - a)));
    ch.add("rho(K)", F(in.matrices[0]));
  } else if (id == "L18") {
    const NonnegMatrix& k1 = in.matrices[0];
    const NonnegMatrix& k2 = in.matrices[1];
    const NonnegMatrix p12 = matmul(k1, k2);
    const NonnegMatrix p21 = matmul(k2, k1);
    ch.add("r(S_a(K_1) S_a(K_2))",
           R(matmul(sym(k1, a, 1.0 - a), sym(k2, a, 1.0 - a))));
    ch.add("r((K_1K_2)^(a) o ((K_2K_1)*)^(1-a))",
           R(hadamard_product(hadamard_power(p12, a),
                              hadamard_power(transpose(p21), 1.0 - a))));
    ch.add("r(K_1K_2)", R(p12));
  } else if (id == "L20") {
    ch.add("rho(S_ab(K))", F(sym(in.matrices[0], a, b)));
    ch.add("rho(K)^(a+b)", cv_pow(F(in.matrices[0]), a + b));
  } else if (id == "L21") {
    std::vector<NonnegMatrix> syms;
    syms.reserve(in.matrices.size());
    for (const auto& m : in.matrices) syms.push_back(sym(m, a, b));
    const NonnegMatrix total = msum(in.matrices);
    ch.add("rho(sum S_ab(K_i))", F(msum(syms)));
    ch.add("rho(S_ab(sum K_i))", F(sym(total, a, b)));
    ch.add("rho(sum K_i)^(a+b)", cv_pow(F(total), a + b));
  } else if (id == "L22") {
    const NonnegMatrix p12 = matmul(in.matrices[0], in.matrices[1]);
    ch.add("r(S_ab(K_1) S_ab(K_2))",
           R(matmul(sym(in.matrices[0], a, b), sym(in.matrices[1], a, b))));
    ch.add("r(K_1K_2)^(a+b)", cv_pow(R(p12), a + b));
  } else if (id == "L23") {
    std::vector<NonnegMatrix> syms;
    syms.reserve(in.matrices.size());
    for (const auto& m : in.matrices) syms.push_back(sym(m, a, b));
    const NonnegMatrix pf = prod(in.matrices);
    const NonnegMatrix pr = prod_rev(in.matrices);
    const double delta =
        pow0(std::max(max_entry(pf), max_entry(pr)), a + b - 1.0);
    const double ar = a / (a + b), br = b / (a + b);
    ch.add("r(S_ab(K_1)...S_ab(K_n))", R(prod(syms)));
    ch.add("r(prod^(a) o (rev*)^(b))",
           R(hadamard_product(hadamard_power(pf, a),
                              hadamard_power(transpose(pr), b))));
    ch.add("d * r(prod^(a/(a+b)) o (rev*)^(b/(a+b)))",
           cv_scale(R(hadamard_product(hadamard_power(pf, ar),
                                       hadamard_power(transpose(pr), br))),
                    delta));
    ch.add("d * r(prod)^(a/(a+b)) r(rev)^(b/(a+b))",
           cv_scale(cv_mul(cv_pow(R(pf), ar), cv_pow(R(pr), br)), delta));
  } else if (id == "L24") {
    const NonnegMatrix& k = in.matrices[0];
    const double c = pow0(max_entry(k), a + b - 1.0);
    const double ar = a / (a + b);
    ch.add("rho(S_ab(K))", F(sym(k, a, b)));
    ch.add("|K|inf^(a+b-1) rho(S_{a/(a+b)}(K))",
           cv_scale(F(sym(k, ar, 1.0 - ar)), c));
    ch.add("|K|inf^(a+b-1) rho(K)", cv_scale(F(k), c));
  } else if (id == "L25") {
    std::vector<NonnegMatrix> syms;
    syms.reserve(in.matrices.size());
    for (const auto& m : in.matrices) syms.push_back(sym(m, a, b));
    const NonnegMatrix total = msum(in.matrices);
    const double c = pow0(max_entry(total), a + b - 1.0);
    const double ar = a / (a + b);
    ch.add("rho(sum S_ab(K_i))", F(msum(syms)));
    ch.add("rho(S_ab(sum K_i))", F(sym(total, a, b)));
    ch.add("|sum|inf^(a+b-1) rho(S_{a/(a+b)}(sum))",
           cv_scale(F(sym(total, ar, 1.0 - ar)), c));
    ch.add("|sum|inf^(a+b-1) rho(sum K_i)", cv_scale(F(total), c));
  } else if (id == "L26") {
    const NonnegMatrix p12 = matmul(in.matrices[0], in.matrices[1]);
    const NonnegMatrix p21 = matmul(in.matrices[1], in.matrices[0]);
    const double c =
        pow0(std::max(max_entry(p12), max_entry(p21)), a + b - 1.0);
    const double ar = a / (a + b), br = b / (a + b);
    ch.add("r(S_ab(K_1) S_ab(K_2))",
           R(matmul(sym(in.matrices[0], a, b), sym(in.matrices[1], a, b))));
    ch.add("r((K_1K_2)^(a) o ((K_2K_1)*)^(b))",
           R(hadamard_product(hadamard_power(p12, a),
                              hadamard_power(transpose(p21), b))));
    ch.add("d * r((K_1K_2)^(a/(a+b)) o ((K_2K_1)*)^(b/(a+b)))",
           cv_scale(R(hadamard_product(hadamard_power(p12, ar),
                                       hadamard_power(transpose(p21), br))),
                    c));
    ch.add("d * r(K_1K_2)", cv_scale(R(p12), c));
  } else if (id == "L27") {
    const NonnegMatrix& k = in.matrices[0];
    const NonnegMatrix k2 = matpow(k, 2);
    if (a <= 1.0) {  // the one-parameter form needs alpha in [0,1]
      const NonnegMatrix sa = sym(k, a, 1.0 - a);
      ew.add("S_a(K)^2 <= S_a(K^2)", matmul(sa, sa), sym(k2, a, 1.0 - a));
    }
    const NonnegMatrix sab = sym(k, a, b);
    ew.add("S_ab(K)^2 <= S_ab(K^2)", matmul(sab, sab), sym(k2, a, b));
  } else if (id == "L28") {
    const RefinementSequence rs = refinement_sequence(
        in.matrices[0], a, in.beta, in.depth, Functional::spectral_radius,
        opts.spectral);
    for (std::size_t n = 0; n < rs.certified.size(); ++n) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "rho_%zu", n);
      ch.add(buf, rs.certified[n]);
    }
    ch.add("cap", rs.cap_certified);
  } else if (id == "L29") {
    const NonnegMatrix kn = matpow(in.matrices[0], in.m_pow);
    const double inv = 1.0 / in.m_pow;
    ch.add("rho(S(K^n))^(1/n)", cv_pow(F(sym_half(kn)), inv));
    ch.add("rho(S_a(K^n))^(1/n)", cv_pow(F(sym(kn, a, 1.0 - a)), inv));
    ch.add("rho(K)", F(in.matrices[0]));
  } else if (id == "L30") {
    const AlphaProfile prof =
        alpha_profile(in.matrices[0], in.functional, in.gridsize,
                      opts.spectral);
    const int mid = (in.gridsize - 1) / 2;
    for (int j = mid; j >= 0; --j)
      ch.add(fmt_alpha_label(prof.grid[j]), prof.certified[j]);
    ch.seg();
    for (int j = mid; j < in.gridsize; ++j)
      ch.add(fmt_alpha_label(prof.grid[j]), prof.certified[j]);
  } else if (id == "L31" || id == "L32") {
    const Weights& w = *in.weights;
    const long m = in.m_pow;
    ch.add("r(o K_i^(a_i))", R(weighted_gmean(in.matrices, w)));
    ch.add("r(o (K_i^m)^(a_i))^(1/m)",
           cv_pow(R(weighted_gmean(map_pow(in.matrices, m), w)), 1.0 / m));
    if (id == "L32") {
      const long ml = m * in.l_pow;
      ch.add("r(o (K_i^{ml})^(a_i))^(1/ml)",
             cv_pow(R(weighted_gmean(map_pow(in.matrices, ml), w)), 1.0 / ml));
    }
    CertifiedValue rhs = cv_exact(1.0);
    for (std::size_t i = 0; i < in.matrices.size(); ++i)
      rhs = cv_mul(rhs, cv_pow(R(in.matrices[i]), w.alphas[i]));
    ch.add("prod_i r(K_i)^(a_i)", rhs);
  } else if (id == "L33") {
    const Weights& w = *in.weights;
    const Weights bw = Weights::of(w.betas);
    double bigm = 0.0;
    for (const auto& m : in.matrices) bigm = std::max(bigm, max_entry(m));
    const double beta = pow0(bigm, w.beta_scale_exponent);
    const long m = in.m_pow, ml = static_cast<long>(in.m_pow) * in.l_pow;
    ch.add("r(o K_i^(a_i))", R(weighted_gmean(in.matrices, w)));
    ch.add("b r(o K_i^(b_i))",
           cv_scale(R(weighted_gmean(in.matrices, bw)), beta));
    ch.add("b r(o (K_i^m)^(b_i))^(1/m)",
           cv_scale(cv_pow(R(weighted_gmean(map_pow(in.matrices, m), bw)),
                           1.0 / m),
                    beta));
    ch.add("b r(o (K_i^{ml})^(b_i))^(1/ml)",
           cv_scale(cv_pow(R(weighted_gmean(map_pow(in.matrices, ml), bw)),
                           1.0 / ml),
                    beta));
    CertifiedValue rhs = cv_exact(1.0);
    for (std::size_t i = 0; i < in.matrices.size(); ++i)
      rhs = cv_mul(rhs, cv_pow(R(in.matrices[i]), bw.alphas[i]));
    ch.add("b prod_i r(K_i)^(b_i)", cv_scale(rhs, beta));
  } else if (id == "L34" || id == "L35") {
    const Weights& w = *in.weights;
    const Weights bw = Weights::of(w.betas);
    const double s = w.s_n;
    const long m = in.m_pow, ml = static_cast<long>(in.m_pow) * in.l_pow;
    const std::vector<NonnegMatrix> km = map_pow(in.matrices, m);
    const std::vector<NonnegMatrix> kml = map_pow(in.matrices, ml);
    ch.add("r(o K_i^(a_i))", R(weighted_gmean(in.matrices, w)));
    ch.add("r(o (K_i^m)^(a_i))^(1/m)",
           cv_pow(R(weighted_gmean(km, w)), 1.0 / m));
    if (id == "L34") {
      ch.add("r(o (K_i^{ml})^(a_i))^(1/ml)",
             cv_pow(R(weighted_gmean(kml, w)), 1.0 / ml));
      ch.add("r(o (K_i^{ml})^(b_i))^(s/ml)",
             cv_pow(R(weighted_gmean(kml, bw)), s / ml));
    } else {
      ch.add("r(o (K_i^m)^(b_i))^(s/m)",
             cv_pow(R(weighted_gmean(km, bw)), s / m));
      ch.add("r(o (K_i^{ml})^(b_i))^(s/ml)",
             cv_pow(R(weighted_gmean(kml, bw)), s / ml));
    }
    CertifiedValue rhs = cv_exact(1.0);
    for (std::size_t i = 0; i < in.matrices.size(); ++i)
      rhs = cv_mul(rhs, cv_pow(R(in.matrices[i]), w.alphas[i]));
    ch.add("prod_i r(K_i)^(a_i)", rhs);
  } else if (id == "L36") {
    const int m = static_cast<int>(in.matrices.size());
    const Weights wa = flat_weights(m, a);
    const std::vector<NonnegMatrix> fam =
        pair_family(in.matrices, *in.tau, {}, PairKind::A);
    const std::vector<NonnegMatrix> rots = cyclic_products(fam, *in.nu);
    ch.add("|o H_i^(a)|", N2(weighted_gmean(in.matrices, wa)));
    ch.add("r(o A_j^(a))^(1/2)", cv_pow(R(weighted_gmean(fam, wa)), 0.5));
    ch.add("r(o P_i^(a))^(1/2m)",
           cv_pow(R(weighted_gmean(rots, wa)), 1.0 / (2 * m)));
    ch.add("r(A_{v(1)}...A_{v(m)})^(a/2)", cv_pow(R(rots[0]), a / 2.0));
  } else if (id == "L37") {
    const int m = static_cast<int>(in.matrices.size());
    const Weights wa = flat_weights(m, a);
    const std::vector<NonnegMatrix> fa =
        pair_family(in.matrices, *in.tau, {}, PairKind::A);
    const std::vector<NonnegMatrix> fb =
        pair_family(in.matrices, *in.tau, {}, PairKind::B);
    const CertifiedValue lhs = N2(weighted_gmean(in.matrices, wa));
    const CertifiedValue ra = R(weighted_gmean(fa, wa));
    const CertifiedValue rb = R(weighted_gmean(fb, wa));
    ch.add("|o H_i^(a)|", lhs);
    ch.add("r(o B_j^(a))^(1/2)", cv_pow(rb, 0.5));
    ch.seg();
    ch.add("|o H_i^(a)|", lhs);
    ch.add("r(o A_j^(a))^(b/2) r(o B_j^(a))^((1-b)/2)",
           cv_mul(cv_pow(ra, in.mix / 2.0), cv_pow(rb, (1.0 - in.mix) / 2.0)));
  } else if (id == "L38") {
    const int m = static_cast<int>(in.matrices.size());
    const Weights wa = flat_weights(m, a);
    const Weights wh = flat_weights(m / 2, a);
    const std::vector<NonnegMatrix> fam =
        pair_family(in.matrices, *in.tau, {}, PairKind::A);
    const std::vector<NonnegMatrix> half(fam.begin(), fam.begin() + m / 2);
    const std::vector<NonnegMatrix> cyc = cyclic_products(half);
    ch.add("|o H_i^(a)|", N2(weighted_gmean(in.matrices, wa)));
    ch.add("r(o_{j<=m} A_j^(a))^(1/2)",
           cv_pow(R(weighted_gmean(fam, wa)), 0.5));
    ch.add("r(o_{j<=m/2} A_j^(a))", R(weighted_gmean(half, wh)));
    ch.add("r(o S_i^(a))^(2/m)",
           cv_pow(R(weighted_gmean(cyc, wh)), 2.0 / m));
    ch.add("r(H*_{t(1)}H_{t(2)}...H*_{t(m-1)}H_{t(m)})^a",
           cv_pow(R(cyc[0]), a));
  } else if (id == "L39") {
    const int m = static_cast<int>(in.matrices.size());
    const double x = in.mix;
    const Weights wa = flat_weights(m, a);
    const Weights wh = flat_weights(m / 2, a);
    const std::vector<NonnegMatrix> fa =
        pair_family(in.matrices, *in.tau, {}, PairKind::A);
    const std::vector<NonnegMatrix> fb =
        pair_family(in.matrices, *in.tau, {}, PairKind::B);
    const std::vector<NonnegMatrix> ha(fa.begin(), fa.begin() + m / 2);
    const std::vector<NonnegMatrix> hb(fb.begin(), fb.begin() + m / 2);
    const std::vector<NonnegMatrix> sc = cyclic_products(ha);
    const std::vector<NonnegMatrix> tc = cyclic_products(hb);
    ch.add("|o H_i^(a)|", N2(weighted_gmean(in.matrices, wa)));
    ch.add("r(o A^(a))^(b/2) r(o B^(a))^((1-b)/2)",
           cv_mul(cv_pow(R(weighted_gmean(fa, wa)), x / 2.0),
                  cv_pow(R(weighted_gmean(fb, wa)), (1.0 - x) / 2.0)));
    ch.add("r(o_{half} A^(a))^b r(o_{half} B^(a))^(1-b)",
           cv_mul(cv_pow(R(weighted_gmean(ha, wh)), x),
                  cv_pow(R(weighted_gmean(hb, wh)), 1.0 - x)));
    ch.add("r(o S_i^(a))^(2b/m) r(o T_i^(a))^(2(1-b)/m)",
           cv_mul(cv_pow(R(weighted_gmean(sc, wh)), 2.0 * x / m),
                  cv_pow(R(weighted_gmean(tc, wh)), 2.0 * (1.0 - x) / m)));
    ch.add("r(S_1)^(ab) r(T_1)^(a(1-b))",
           cv_mul(cv_pow(R(sc[0]), a * x), cv_pow(R(tc[0]), a * (1.0 - x))));
  } else if (id == "L40") {
    const int m = static_cast<int>(in.matrices.size());
    const Weights wa = flat_weights(m, a);
    std::vector<NonnegMatrix> gs;
    gs.reserve(m);
    for (int i = 0; i < m; ++i)
      gs.push_back(matmul(transpose(in.matrices[(*in.tau)(i)]),
                          in.matrices[(*in.nu)(i)]));
    const std::vector<NonnegMatrix> qs =
        pair_family(in.matrices, *in.tau, in.nu, PairKind::Q);
    ch.add("|o H_i^(a)|", N2(weighted_gmean(in.matrices, wa)));
    ch.add("r(o (H*_{t(j)}H_{v(j)})^(a))^(1/2)",
           cv_pow(R(weighted_gmean(gs, wa)), 0.5));
    ch.add("r(o Q_j^(a))^(1/2m)",
           cv_pow(R(weighted_gmean(qs, wa)), 1.0 / (2 * m)));
    ch.add("r(H*_{t(1)}H_{v(1)}...H*_{t(m)}H_{v(m)})^(a/2)",
           cv_pow(R(qs[0]), a / 2.0));
  } else if (id == "L41") {
    const int m = static_cast<int>(in.matrices.size());
    const Permutation tau = odd_tau(m);
    const Permutation nu = odd_nu(m);
    const Weights wa = flat_weights(m, a);
    std::vector<NonnegMatrix> gs;
    gs.reserve(m);
    for (int i = 0; i < m; ++i)
      gs.push_back(
          matmul(transpose(in.matrices[tau(i)]), in.matrices[nu(i)]));
    ch.add("|o H_i^(a)|", N2(weighted_gmean(in.matrices, wa)));
    ch.add("r((H_1*H_2)^(a) o ... o (H_{m-1}*H_m)^(a))^(1/2)",
           cv_pow(R(weighted_gmean(gs, wa)), 0.5));
    ch.add("r(H_1*H_2 ... H_{m-1}*H_m)^(a/2)", cv_pow(R(prod(gs)), a / 2.0));
  } else if (id == "L42") {
    const NonnegMatrix& ma = in.matrices[0];
    const NonnegMatrix& mb = in.matrices[1];
    const std::vector<NonnegMatrix> hs = {ma, transpose(mb), ma};
    const Permutation tau = odd_tau(3);
    const Permutation nu = odd_nu(3);
    const Weights wa = flat_weights(3, a);
    std::vector<NonnegMatrix> gs;
    for (int i = 0; i < 3; ++i)
      gs.push_back(matmul(transpose(hs[tau(i)]), hs[nu(i)]));
    const std::vector<NonnegMatrix> qs = cyclic_products(gs);
    const NonnegMatrix aba = matmul(matmul(ma, mb), ma);
    ch.add("|A^(a) o (B*)^(a) o A^(a)|", N2(weighted_gmean(hs, wa)));
    ch.add("r((A*B*)^(a) o (A*A)^(a) o (BA)^(a))^(1/2)",
           cv_pow(R(weighted_gmean(gs, wa)), 0.5));
    ch.add("r(o Q_j^(a))^(1/6)", cv_pow(R(weighted_gmean(qs, wa)), 1.0 / 6.0));
    ch.add("|ABA|^a", cv_pow(N2(aba), a));
  } else if (id == "L43") {
    const NonnegMatrix& cmat = in.matrices[0];
    ch.add("r(C^(a) o (C*)^(a))",
           R(hadamard_product(hadamard_power(cmat, a),
                              hadamard_power(transpose(cmat), a))));
    ch.add("r(C^(2a))", R(hadamard_power(cmat, 2.0 * a)));
    ch.add("r(C)^(2a)", cv_pow(R(cmat), 2.0 * a));
  } else if (id == "L44") {
    const NonnegMatrix& ma = in.matrices[0];
    const NonnegMatrix& mb = in.matrices[1];
    const NonnegMatrix ab = matmul(transpose(ma), mb);
    const NonnegMatrix ba = matmul(transpose(mb), ma);
    ch.add("|A^(a) o B^(a)|",
           N2(hadamard_product(hadamard_power(ma, a), hadamard_power(mb, a))));
    ch.add("r((A*B)^(a) o (B*A)^(a))^(1/2)",
           cv_pow(R(hadamard_product(hadamard_power(ab, a),
                                     hadamard_power(ba, a))),
                  0.5));
    ch.add("r((A*B)^(2a))^(1/2)", cv_pow(R(hadamard_power(ab, 2.0 * a)), 0.5));
    ch.add("r(A*B)^a", cv_pow(R(ab), a));
  } else {
    raise(errc::unknown_law, "no evaluator for '" + id + "'");
  }

  if (spec.mode == LawMode::entrywise)
    return finalize_entrywise(spec, in, std::move(ew), opts);
  return finalize_scalar(spec, in, std::move(ch), opts);
}

bool check_report(const LawReport& rep, double rtol, double atol,
                  int* failing_link) {
  if (failing_link) *failing_link = -1;
  if (rep.mode == LawMode::entrywise) {
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
      const double scale = i < rep.scales.size() ? rep.scales[i] : 0.0;
      if (rep.values[i] > rtol * scale + atol) {
        if (failing_link) *failing_link = static_cast<int>(i);
        return false;
      }
    }
    return true;
  }
  std::vector<std::size_t> starts = rep.segment_starts;
  if (starts.empty()) starts.push_back(0);
  starts.push_back(rep.values.size());
  for (std::size_t s = 0; s + 1 < starts.size(); ++s) {
    for (std::size_t i = starts[s]; i + 1 < starts[s + 1]; ++i) {
      const double wi = i < rep.widths.size() ? rep.widths[i] : 0.0;
      const double wj = i + 1 < rep.widths.size() ? rep.widths[i + 1] : 0.0;
      if (rep.values[i] > rep.values[i + 1] * (1.0 + rtol) + atol + wi + wj) {
        if (failing_link) *failing_link = static_cast<int>(i);
        return false;
      }
    }
  }
  return true;
}

}  // namespace hadspec
