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

#include "hadspec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>

namespace hadspec {

namespace {

double draw_entry(const GenConfig& cfg, Stream& st) {
  switch (cfg.entry_model) {
    case EntryModel::uniform01: return st.uniform01();
    case EntryModel::loguniform: return st.loguniform(1e-6, 1e6);
    case EntryModel::smallint:
      return static_cast<double>(st.below(10));
  }
  return 0.0;
}

double draw_masked(const GenConfig& cfg, Stream& st) {
  if (st.bernoulli(cfg.zero_density)) return 0.0;
  return draw_entry(cfg, st);
}

Permutation random_perm(int n, Stream& st) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(st.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(img[i], img[j]);
  }
  return Permutation::from_image(img);
}

std::vector<double> simplex(int n, Stream& st) {
  std::vector<double> g(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    g[i] = -std::log(1.0 - st.uniform01());
    sum += g[i];
  }
  if (!(sum > 0.0)) return std::vector<double>(n, 1.0 / n);
  for (double& v : g) v /= sum;
  return g;
}

Weights draw_weights(WeightRule rule, int n, bool force_convex, Stream& st) {
  std::vector<double> a = simplex(n, st);
  // an occasional zero weight exercises the dropped-factor convention
  if (n >= 2 && st.bernoulli(0.15)) {
    const int z = static_cast<int>(st.below(n));
    a[z] = 0.0;
    double s = 0.0;
    for (double v : a) s += v;
    if (s > 0.0)
      for (double& v : a) v /= s;
    else
      a[(z + 1) % n] = 1.0;
  }
  double target = 1.0;
  if (!force_convex) {
    switch (rule) {
      case WeightRule::ge1:
        target = st.bernoulli(0.3) ? 1.0 : st.uniform(1.0, 3.0);
        break;
      case WeightRule::convex_or_ge1:
        target = st.bernoulli(0.5) ? 1.0 : st.uniform(1.0, 3.0);
        break;
      default:
        break;
    }
  }
  if (target != 1.0)
    for (double& v : a) v *= target;
  return Weights::of(std::move(a));
}

void draw_alpha(const InputShape& sh, int family_m, Stream& st,
                LawInput& in) {
  switch (sh.alpha) {
    case AlphaRule::none:
      break;
    case AlphaRule::unit:
      in.alpha = st.bernoulli(0.15)
                     ? std::vector<double>{0.0, 0.5, 1.0}[st.below(3)]
                     : st.uniform01();
      break;
    case AlphaRule::pair_ge1: {
      const double s = st.bernoulli(0.3) ? 1.0 : st.uniform(1.0, 2.5);
      const double u = st.uniform01();
      in.alpha = s * u;
      in.beta = s - in.alpha;
      break;
    }
    case AlphaRule::unit_or_pair:
      if (st.bernoulli(0.5)) {
        in.alpha = st.uniform01();
        in.beta.reset();
      } else {
        const double s = st.bernoulli(0.3) ? 1.0 : st.uniform(1.0, 2.5);
        const double u = st.uniform01();
        in.alpha = s * u;
        in.beta = s - in.alpha;
      }
      break;
    case AlphaRule::ge_inv_m: {
      const double base = 1.0 / family_m;
      in.alpha = st.bernoulli(0.25) ? base : st.uniform(base, 2.5 * base);
      break;
    }
    case AlphaRule::ge_2_over_m: {
      const double base = 2.0 / family_m;
      in.alpha = st.bernoulli(0.25) ? base : st.uniform(base, 2.0 * base);
      break;
    }
    case AlphaRule::ge_half:
      in.alpha = st.bernoulli(0.25) ? 0.5 : st.uniform(0.5, 2.0);
      break;
    case AlphaRule::ge_third:
      in.alpha = st.bernoulli(0.25) ? 1.0 / 3.0 : st.uniform(1.0 / 3.0, 1.5);
      break;
  }
}

NonnegMatrix zero_diagonal(const NonnegMatrix& m) {
  const int n = m.dim();
  std::vector<double> e = m.entries();
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 0.0;
  return NonnegMatrix::from_entries(n, std::move(e));
}

LawReport default_eval(const LawSpec& spec, const LawInput& in,
                       const EvalOptions& opts) {
  return evaluate_law(spec.id, in, opts);
}

}  // namespace

const char* entry_model_name(EntryModel m) {
  switch (m) {
    case EntryModel::uniform01: return "uniform01";
    case EntryModel::loguniform: return "loguniform";
    case EntryModel::smallint: return "smallint";
  }
  return "?";
}

EntryModel entry_model_from_name(const std::string& name) {
  if (name == "uniform01") return EntryModel::uniform01;
  if (name == "loguniform") return EntryModel::loguniform;
  if (name == "smallint") return EntryModel::smallint;
  raise(errc::bad_argument, "unknown entry model '" + name + "'");
}

void GenConfig::validate() const {
  if (min_dim < 1 || min_dim > max_dim || max_dim > 64)
    raise(errc::bad_argument, "need 1 <= min_dim <= max_dim <= 64");
  if (zero_density < 0.0 || zero_density > 1.0 ||
      structured_injection_rate < 0.0 || structured_injection_rate > 1.0)
    raise(errc::bad_argument, "probabilities must lie in [0,1]");
}

NonnegMatrix gen_matrix(const GenConfig& cfg, Stream& stream) {
  cfg.validate();
  const int dim = stream.int_in(cfg.min_dim, cfg.max_dim);
  return gen_matrix_dim(cfg, stream, dim);
}

NonnegMatrix gen_matrix_dim(const GenConfig& cfg, Stream& st, int n) {
  if (st.bernoulli(cfg.structured_injection_rate)) {
    switch (st.below(6)) {
      case 0:
        return NonnegMatrix::zero(n);
      case 1:
        return NonnegMatrix::identity(n);
      case 2:
        return random_perm(n, st).matrix();
      case 3: {  // rank one
        std::vector<double> u(n), v(n);
        for (int i = 0; i < n; ++i) u[i] = draw_masked(cfg, st);
        for (int i = 0; i < n; ++i) v[i] = draw_masked(cfg, st);
        std::vector<double> e(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(i) * n + j] = u[i] * v[j];
        return NonnegMatrix::from_entries(n, std::move(e));
      }
      case 4: {  // diagonal
        std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
          e[static_cast<std::size_t>(i) * n + i] = draw_masked(cfg, st);
        return NonnegMatrix::from_entries(n, std::move(e));
      }
      default: {  // nilpotent (strictly upper triangular)
        std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            e[static_cast<std::size_t>(i) * n + j] = draw_masked(cfg, st);
        return NonnegMatrix::from_entries(n, std::move(e));
      }
    }
  }
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (auto& v : e) v = draw_masked(cfg, st);
  return NonnegMatrix::from_entries(n, std::move(e));
}

LawInput gen_law_input(const LawSpec& spec, Functional f, const GenConfig& cfg,
                       Stream& st) {
  cfg.validate();
  const InputShape& sh = spec.shape;
  LawInput in;
  in.functional = f;

  if (sh.zero_diag_filter) {
    // post-process toward the zero-diagonal hypothesis, discard on failure
    for (int attempt = 0; attempt < 1000; ++attempt) {
      LawInput cand;
      cand.functional = f;
      const int dim = st.int_in(cfg.min_dim, cfg.max_dim);
      cand.grid_rows = st.bernoulli(0.7) ? 1 : st.int_in(2, sh.max_rows);
      cand.grid_cols = st.int_in(1, 3);
      for (int i = 0; i < cand.grid_rows * cand.grid_cols; ++i)
        cand.matrices.push_back(zero_diagonal(gen_matrix_dim(cfg, st, dim)));
      cand.weights = draw_weights(sh.weights, cand.grid_cols, false, st);
      try {
        validate_input(spec, cand);
        return cand;
      } catch (const Error&) {
        continue;
      }
    }
    raise(errc::unsatisfiable,
          spec.id + ": could not satisfy the hypothesis in 1000 attempts");
  }

  const int dim = st.int_in(cfg.min_dim, cfg.max_dim);
  int count = 1;
  switch (sh.kind) {
    case InputKind::single:
      count = 1;
      break;
    case InputKind::two:
      count = 2;
      break;
    case InputKind::list:
      count = st.int_in(sh.min_n, sh.max_n);
      break;
    case InputKind::pair_list:
      count = 2 * st.int_in(1, sh.max_n);
      break;
    case InputKind::grid:
      in.grid_rows = st.int_in(sh.min_rows, sh.max_rows);
      in.grid_cols = st.int_in(1, 3);
      count = in.grid_rows * in.grid_cols;
      break;
    case InputKind::diag_family:
      count = 1;
      break;
    case InputKind::perm_family:
      switch (sh.parity) {
        case MParity::even:
          count = 2 * st.int_in(1, std::max(1, sh.max_n / 2));
          break;
        case MParity::odd:
          count = 2 * st.int_in(0, (sh.max_n - 1) / 2) + 1;
          break;
        case MParity::any:
          count = st.int_in(sh.min_n, sh.max_n);
          break;
      }
      break;
  }
  for (int i = 0; i < count; ++i)
    in.matrices.push_back(gen_matrix_dim(cfg, st, dim));

  if (sh.kind == InputKind::diag_family) {
    const int nd = st.int_in(1, 4);
    const NonnegMatrix& k = in.matrices[0];
    for (int i = 0; i < nd; ++i) {
      // replace the diagonal with a fresh draw: K + D_i stays nonnegative
      std::vector<double> d(dim);
      for (int r = 0; r < dim; ++r) d[r] = draw_masked(cfg, st) - k(r, r);
      in.diag_perturbations.push_back(std::move(d));
    }
  }

  int weight_count = count;
  if (sh.kind == InputKind::grid) weight_count = in.grid_cols;
  if (sh.kind == InputKind::diag_family)
    weight_count = static_cast<int>(in.diag_perturbations.size());
  if (sh.weights != WeightRule::none) {
    const bool force_convex =
        sh.weights == WeightRule::convex ||
        (sh.w_requires_convex && f == Functional::numerical_radius);
    in.weights = draw_weights(sh.weights, weight_count, force_convex, st);
  }

  const int family_m =
      sh.kind == InputKind::two && sh.alpha == AlphaRule::ge_third
          ? 3
          : count;
  draw_alpha(sh, family_m, st, in);

  if (sh.needs_t) in.t = st.bernoulli(0.25) ? 1.0 : st.uniform(1.0, 4.0);
  if (sh.needs_m_pow) in.m_pow = st.int_in(1, 3);
  if (sh.needs_l_pow) in.l_pow = st.int_in(1, 3);
  if (sh.needs_tau) in.tau = random_perm(count, st);
  if (sh.needs_nu) in.nu = random_perm(count, st);
  if (sh.needs_mix) in.mix = st.uniform01();
  if (sh.needs_depth) in.depth = st.int_in(0, 4);
  if (sh.needs_gridsize) {
    constexpr int kSizes[4] = {5, 9, 11, 21};
    in.gridsize = kSizes[st.below(4)];
  }
  return in;
}

std::vector<std::string> campaign_functionals(const LawSpec& spec) {
  if (spec.mode == LawMode::entrywise) return {"entrywise"};
  std::vector<std::string> out;
  out.reserve(spec.functionals.size());
  for (Functional f : spec.functionals) out.push_back(functional_name(f));
  return out;
}

namespace {

struct TrialOutcome {
  int kind = 0;  // 0 pass, 1 fail, 2 skip
  double slack = 0.0;
  std::unique_ptr<Counterexample> cex;
};

TrialOutcome run_trial(const LawSpec& spec, const std::string& fname,
                       std::uint64_t trial, const GenConfig& cfg,
                       const EvalOptions& opts, const EvaluateFn& ev) {
  TrialOutcome out;
  Stream st(derive_key(cfg.seed, spec.id, fname, trial));
  Functional f = Functional::spectral_radius;
  if (spec.mode == LawMode::scalar_chain) f = functional_from_name(fname);
  LawInput input;
  try {
    input = gen_law_input(spec, f, cfg, st);
  } catch (const Error& e) {
    if (e.code() == errc::unsatisfiable) {
      out.kind = 2;
      return out;
    }
    throw;
  }
  LawReport rep = ev(spec, input, opts);
  out.slack = rep.slack_used;
  if (rep.pass) return out;
  // a counterexample must survive a 10x tighter spectral re-check
  EvalOptions tight = opts;
  tight.spectral.rtol *= 0.1;
  tight.spectral.atol *= 0.1;
  LawReport rep2 = ev(spec, input, tight);
  if (rep2.pass) return out;
  out.kind = 1;
  auto cex = std::make_unique<Counterexample>();
  cex->law_id = spec.id;
  cex->functional = fname;
  cex->trial = trial;
  cex->input = std::move(input);
  cex->report = std::move(rep2);
  *cex = shrink(*cex, tight, ev);
  out.cex = std::move(cex);
  return out;
}

}  // namespace

CampaignReport run_campaign(const std::vector<std::string>& law_ids,
                            std::uint64_t trials, const GenConfig& cfg,
                            const EvalOptions& opts, int workers,
                            EvaluateFn evaluate) {
  if (trials < 1) raise(errc::bad_argument, "trials must be >= 1");
  if (workers < 1) raise(errc::bad_argument, "workers must be >= 1");
  cfg.validate();
  if (!evaluate) evaluate = default_eval;

  struct Combo {
    const LawSpec* spec;
    std::string fname;
  };
  std::vector<Combo> combos;
  for (const std::string& id : law_ids) {
    const LawSpec& spec = law_by_id(id);
    for (const std::string& fname : campaign_functionals(spec))
      combos.push_back({&spec, fname});
  }

  struct Task {
    std::size_t combo;
    std::uint64_t begin, end;
  };
  std::vector<Task> tasks;
  const std::uint64_t chunk = 64;
  for (std::size_t c = 0; c < combos.size(); ++c)
    for (std::uint64_t b = 0; b < trials; b += chunk)
      tasks.push_back({c, b, std::min(trials, b + chunk)});

  struct TaskResult {
    std::uint64_t passes = 0, fails = 0, skips = 0;
    double max_slack = 0.0;
    std::vector<Counterexample> cexs;
  };
  std::vector<TaskResult> results(tasks.size());

  const auto t0 = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t ti = next.fetch_add(1);
      if (ti >= tasks.size()) return;
      const Task& task = tasks[ti];
      const Combo& combo = combos[task.combo];
      TaskResult& res = results[ti];
      try {
        for (std::uint64_t tr = task.begin; tr < task.end; ++tr) {
          TrialOutcome o =
              run_trial(*combo.spec, combo.fname, tr, cfg, opts, evaluate);
          res.max_slack = std::max(res.max_slack, o.slack);
          if (o.kind == 0) ++res.passes;
          else if (o.kind == 1) {
            ++res.fails;
            res.cexs.push_back(std::move(*o.cex));
          } else {
            ++res.skips;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  CampaignReport rep;
  rep.seed = cfg.seed;
  rep.trials_per_law = trials;
  std::vector<LawRunStats> rows(combos.size());
  for (std::size_t c = 0; c < combos.size(); ++c) {
    rows[c].law_id = combos[c].spec->id;
    rows[c].functional = combos[c].fname;
  }
  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    LawRunStats& row = rows[tasks[ti].combo];
    const TaskResult& res = results[ti];
    row.passes += res.passes;
    row.fails += res.fails;
    row.skips += res.skips;
    row.trials += res.passes + res.fails + res.skips;
    row.max_slack = std::max(row.max_slack, res.max_slack);
    for (const auto& cex : res.cexs) rep.counterexamples.push_back(cex);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.law_id, a.functional) < std::tie(b.law_id, b.functional);
  });
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.law_id, a.functional, a.trial) <
                     std::tie(b.law_id, b.functional, b.trial);
            });
  rep.rows = std::move(rows);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

namespace {

LawInput delete_index(const LawInput& in, int d) {
  LawInput out = in;
  out.matrices.clear();
  const int n = in.matrices[0].dim();
  for (const auto& m : in.matrices) {
    std::vector<double> e;
    e.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 0; i < n; ++i) {
      if (i == d) continue;
      for (int j = 0; j < n; ++j) {
        if (j == d) continue;
        e.push_back(m(i, j));
      }
    }
    out.matrices.push_back(NonnegMatrix::from_entries(n - 1, std::move(e)));
  }
  for (auto& diag : out.diag_perturbations)
    diag.erase(diag.begin() + d);
  return out;
}

std::optional<Weights> drop_weight(const std::optional<Weights>& w, int k) {
  if (!w.has_value()) return w;
  std::vector<double> a = w->alphas;
  const double s_old = w->s_n;
  a.erase(a.begin() + k);
  double s_new = 0.0;
  for (double v : a) s_new += v;
  if (!(s_new > 0.0)) return std::nullopt;  // signal: candidate invalid
  const double scale = s_old / s_new;
  for (double& v : a) v *= scale;
  return Weights::of(std::move(a));
}

double round_sig(double v, int digits) {
  if (v == 0.0) return 0.0;
  const double e = std::floor(std::log10(v));
  const double sc = std::pow(10.0, e - (digits - 1));
  return std::round(v / sc) * sc;
}

}  // namespace

Counterexample shrink(const Counterexample& cex, const EvalOptions& opts,
                      EvaluateFn evaluate) {
  if (!evaluate) evaluate = default_eval;
  const LawSpec& spec = law_by_id(cex.law_id);
  Counterexample out = cex;
  out.shrink_steps = cex.shrink_steps;

  auto still_fails = [&](const LawInput& cand, LawReport* rep) {
    try {
      validate_input(spec, cand);
      LawReport r = evaluate(spec, cand, opts);
      if (!r.pass) {
        *rep = std::move(r);
        return true;
      }
    } catch (const Error&) {
    }
    return false;
  };

  bool improved = true;
  while (improved) {
    improved = false;
    LawReport rep;

    // drop a dimension from every matrix
    const int dim = out.input.matrices[0].dim();
    if (dim >= 2) {
      for (int d = 0; d < dim && !improved; ++d) {
        LawInput cand = delete_index(out.input, d);
        if (still_fails(cand, &rep)) {
          out.input = std::move(cand);
          out.report = std::move(rep);
          ++out.shrink_steps;
          improved = true;
        }
      }
    }
    if (improved) continue;

    // drop a matrix / pair / grid column or row, renormalizing weights
    const InputKind kind = spec.shape.kind;
    const int count = static_cast<int>(out.input.matrices.size());
    if (kind == InputKind::list && count > 1) {
      for (int k = 0; k < count && !improved; ++k) {
        LawInput cand = out.input;
        cand.matrices.erase(cand.matrices.begin() + k);
        if (cand.weights.has_value()) {
          auto w = drop_weight(cand.weights, k);
          if (!w.has_value()) continue;
          cand.weights = w;
        }
        if (still_fails(cand, &rep)) {
          out.input = std::move(cand);
          out.report = std::move(rep);
          ++out.shrink_steps;
          improved = true;
        }
      }
    } else if (kind == InputKind::pair_list && count > 2) {
      const int pairs = count / 2;
      for (int k = 0; k < pairs && !improved; ++k) {
        LawInput cand = out.input;
        cand.matrices.erase(cand.matrices.begin() + pairs + k);
        cand.matrices.erase(cand.matrices.begin() + k);
        if (still_fails(cand, &rep)) {
          out.input = std::move(cand);
          out.report = std::move(rep);
          ++out.shrink_steps;
          improved = true;
        }
      }
    } else if (kind == InputKind::grid) {
      for (int c = 0; c < out.input.grid_cols && !improved; ++c) {
        if (out.input.grid_cols <= 1) break;
        LawInput cand = out.input;
        std::vector<NonnegMatrix> kept;
        for (int r = 0; r < cand.grid_rows; ++r)
          for (int cc = 0; cc < cand.grid_cols; ++cc)
            if (cc != c)
              kept.push_back(
                  cand.matrices[static_cast<std::size_t>(r) * cand.grid_cols +
                                cc]);
        cand.matrices = std::move(kept);
        cand.grid_cols -= 1;
        auto w = drop_weight(cand.weights, c);
        if (!w.has_value()) continue;
        cand.weights = w;
        if (still_fails(cand, &rep)) {
          out.input = std::move(cand);
          out.report = std::move(rep);
          ++out.shrink_steps;
          improved = true;
        }
      }
      for (int r = 0; r < out.input.grid_rows && !improved; ++r) {
        if (out.input.grid_rows <= 1) break;
        LawInput cand = out.input;
        cand.matrices.erase(
            cand.matrices.begin() + static_cast<std::size_t>(r) * cand.grid_cols,
            cand.matrices.begin() +
                static_cast<std::size_t>(r + 1) * cand.grid_cols);
        cand.grid_rows -= 1;
        if (still_fails(cand, &rep)) {
          out.input = std::move(cand);
          out.report = std::move(rep);
          ++out.shrink_steps;
          improved = true;
        }
      }
    } else if (kind == InputKind::diag_family &&
               out.input.diag_perturbations.size() > 1) {
      for (std::size_t k = 0;
           k < out.input.diag_perturbations.size() && !improved; ++k) {
        LawInput cand = out.input;
        cand.diag_perturbations.erase(cand.diag_perturbations.begin() + k);
        auto w = drop_weight(cand.weights, static_cast<int>(k));
        if (!w.has_value()) continue;
        cand.weights = w;
        if (still_fails(cand, &rep)) {
          out.input = std::move(cand);
          out.report = std::move(rep);
          ++out.shrink_steps;
          improved = true;
        }
      }
    }
    if (improved) continue;

    // zero one entry
    for (std::size_t mi = 0; mi < out.input.matrices.size() && !improved;
         ++mi) {
      const NonnegMatrix& m = out.input.matrices[mi];
      const int n = m.dim();
      for (int i = 0; i < n && !improved; ++i)
        for (int j = 0; j < n && !improved; ++j) {
          if (!(m(i, j) > 0.0)) continue;
          std::vector<double> e = m.entries();
          e[static_cast<std::size_t>(i) * n + j] = 0.0;
          LawInput cand = out.input;
          cand.matrices[mi] = NonnegMatrix::from_entries(n, std::move(e));
          if (still_fails(cand, &rep)) {
            out.input = std::move(cand);
            out.report = std::move(rep);
            ++out.shrink_steps;
            improved = true;
          }
        }
    }
    if (improved) continue;

    // round every entry to 3 significant digits
    {
      LawInput cand = out.input;
      bool changed = false;
      for (auto& m : cand.matrices) {
        const int n = m.dim();
        std::vector<double> e = m.entries();
        for (double& v : e) {
          const double r = round_sig(v, 3);
          if (r != v) changed = true;
          v = r;
        }
        m = NonnegMatrix::from_entries(n, std::move(e));
      }
      if (changed && still_fails(cand, &rep)) {
        out.input = std::move(cand);
        out.report = std::move(rep);
        ++out.shrink_steps;
        improved = true;
      }
    }
  }
  return out;
}

}  // namespace hadspec
