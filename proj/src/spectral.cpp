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

#include "hadspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hadspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Strongly connected components of the support graph (iterative Tarjan).
struct SccResult {
  std::vector<int> comp;
  int count = 0;
};

SccResult tarjan_scc(const NonnegMatrix& a) {
  const int n = a.dim();
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<int> comp(n, -1);
  stack.reserve(n);
  int next_index = 0, comp_count = 0;
  struct Frame {
    int v;
    int j;
  };
  std::vector<Frame> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const int v = f.v;
      bool descended = false;
      while (f.j < n) {
        const int w = f.j++;
        if (!(a(v, w) > 0.0)) continue;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        for (;;) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    }
  }
  return {std::move(comp), comp_count};
}

struct Bracket {
  double lo = 0.0;
  double hi = kInf;
  double width() const { return hi - lo; }
};

// Collatz-Wielandt sweeps on M = B + shift*I, B nonnegative k x k row-major.
// For positive x, min_i (Mx)_i/x_i <= r(B) + shift <= max_i (Mx)_i/x_i.
// Tightens [lo, hi] around r(B) until hi - lo <= max(rtol*lo, atol) or the
// budget runs out.  Candidates are padded for rounding; all sums have
// nonnegative terms, so the (k+4)*eps relative bound is honest.
long cw_run(const std::vector<double>& b, int k, double shift, double rtol,
            double atol, long budget, Bracket& br, std::vector<double>& x,
            std::vector<double>& y) {
  const double pad = static_cast<double>(k + 4) * kEps;
  long used = 0;
  while (used < budget) {
    ++used;
    double qmin = kInf, qmax = 0.0;
    const double* row = b.data();
    for (int i = 0; i < k; ++i, row += k) {
      double s = 0.0;
      for (int j = 0; j < k; ++j) s += row[j] * x[j];
      s += shift * x[i];
      y[i] = s;
      const double q = s / x[i];
      qmin = std::min(qmin, q);
      qmax = std::max(qmax, q);
    }
    const double lo_cand = qmin * (1.0 - pad) - shift;
    const double hi_cand = qmax * (1.0 + pad) - shift;
    if (lo_cand > br.lo) br.lo = std::max(0.0, lo_cand);
    if (hi_cand < br.hi) br.hi = hi_cand;
    if (br.lo > br.hi) br.lo = br.hi = 0.5 * (br.lo + br.hi);
    if (br.width() <= std::max(rtol * br.lo, atol)) break;
    double ymax = 0.0;
    for (int i = 0; i < k; ++i) ymax = std::max(ymax, y[i]);
    const double inv = 1.0 / ymax;  // ymax > 0: shift > 0 keeps x positive
    for (int i = 0; i < k; ++i) x[i] = y[i] * inv;
  }
  return used;
}

struct BlockOut {
  Bracket br;
  long iters = 0;
  bool converged = false;
};

// Certified radius of one irreducible block, k >= 2.
BlockOut solve_block(std::vector<double> b, int k, double rtol, double atol,
                     long max_iter) {
  BlockOut out;
  double m = 0.0;
  for (double v : b) m = std::max(m, v);
  // irreducible with k >= 2 implies m > 0
  const double inv_m = 1.0 / m;
  for (double& v : b) v *= inv_m;
  const double atol_s = atol / m;
  const double rtol_t = 0.45 * rtol;  // land below the advertised width
  const double atol_t = 0.45 * atol_s;

  std::vector<double> x(static_cast<std::size_t>(k), 1.0), y(x);
  Bracket br;
  br.hi = static_cast<double>(k);  // max row sum of the rescaled block
  const auto done = [&] {
    return br.width() <= std::max(rtol_t * br.lo, atol_t);
  };

  // coarse sweep at unit shift, then a sweep shifted near the estimate;
  // the adaptive shift handles both periodic and tiny-radius blocks
  out.iters += cw_run(b, k, 1.0, 0.02, atol_t,
                      std::min<long>(200, max_iter), br, x, y);
  if (!done() && out.iters < max_iter) {
    const double c = std::clamp(br.hi, 1e-9, 1.0);
    out.iters += cw_run(b, k, c, rtol_t, atol_t,
                        std::min<long>(800, max_iter - out.iters), br, x, y);
  }

  if (!done()) {
    // Dyadic squaring: maintain P and L with B^(2^s) = e^L * P, P normalized
    // to unit max entry.  r(B) = (e^L r(P))^(2^-s); the root also divides the
    // accumulated entry error by 2^s.
    std::vector<double> p = b, tmp(static_cast<std::size_t>(k) * k);
    double logscale = 0.0;
    double entry_err = 0.0;
    const double gamma = 1.1 * static_cast<double>(k) * kEps;
    for (int s = 1; s <= 48 && out.iters < max_iter && !done(); ++s) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          double acc = 0.0;
          for (int l = 0; l < k; ++l)
            acc += p[static_cast<std::size_t>(i) * k + l] *
                   p[static_cast<std::size_t>(l) * k + j];
          tmp[static_cast<std::size_t>(i) * k + j] = acc;
        }
      double pm = 0.0;
      for (double v : tmp) pm = std::max(pm, v);
      if (!(pm > 0.0)) break;  // impossible on an irreducible support
      const double ipm = 1.0 / pm;
      for (std::size_t idx = 0; idx < tmp.size(); ++idx)
        p[idx] = tmp[idx] * ipm;
      logscale = 2.0 * logscale + std::log(pm);
      entry_err = 2.0 * entry_err + gamma;
      const double scale = std::pow(2.0, static_cast<double>(s));

      Bracket pb;
      pb.hi = static_cast<double>(k);
      std::vector<double> px(static_cast<std::size_t>(k), 1.0), py(px);
      long budget = std::min<long>(80, max_iter - out.iters);
      if (budget <= 0) break;
      out.iters += cw_run(p, k, 1.0, 0.05, 0.0, budget, pb, px, py);
      const double need_rel =
          std::max(rtol_t, atol_t / std::max(br.lo, atol_t));
      const double tau =
          std::clamp(0.25 * need_rel * scale, 1e-12, 0.25);
      budget = std::min<long>(400, max_iter - out.iters);
      if (budget > 0) {
        const double c = std::clamp(pb.hi, 1e-12, 1.0);
        out.iters += cw_run(p, k, c, tau, 0.0, budget, pb, px, py);
      }
      if (pb.lo > 0.0) {
        const double err = entry_err + 4.0 * kEps;
        const double lo_map =
            std::exp((logscale + std::log(pb.lo * (1.0 - err))) / scale) *
            (1.0 - 4.0 * kEps);
        const double hi_map =
            std::exp((logscale + std::log(pb.hi * (1.0 + err))) / scale) *
            (1.0 + 4.0 * kEps);
        if (lo_map > br.lo) br.lo = lo_map;
        if (hi_map < br.hi) br.hi = hi_map;
        if (br.lo > br.hi) br.lo = br.hi = 0.5 * (br.lo + br.hi);
      }
    }
  }

  out.converged = done();
  out.br.lo = br.lo * m * (1.0 - 2.0 * kEps);
  out.br.hi = br.hi * m * (1.0 + 2.0 * kEps);
  return out;
}

}  // namespace

const char* functional_name(Functional f) {
  switch (f) {
    case Functional::spectral_radius: return "r";
    case Functional::op_norm_1: return "op1";
    case Functional::op_norm_2: return "op2";
    case Functional::op_norm_inf: return "opinf";
    case Functional::numerical_radius: return "w";
    case Functional::max_entry: return "maxentry";
  }
  return "?";
}

Functional functional_from_name(const std::string& name) {
  if (name == "r") return Functional::spectral_radius;
  if (name == "op1") return Functional::op_norm_1;
  if (name == "op2") return Functional::op_norm_2;
  if (name == "opinf") return Functional::op_norm_inf;
  if (name == "w") return Functional::numerical_radius;
  if (name == "maxentry") return Functional::max_entry;
  raise(errc::bad_argument, "unknown functional '" + name +
                                "', expected r|op1|op2|opinf|w|maxentry");
}

CertifiedValue spectral_radius(const NonnegMatrix& a,
                               const SpectralOptions& opts) {
  if (!(opts.rtol > 0.0) || !(opts.atol > 0.0))
    raise(errc::bad_argument, "spectral tolerances must be positive");
  if (opts.max_iter < 1) raise(errc::bad_argument, "max_iter must be >= 1");
  const int n = a.dim();
  const SccResult scc = tarjan_scc(a);
  std::vector<std::vector<int>> members(scc.count);
  for (int v = 0; v < n; ++v) members[scc.comp[v]].push_back(v);

  CertifiedValue out;
  long remaining = opts.max_iter;
  for (const auto& mem : members) {
    double blo, bhi;
    if (mem.size() == 1) {
      blo = bhi = a(mem[0], mem[0]);
    } else {
      const int k = static_cast<int>(mem.size());
      std::vector<double> b(static_cast<std::size_t>(k) * k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          b[static_cast<std::size_t>(i) * k + j] = a(mem[i], mem[j]);
      BlockOut bo = solve_block(std::move(b), k, opts.rtol, opts.atol,
                                std::max<long>(remaining, 64));
      out.iterations += bo.iters;
      remaining -= bo.iters;
      blo = bo.br.lo;
      bhi = bo.br.hi;
    }
    out.lo = std::max(out.lo, blo);
    out.hi = std::max(out.hi, bhi);
  }
  out.value = std::clamp(0.5 * (out.lo + out.hi), out.lo, out.hi);
  out.converged = out.width() <= std::max(opts.rtol * out.hi, opts.atol);
  return out;
}

double op_norm(const NonnegMatrix& a, PNorm p, const SpectralOptions& opts) {
  return op_norm_certified(a, p, opts).value;
}

CertifiedValue op_norm_certified(const NonnegMatrix& a, PNorm p,
                                 const SpectralOptions& opts) {
  const int n = a.dim();
  switch (p) {
    case PNorm::one: {
      double m = 0.0;
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += a(i, j);
        m = std::max(m, s);
      }
      return cv_exact(m);
    }
    case PNorm::inf: {
      double m = 0.0;
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += a(i, j);
        m = std::max(m, s);
      }
      return cv_exact(m);
    }
    case PNorm::two: {
      // |A|_2 = r(A^T A)^(1/2).  The square root amplifies absolute error at
      // small scales, so the inner call gets a squared atol and the
      // convergence flag is judged against the mapped bracket.
      SpectralOptions inner = opts;
      inner.atol = std::max(opts.atol * opts.atol, 1e-300);
      CertifiedValue cv = spectral_radius(matmul(transpose(a), a), inner);
      const double pad = 2.0 * static_cast<double>(n + 2) * kEps;
      CertifiedValue out;
      out.lo = std::sqrt(cv.lo) * (1.0 - pad);
      out.hi = std::sqrt(cv.hi) * (1.0 + pad);
      out.value = std::clamp(std::sqrt(cv.value), out.lo, out.hi);
      out.iterations = cv.iterations;
      out.converged =
          cv.converged &&
          out.width() <= std::max(opts.rtol * out.hi, opts.atol);
      return out;
    }
  }
  raise(errc::bad_argument, "bad norm selector");
}

double numerical_radius(const NonnegMatrix& a, const SpectralOptions& opts) {
  return numerical_radius_certified(a, opts).value;
}

CertifiedValue numerical_radius_certified(const NonnegMatrix& a,
                                          const SpectralOptions& opts) {
  const NonnegMatrix sym_part =
      linear_comb({0.5, 0.5}, {a, transpose(a)});
  CertifiedValue cv = spectral_radius(sym_part, opts);
  cv.lo *= (1.0 - 4.0 * kEps);
  cv.hi *= (1.0 + 4.0 * kEps);
  cv.converged =
      cv.converged && cv.width() <= std::max(opts.rtol * cv.hi, opts.atol);
  return cv;
}

double evaluate(Functional f, const NonnegMatrix& a,
                const SpectralOptions& opts) {
  return evaluate_certified(f, a, opts).value;
}

CertifiedValue evaluate_certified(Functional f, const NonnegMatrix& a,
                                  const SpectralOptions& opts) {
  switch (f) {
    case Functional::spectral_radius: return spectral_radius(a, opts);
    case Functional::op_norm_1: return op_norm_certified(a, PNorm::one, opts);
    case Functional::op_norm_2: return op_norm_certified(a, PNorm::two, opts);
    case Functional::op_norm_inf:
      return op_norm_certified(a, PNorm::inf, opts);
    case Functional::numerical_radius:
      return numerical_radius_certified(a, opts);
    case Functional::max_entry: return cv_exact(max_entry(a));
  }
  raise(errc::bad_argument, "bad functional");
}

CertifiedValue cv_exact(double v) {
  CertifiedValue cv;
  cv.value = cv.lo = cv.hi = v;
  return cv;
}

CertifiedValue cv_pow(const CertifiedValue& a, double e) {
  CertifiedValue out;
  out.lo = pow0(a.lo, e);
  out.hi = pow0(a.hi, e);
  if (out.lo > out.hi) std::swap(out.lo, out.hi);  // only when e == 0
  out.value = std::clamp(pow0(a.value, e), out.lo, out.hi);
  out.iterations = a.iterations;
  out.converged = a.converged;
  return out;
}

CertifiedValue cv_scale(const CertifiedValue& a, double c) {
  CertifiedValue out;
  out.lo = a.lo * c;
  out.hi = a.hi * c;
  out.value = std::clamp(a.value * c, out.lo, out.hi);
  out.iterations = a.iterations;
  out.converged = a.converged;
  return out;
}

CertifiedValue cv_mul(const CertifiedValue& a, const CertifiedValue& b) {
  CertifiedValue out;
  out.lo = a.lo * b.lo;
  out.hi = a.hi * b.hi;
  out.value = std::clamp(a.value * b.value, out.lo, out.hi);
  out.iterations = a.iterations + b.iterations;
  out.converged = a.converged && b.converged;
  return out;
}

CertifiedValue cv_add(const CertifiedValue& a, const CertifiedValue& b) {
  CertifiedValue out;
  out.lo = a.lo + b.lo;
  out.hi = a.hi + b.hi;
  out.value = std::clamp(a.value + b.value, out.lo, out.hi);
  out.iterations = a.iterations + b.iterations;
  out.converged = a.converged && b.converged;
  return out;
}

CertifiedValue cv_min(const CertifiedValue& a, const CertifiedValue& b) {
  CertifiedValue out;
  out.lo = std::min(a.lo, b.lo);
  out.hi = std::min(a.hi, b.hi);
  out.value = std::clamp(std::min(a.value, b.value), out.lo, out.hi);
  out.iterations = a.iterations + b.iterations;
  out.converged = a.converged && b.converged;
  return out;
}

}  // namespace hadspec
