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

#include "hadspec/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hadspec {

namespace {

void check_equal_dims(const std::vector<NonnegMatrix>& ks, const char* op) {
  if (ks.empty()) raise(errc::empty_list, std::string(op) + ": empty list");
  for (const auto& k : ks)
    if (k.dim() != ks[0].dim())
      raise(errc::dimension_mismatch, std::string(op) + ": mixed dimensions");
}

void check_sym_exponents(double alpha, double beta) {
  if (std::isnan(alpha) || std::isnan(beta) || alpha < 0.0 || beta < 0.0)
    raise(errc::exponent_domain, "exponents must be nonnegative");
  const bool sum_ok = alpha + beta >= 1.0 - 1e-12;
  const bool convex_ok =
      alpha <= 1.0 && std::fabs(beta - (1.0 - alpha)) <= 1e-12;
  if (!sum_ok && !convex_ok)
    raise(errc::exponent_domain,
          "need alpha + beta >= 1 or beta = 1 - alpha with alpha in [0,1]");
}

}  // namespace

NonnegMatrix weighted_gmean(const std::vector<NonnegMatrix>& ks,
                            const Weights& w) {
  check_equal_dims(ks, "weighted_gmean");
  if (static_cast<int>(ks.size()) != w.size())
    raise(errc::length_mismatch, "weighted_gmean: weight count mismatch");
  if (!(w.s_n > 0.0))
    raise(errc::bad_argument, "weighted_gmean: weights must have s_n > 0");
  NonnegMatrix acc = NonnegMatrix::constant(ks[0].dim(), 1.0);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (w.alphas[i] == 0.0) continue;  // absent factor
    acc = hadamard_product(acc, hadamard_power(ks[i], w.alphas[i]));
  }
  return acc;
}

NonnegMatrix c_matrix(const std::vector<NonnegMatrix>& ks, const Weights& w) {
  check_equal_dims(ks, "c_matrix");
  if (static_cast<int>(ks.size()) != w.size())
    raise(errc::length_mismatch, "c_matrix: weight count mismatch");
  if (!w.convex())
    raise(errc::weights_not_convex,
          "c_matrix: weights must sum to 1, got " + std::to_string(w.s_n));
  const int n = ks[0].dim();
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v;
      if (i == j) {
        v = 0.0;
        for (std::size_t k = 0; k < ks.size(); ++k)
          v += w.alphas[k] * ks[k](i, i);
      } else {
        v = 1.0;
        for (std::size_t k = 0; k < ks.size(); ++k) {
          if (w.alphas[k] == 0.0) continue;
          v *= pow0(ks[k](i, j), w.alphas[k]);
        }
      }
      e[static_cast<std::size_t>(i) * n + j] = v;
    }
  return NonnegMatrix::from_entries(n, std::move(e));
}

NonnegMatrix sym(const NonnegMatrix& k, double alpha, double beta) {
  check_sym_exponents(alpha, beta);
  return hadamard_product(hadamard_power(k, alpha),
                          hadamard_power(transpose(k), beta));
}

NonnegMatrix sym_half(const NonnegMatrix& k) { return sym(k, 0.5, 0.5); }

GridBundle grid_bundle(const std::vector<std::vector<NonnegMatrix>>& grid,
                       const Weights& w) {
  if (grid.empty()) raise(errc::empty_list, "grid_bundle: empty grid");
  const int n = static_cast<int>(grid[0].size());
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != n)
      raise(errc::length_mismatch, "grid_bundle: ragged grid");
  if (n != w.size())
    raise(errc::length_mismatch, "grid_bundle: weight count mismatch");
  if (w.s_n < 1.0 - 1e-12)
    raise(errc::weights_too_small,
          "grid_bundle: weights must have s_n >= 1, got " +
              std::to_string(w.s_n));
  const int dim = grid[0][0].dim();
  for (const auto& row : grid)
    for (const auto& k : row)
      if (k.dim() != dim)
        raise(errc::dimension_mismatch, "grid_bundle: mixed dimensions");

  GridBundle out;
  out.weights = w;
  NonnegMatrix h = weighted_gmean(grid[0], w);
  for (std::size_t r = 1; r < grid.size(); ++r)
    h = matmul(h, weighted_gmean(grid[r], w));
  out.H = std::move(h);
  out.H_list.reserve(n);
  for (int i = 0; i < n; ++i) {
    NonnegMatrix col = grid[0][i];
    for (std::size_t r = 1; r < grid.size(); ++r)
      col = matmul(col, grid[r][i]);
    out.H_list.push_back(std::move(col));
  }
  out.M = 0.0;
  for (const auto& hi : out.H_list) out.M = std::max(out.M, max_entry(hi));
  out.beta = pow0(out.M, w.beta_scale_exponent);
  out.delta = std::max(pow0(out.M, w.s_n), 1.0);
  return out;
}

RefinementSequence refinement_sequence(const NonnegMatrix& k, double alpha,
                                       std::optional<double> beta, int depth,
                                       Functional f,
                                       const SpectralOptions& sopts) {
  if (f != Functional::spectral_radius)
    raise(errc::bad_argument,
          "refinement_sequence: only the spectral radius is admissible");
  if (depth < 0 || depth > 32)
    raise(errc::depth_overflow, "depth must be in [0, 32]");
  double b;
  if (beta.has_value()) {
    b = *beta;
    check_sym_exponents(alpha, b);
  } else {
    if (std::isnan(alpha) || alpha < 0.0 || alpha > 1.0)
      raise(errc::exponent_domain,
            "alpha must lie in [0,1] when beta is omitted");
    b = 1.0 - alpha;
  }
  const double ab = alpha + b;

  RefinementSequence out;
  out.functional = f;
  out.alpha = alpha;
  out.beta = beta;
  out.depth = depth;

  // K^(2^n) = e^(lc) * P with P normalized to unit max entry; S_{a,b} scales
  // by the (alpha+beta)-th power of the factor and rho_n takes the 2^-n root,
  // so the bookkeeping stays exact in log space.
  NonnegMatrix p = k;
  double lc = 0.0;
  bool zero_power = false;
  {
    const double m0 = max_entry(p);
    if (m0 > 0.0) {
      p = linear_comb({1.0 / m0}, {p});
      lc = std::log(m0);
    } else {
      zero_power = true;
    }
  }
  for (int n = 0; n <= depth; ++n) {
    CertifiedValue rho_n;
    if (zero_power) {
      rho_n = cv_exact(0.0);
    } else {
      const CertifiedValue rs = spectral_radius(sym(p, alpha, b), sopts);
      const double scale = std::pow(2.0, static_cast<double>(n));
      auto map = [&](double v) {
        if (!(v > 0.0)) return 0.0;
        return std::exp((lc * ab + std::log(v)) / scale);
      };
      rho_n.lo = map(rs.lo) * (1.0 - 1e-13);
      rho_n.hi = map(rs.hi) * (1.0 + 1e-13);
      rho_n.value = std::clamp(map(rs.value), rho_n.lo, rho_n.hi);
      rho_n.iterations = rs.iterations;
      rho_n.converged = rs.converged;
    }
    out.certified.push_back(rho_n);
    out.values.push_back(rho_n.value);
    if (!rho_n.converged) out.converged = false;

    if (n == depth) break;
    if (!zero_power) {
      NonnegMatrix sq = matmul(p, p);
      const double m = max_entry(sq);
      if (m > 0.0) {
        p = linear_comb({1.0 / m}, {sq});
        lc = 2.0 * lc + std::log(m);
      } else {
        zero_power = true;
      }
    }
  }

  out.base_radius = spectral_radius(k, sopts);
  if (!out.base_radius.converged) out.converged = false;
  const CertifiedValue cap_s = cv_pow(out.base_radius, ab);
  out.cap_spectral = cap_s.value;
  CertifiedValue cap_n;
  {
    // |K^(2^depth)|inf = e^(lc) * max_entry(P)
    const double expo = (ab - 1.0) / std::pow(2.0, static_cast<double>(depth));
    double factor;
    if (zero_power) {
      factor = (expo == 0.0) ? 1.0 : 0.0;
    } else {
      factor = std::exp((lc + std::log(max_entry(p))) * expo);
    }
    cap_n = cv_scale(out.base_radius, factor);
  }
  out.cap_norm = cap_n.value;
  out.cap_certified = cv_min(cap_s, cap_n);
  out.cap = out.cap_certified.value;
  return out;
}

AlphaProfile alpha_profile(const NonnegMatrix& k, Functional f, int gridsize,
                           const SpectralOptions& sopts) {
  if (gridsize < 3 || gridsize % 2 == 0)
    raise(errc::bad_argument, "gridsize must be odd and >= 3");
  if (f != Functional::spectral_radius && f != Functional::op_norm_2 &&
      f != Functional::numerical_radius)
    raise(errc::bad_argument, "profile functionals are r, op2, w");
  AlphaProfile out;
  out.functional = f;
  out.grid.reserve(gridsize);
  out.values.reserve(gridsize);
  for (int j = 0; j < gridsize; ++j) {
    const double a = static_cast<double>(j) / (gridsize - 1);
    const CertifiedValue cv =
        evaluate_certified(f, sym(k, a, 1.0 - a), sopts);
    out.grid.push_back(a);
    out.values.push_back(cv.value);
    out.certified.push_back(cv);
  }
  return out;
}

std::vector<NonnegMatrix> pair_family(const std::vector<NonnegMatrix>& hs,
                                      const Permutation& tau,
                                      const std::optional<Permutation>& nu,
                                      PairKind kind) {
  check_equal_dims(hs, "pair_family");
  const int m = static_cast<int>(hs.size());
  if (tau.size() != m)
    raise(errc::bad_argument, "pair_family: tau must permute the list");
  if (kind == PairKind::A || kind == PairKind::B) {
    if (m % 2 != 0)
      raise(errc::odd_m, "pair_family: kinds A and B need even m");
    if (nu.has_value())
      raise(errc::bad_argument, "pair_family: kinds A and B take no nu");
    std::vector<NonnegMatrix> out;
    out.reserve(m);
    for (int j = 0; j < m / 2; ++j) {
      const NonnegMatrix& x = hs[tau(2 * j)];
      const NonnegMatrix& y = hs[tau(2 * j + 1)];
      out.push_back(kind == PairKind::A ? matmul(transpose(x), y)
                                        : matmul(x, transpose(y)));
    }
    for (int j = 0; j < m / 2; ++j) out.push_back(transpose(out[j]));
    return out;
  }
  if (!nu.has_value())
    raise(errc::missing_permutation, "pair_family: kind Q needs nu");
  if (nu->size() != m)
    raise(errc::bad_argument, "pair_family: nu must permute the list");
  std::vector<NonnegMatrix> gs;
  gs.reserve(m);
  for (int i = 0; i < m; ++i)
    gs.push_back(matmul(transpose(hs[tau(i)]), hs[(*nu)(i)]));
  // Q_j rotates the factor list, never inverts the permutations
  std::vector<NonnegMatrix> out;
  out.reserve(m);
  for (int j = 0; j < m; ++j) {
    NonnegMatrix q = gs[j];
    for (int t = 1; t < m; ++t) q = matmul(q, gs[(j + t) % m]);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<NonnegMatrix> cyclic_products(
    const std::vector<NonnegMatrix>& as,
    const std::optional<Permutation>& nu) {
  check_equal_dims(as, "cyclic_products");
  const int k = static_cast<int>(as.size());
  Permutation order = nu.value_or(Permutation::identity(k));
  if (order.size() != k)
    raise(errc::bad_argument, "cyclic_products: nu must permute the list");
  std::vector<NonnegMatrix> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) {
    NonnegMatrix p = as[order(i)];
    for (int t = 1; t < k; ++t) p = matmul(p, as[order((i + t) % k)]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hadspec
