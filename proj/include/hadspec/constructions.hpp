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

#ifndef HADSPEC_CONSTRUCTIONS_HPP
#define HADSPEC_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "hadspec/matrix.hpp"
#include "hadspec/spectral.hpp"

namespace hadspec {

/// Row products of per-row Hadamard means plus the column products and the
/// scale constants M, beta = M^(s_n - 1), delta = max(M^s_n, 1).
struct GridBundle {
  NonnegMatrix H;
  std::vector<NonnegMatrix> H_list;  // H_i = K_{1i} * ... * K_{li}
  double M = 0.0;
  double beta = 1.0;
  Weights weights;
  double delta = 1.0;
};

/// rho_n = r(S_{a,b}(K^(2^n)))^(2^-n) for n = 0..depth plus the cap the
/// sequence converges under.  Both cap candidates are kept; cap is their min.
struct RefinementSequence {
  std::vector<double> values;
  double cap = 0.0;
  double cap_spectral = 0.0;  // r(K)^(alpha+beta)
  double cap_norm = 0.0;      // |K^(2^d)|inf^((a+b-1)/2^d) * r(K)
  Functional functional = Functional::spectral_radius;
  double alpha = 0.5;
  std::optional<double> beta;
  int depth = 0;
  std::vector<CertifiedValue> certified;
  CertifiedValue cap_certified;
  CertifiedValue base_radius;
  bool converged = true;
};

struct AlphaProfile {
  std::vector<double> grid;
  std::vector<double> values;
  Functional functional = Functional::spectral_radius;
  std::vector<CertifiedValue> certified;
};

/// Hadamard weighted geometric mean; factors with alpha_i = 0 are dropped.
NonnegMatrix weighted_gmean(const std::vector<NonnegMatrix>& ks,
                            const Weights& w);

/// Diagonal = weighted arithmetic mean of the diagonals, off-diagonal =
/// weighted geometric mean of the entries.  Requires convex weights.
NonnegMatrix c_matrix(const std::vector<NonnegMatrix>& ks, const Weights& w);

/// S_{alpha,beta}(K) = K^(alpha) o (K^T)^(beta).  Admissible exponents:
/// alpha + beta >= 1, or beta = 1 - alpha with alpha in [0,1].
NonnegMatrix sym(const NonnegMatrix& k, double alpha, double beta);

/// S(K) = sym(K, 1/2, 1/2).
NonnegMatrix sym_half(const NonnegMatrix& k);

GridBundle grid_bundle(const std::vector<std::vector<NonnegMatrix>>& grid,
                       const Weights& w);

/// Dyadic refinement.  K^(2^n) is built by repeated squaring with analytic
/// rescaling (log bookkeeping); rho_n is scale-equivariant so the factor is
/// reapplied exactly.  Only the spectral radius functional is admissible.
RefinementSequence refinement_sequence(const NonnegMatrix& k, double alpha,
                                       std::optional<double> beta, int depth,
                                       Functional f,
                                       const SpectralOptions& = {});

/// f(alpha) = rho(S_alpha(K)) sampled on a uniform odd-size grid over [0,1];
/// the endpoints evaluate S_0 = K^T and S_1 = K literally.
AlphaProfile alpha_profile(const NonnegMatrix& k, Functional f, int gridsize,
                           const SpectralOptions& = {});

enum class PairKind { A, B, Q };

/// Families built from a list of m operators and permutations:
///   A_j = H_{tau(2j-1)}^T H_{tau(2j)},  A_{m/2+j} = A_j^T   (m even)
///   B_j = H_{tau(2j-1)} H_{tau(2j)}^T,  B_{m/2+j} = B_j^T   (m even)
///   Q_j = cyclic product of H_{tau(i)}^T H_{nu(i)} starting at i = j.
std::vector<NonnegMatrix> pair_family(const std::vector<NonnegMatrix>& hs,
                                      const Permutation& tau,
                                      const std::optional<Permutation>& nu,
                                      PairKind kind);

/// P_i = A_{nu(i)} ... A_{nu(k)} A_{nu(1)} ... A_{nu(i-1)}; nu defaults to
/// the identity.
std::vector<NonnegMatrix> cyclic_products(
    const std::vector<NonnegMatrix>& as,
    const std::optional<Permutation>& nu = {});

}  // namespace hadspec

#endif  // HADSPEC_CONSTRUCTIONS_HPP
