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

#ifndef HADSPEC_SPECTRAL_HPP
#define HADSPEC_SPECTRAL_HPP

#include <string>

#include "hadspec/matrix.hpp"

namespace hadspec {

enum class Functional {
  spectral_radius,
  op_norm_1,
  op_norm_2,
  op_norm_inf,
  numerical_radius,
  max_entry,
};

/// Short CLI names: r, op1, op2, opinf, w, maxentry.
const char* functional_name(Functional f);
Functional functional_from_name(const std::string& name);

/// Scalar with an enclosing interval.  For certified evaluations
/// lo <= value <= hi always holds; converged means the interval met the
/// requested tolerance.
struct CertifiedValue {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  long iterations = 0;
  bool converged = true;

  double width() const { return hi - lo; }
};

struct SpectralOptions {
  double rtol = 1e-10;
  double atol = 1e-14;
  long max_iter = 100000;
};

/// Certified spectral radius of a nonnegative matrix.
///
/// The support graph is split into strongly connected components; r(A) is the
/// maximum of the diagonal-block radii, and the interval of the maximum is
/// the entrywise maximum of the block intervals.  Each irreducible block is
/// handled by Collatz-Wielandt power iteration: for positive x the quotients
/// of (B + c I)x / x bracket r(B) + c, the positive shift c removes
/// periodicity, and the bracket collapses as x approaches the Perron vector.
/// Blocks whose subdominant ratio makes plain iteration too slow fall back to
/// dyadic squaring with analytic rescaling: brackets for r(B^(2^s)) map
/// through the 2^s-th root, which also crushes accumulated rounding error.
/// Non-convergence is soft: the best bracket is returned with
/// converged = false so callers can widen their slack by the width.
CertifiedValue spectral_radius(const NonnegMatrix& a,
                               const SpectralOptions& opts = {});

enum class PNorm { one, two, inf };

/// Induced operator norm: max column sum, sqrt(r(A^T A)), max row sum.
double op_norm(const NonnegMatrix& a, PNorm p, const SpectralOptions& = {});
CertifiedValue op_norm_certified(const NonnegMatrix& a, PNorm p,
                                 const SpectralOptions& = {});

/// Numerical radius of a nonnegative matrix: w(A) = r((A + A^T)/2).  Valid
/// because the maximizer of the Rayleigh quotient of a symmetric nonnegative
/// matrix is its Perron vector.
double numerical_radius(const NonnegMatrix& a, const SpectralOptions& = {});
CertifiedValue numerical_radius_certified(const NonnegMatrix& a,
                                          const SpectralOptions& = {});

double evaluate(Functional f, const NonnegMatrix& a,
                const SpectralOptions& = {});
CertifiedValue evaluate_certified(Functional f, const NonnegMatrix& a,
                                  const SpectralOptions& = {});

// Interval combinators.  All quantities are nonnegative, which keeps the
// monotone cases trivial.
CertifiedValue cv_exact(double v);
CertifiedValue cv_pow(const CertifiedValue& a, double e);  // e >= 0
CertifiedValue cv_scale(const CertifiedValue& a, double c);
CertifiedValue cv_mul(const CertifiedValue& a, const CertifiedValue& b);
CertifiedValue cv_add(const CertifiedValue& a, const CertifiedValue& b);
CertifiedValue cv_min(const CertifiedValue& a, const CertifiedValue& b);

}  // namespace hadspec

#endif  // HADSPEC_SPECTRAL_HPP
