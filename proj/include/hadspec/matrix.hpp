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

#ifndef HADSPEC_MATRIX_HPP
#define HADSPEC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hadspec/errors.hpp"

namespace hadspec {

/// Square matrix with finite nonnegative entries, immutable after
/// construction.  Every operation below returns a fresh value; invariants are
/// enforced at construction so downstream code can assume them.
class NonnegMatrix {
 public:
  NonnegMatrix() : NonnegMatrix(1, {0.0}) {}  // 1x1 zero

  /// Validates a square row-major layout.  Error messages index from 1.
  static NonnegMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static NonnegMatrix from_entries(int n, std::vector<double> entries);
  static NonnegMatrix zero(int n);
  static NonnegMatrix identity(int n);
  static NonnegMatrix constant(int n, double v);

  int dim() const { return n_; }
  double operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<double>& entries() const { return e_; }

  friend bool operator==(const NonnegMatrix& a, const NonnegMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  NonnegMatrix(int n, std::vector<double> e) : n_(n), e_(std::move(e)) {}

  int n_ = 0;
  std::vector<double> e_;
};

/// Bijection of {1..n}; stored 0-based, constructed from a 1-based image.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation from_image(const std::vector<int>& image_one_based);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }  // 0-based
  const std::vector<int>& image() const { return image_; }
  std::vector<int> image_one_based() const;
  Permutation inverse() const;
  NonnegMatrix matrix() const;  // P with P(i, sigma(i)) = 1

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

/// Exponent vector with its sum and the normalized rescaling
/// beta_i = alpha_i / s_n, beta_scale_exponent = s_n - 1.
struct Weights {
  std::vector<double> alphas;
  double s_n = 0.0;
  std::vector<double> betas;
  double beta_scale_exponent = -1.0;

  static Weights of(std::vector<double> alphas);
  int size() const { return static_cast<int>(alphas.size()); }
  bool convex(double tol = 1e-12) const;
};

struct EntrywiseCmp {
  bool holds = false;
  double worst_gap = 0.0;  // max over entries of a - b
  int worst_i = -1;        // 0-based
  int worst_j = -1;
};

NonnegMatrix hadamard_product(const NonnegMatrix& a, const NonnegMatrix& b);

/// Entrywise t-th power with the convention 0^0 = 1 (a zero weight drops the
/// factor from a geometric mean).
NonnegMatrix hadamard_power(const NonnegMatrix& a, double t);

NonnegMatrix matmul(const NonnegMatrix& a, const NonnegMatrix& b);
NonnegMatrix matpow(const NonnegMatrix& a, long k);  // k >= 1
NonnegMatrix transpose(const NonnegMatrix& a);
NonnegMatrix linear_comb(const std::vector<double>& coeffs,
                         const std::vector<NonnegMatrix>& mats);

/// a <= b entrywise up to slack a(i,j) <= b(i,j)*(1+rtol) + atol.
EntrywiseCmp entrywise_leq(const NonnegMatrix& a, const NonnegMatrix& b,
                           double rtol = 1e-9, double atol = 1e-12);

double max_entry(const NonnegMatrix& a);

/// Scalar power with the same 0^0 = 1 convention as hadamard_power.
double pow0(double base, double expo);

}  // namespace hadspec

#endif  // HADSPEC_MATRIX_HPP
