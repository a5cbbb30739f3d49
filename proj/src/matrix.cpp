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

#include "hadspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hadspec {

namespace {

std::string at(int i, int j) {  // 1-based for messages
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void check_same_dim(const NonnegMatrix& a, const NonnegMatrix& b,
                    const char* op) {
  if (a.dim() != b.dim())
    raise(errc::dimension_mismatch,
          std::string(op) + ": dimensions " + std::to_string(a.dim()) +
              " and " + std::to_string(b.dim()) + " differ");
}

}  // namespace

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_square: return "NonSquare";
    case errc::negative_entry: return "NegativeEntry";
    case errc::non_finite_entry: return "NonFiniteEntry";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::negative_exponent: return "NegativeExponent";
    case errc::exponent_domain: return "ExponentDomain";
    case errc::weights_not_convex: return "WeightsNotConvex";
    case errc::weights_too_small: return "WeightsTooSmall";
    case errc::empty_list: return "EmptyList";
    case errc::odd_m: return "OddM";
    case errc::missing_permutation: return "MissingPermutation";
    case errc::unknown_law: return "UnknownLaw";
    case errc::input_shape_mismatch: return "InputShapeMismatch";
    case errc::unsatisfiable: return "Unsatisfiable";
    case errc::depth_overflow: return "DepthOverflow";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::bad_argument: return "BadArgument";
  }
  return "Error";
}

NonnegMatrix NonnegMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) raise(errc::non_square, "matrix must have at least one row");
  std::vector<double> e;
  e.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      raise(errc::non_square, "row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    e.insert(e.end(), rows[i].begin(), rows[i].end());
  }
  return from_entries(n, std::move(e));
}

NonnegMatrix NonnegMatrix::from_entries(int n, std::vector<double> entries) {
  if (n < 1) raise(errc::non_square, "dimension must be positive");
  if (entries.size() != static_cast<std::size_t>(n) * n)
    raise(errc::non_square, "entry count does not match dimension");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = entries[static_cast<std::size_t>(i) * n + j];
      if (std::isnan(v) || std::isinf(v))
        raise(errc::non_finite_entry, "entry " + at(i, j) + " is not finite");
      if (v < 0.0)
        raise(errc::negative_entry,
              "entry " + at(i, j) + " is negative: " + std::to_string(v));
    }
  return NonnegMatrix(n, std::move(entries));
}

NonnegMatrix NonnegMatrix::zero(int n) {
  if (n < 1) raise(errc::non_square, "dimension must be positive");
  return NonnegMatrix(n, std::vector<double>(static_cast<std::size_t>(n) * n));
}

NonnegMatrix NonnegMatrix::identity(int n) {
  NonnegMatrix m = zero(n);
  for (int i = 0; i < n; ++i) m.e_[static_cast<std::size_t>(i) * n + i] = 1.0;
  return m;
}

NonnegMatrix NonnegMatrix::constant(int n, double v) {
  if (n < 1) raise(errc::non_square, "dimension must be positive");
  if (!(v >= 0.0) || std::isinf(v))
    raise(errc::negative_entry, "constant must be finite nonnegative");
  return NonnegMatrix(
      n, std::vector<double>(static_cast<std::size_t>(n) * n, v));
}

Permutation Permutation::identity(int n) {
  if (n < 1) raise(errc::bad_argument, "permutation size must be positive");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::from_image(const std::vector<int>& image_one_based) {
  const int n = static_cast<int>(image_one_based.size());
  if (n < 1) raise(errc::bad_argument, "permutation size must be positive");
  std::vector<int> img(n);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    const int v = image_one_based[i] - 1;
    if (v < 0 || v >= n || seen[v])
      raise(errc::bad_argument,
            "image is not a bijection of {1.." + std::to_string(n) + "}");
    seen[v] = 1;
    img[i] = v;
  }
  return Permutation(std::move(img));
}

std::vector<int> Permutation::image_one_based() const {
  std::vector<int> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[image_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

NonnegMatrix Permutation::matrix() const {
  const int n = size();
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    e[static_cast<std::size_t>(i) * n + image_[i]] = 1.0;
  return NonnegMatrix::from_entries(n, std::move(e));
}

Weights Weights::of(std::vector<double> alphas) {
  if (alphas.empty()) raise(errc::empty_list, "weights must be nonempty");
  double s = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double a = alphas[i];
    if (std::isnan(a) || std::isinf(a))
      raise(errc::non_finite_entry,
            "weight " + std::to_string(i + 1) + " is not finite");
    if (a < 0.0)
      raise(errc::negative_entry,
            "weight " + std::to_string(i + 1) + " is negative");
    s += a;
  }
  Weights w;
  w.alphas = std::move(alphas);
  w.s_n = s;
  w.beta_scale_exponent = s - 1.0;
  if (s > 0.0) {
    w.betas.resize(w.alphas.size());
    for (std::size_t i = 0; i < w.alphas.size(); ++i)
      w.betas[i] = w.alphas[i] / s;
  }
  return w;
}

bool Weights::convex(double tol) const { return std::fabs(s_n - 1.0) <= tol; }

double pow0(double base, double expo) {
  if (expo == 0.0) return 1.0;
  if (expo == 1.0) return base;
  return std::pow(base, expo);
}

NonnegMatrix hadamard_product(const NonnegMatrix& a, const NonnegMatrix& b) {
  check_same_dim(a, b, "hadamard_product");
  const int n = a.dim();
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (std::size_t k = 0; k < e.size(); ++k)
    e[k] = a.entries()[k] * b.entries()[k];
  return NonnegMatrix::from_entries(n, std::move(e));
}

NonnegMatrix hadamard_power(const NonnegMatrix& a, double t) {
  if (std::isnan(t) || t < 0.0)
    raise(errc::negative_exponent, "hadamard_power exponent must be >= 0");
  const int n = a.dim();
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = pow0(a.entries()[k], t);
  return NonnegMatrix::from_entries(n, std::move(e));
}

NonnegMatrix matmul(const NonnegMatrix& a, const NonnegMatrix& b) {
  check_same_dim(a, b, "matmul");
  const int n = a.dim();
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j)
        e[static_cast<std::size_t>(i) * n + j] += aik * b(k, j);
    }
  return NonnegMatrix::from_entries(n, std::move(e));
}

NonnegMatrix matpow(const NonnegMatrix& a, long k) {
  if (k < 1) raise(errc::bad_argument, "matpow exponent must be >= 1");
  NonnegMatrix base = a;
  NonnegMatrix acc = NonnegMatrix::identity(a.dim());
  bool have = false;
  while (k > 0) {
    if (k & 1) {
      acc = have ? matmul(acc, base) : base;
      have = true;
    }
    k >>= 1;
    if (k > 0) base = matmul(base, base);
  }
  return acc;
}

NonnegMatrix transpose(const NonnegMatrix& a) {
  const int n = a.dim();
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e[static_cast<std::size_t>(j) * n + i] = a(i, j);
  return NonnegMatrix::from_entries(n, std::move(e));
}

NonnegMatrix linear_comb(const std::vector<double>& coeffs,
                         const std::vector<NonnegMatrix>& mats) {
  if (mats.empty()) raise(errc::empty_list, "linear_comb needs matrices");
  if (coeffs.size() != mats.size())
    raise(errc::length_mismatch, "linear_comb: " + std::to_string(coeffs.size()) +
                                     " coefficients for " +
                                     std::to_string(mats.size()) + " matrices");
  const int n = mats[0].dim();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!(coeffs[k] >= 0.0) || std::isinf(coeffs[k]))
      raise(errc::negative_entry,
            "coefficient " + std::to_string(k + 1) + " must be nonnegative");
    if (mats[k].dim() != n)
      raise(errc::dimension_mismatch, "linear_comb: mixed dimensions");
  }
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const double c = coeffs[k];
    if (c == 0.0) continue;
    for (std::size_t idx = 0; idx < e.size(); ++idx)
      e[idx] += c * mats[k].entries()[idx];
  }
  return NonnegMatrix::from_entries(n, std::move(e));
}

EntrywiseCmp entrywise_leq(const NonnegMatrix& a, const NonnegMatrix& b,
                           double rtol, double atol) {
  check_same_dim(a, b, "entrywise_leq");
  const int n = a.dim();
  EntrywiseCmp out;
  out.holds = true;
  out.worst_gap = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double av = a(i, j);
      const double bv = b(i, j);
      const double gap = av - bv;
      if (gap > out.worst_gap) {
        out.worst_gap = gap;
        out.worst_i = i;
        out.worst_j = j;
      }
      if (av > bv * (1.0 + rtol) + atol) out.holds = false;
    }
  return out;
}

double max_entry(const NonnegMatrix& a) {
  double m = 0.0;
  for (double v : a.entries()) m = std::max(m, v);
  return m;
}

}  // namespace hadspec
