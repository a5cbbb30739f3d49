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

#include <doctest.h>

#include <cmath>

#include "hadspec/spectral.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hadspec;

namespace {
// frozen from the 2x2 characteristic-polynomial oracle
constexpr double kR12 = 5.372281323269014;    // (5+sqrt(33))/2
constexpr double kOp2 = 5.464985704219043;    // sqrt((30+sqrt(884))/2)
constexpr double kW12 = 5.415475947422650;    // (5+sqrt(34))/2
}  // namespace

TEST_CASE("frozen named values agree with the oracle") {
  CHECK(oracles::radius_2x2(1, 2, 3, 4) == doctest::Approx(kR12).epsilon(1e-15));
  CHECK(oracles::opnorm2_2x2(1, 2, 3, 4) == doctest::Approx(kOp2).epsilon(1e-15));
  CHECK(oracles::numrad_2x2(1, 2, 3, 4) == doctest::Approx(kW12).epsilon(1e-15));
}

TEST_CASE("spectral radius on basic matrices") {
  const CertifiedValue id3 = spectral_radius(NonnegMatrix::identity(3));
  CHECK(id3.converged);
  CHECK(id3.lo <= 1.0);
  CHECK(id3.hi >= 1.0);
  CHECK(id3.value == doctest::Approx(1.0).epsilon(1e-14));

  const CertifiedValue nil = spectral_radius(M({{0, 1}, {0, 0}}));
  CHECK(nil.converged);
  CHECK(nil.value == 0.0);
  CHECK(nil.width() == 0.0);

  const CertifiedValue r = spectral_radius(M({{1, 2}, {3, 4}}));
  CHECK(r.converged);
  CHECK(r.lo <= kR12);
  CHECK(r.hi >= kR12 * (1 - 1e-15));
  CHECK(r.value == doctest::Approx(kR12).epsilon(1e-10));
  CHECK(r.width() <= std::max(1e-10 * r.value, 1e-14));
}

TEST_CASE("spectral radius handles reducible and periodic inputs") {
  // upper triangular: strongly connected components are singletons
  const CertifiedValue tri = spectral_radius(M({{2, 1}, {0, 1}}));
  CHECK(tri.converged);
  CHECK(tri.value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(tri.width() <= 1e-13);

  const CertifiedValue cyc =
      spectral_radius(M({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK(cyc.converged);
  CHECK(cyc.value == doctest::Approx(1.0).epsilon(1e-10));

  // equal-radius diagonal blocks
  const CertifiedValue blocks =
      spectral_radius(M({{0, 2, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}}));
  CHECK(blocks.converged);
  CHECK(blocks.value == doctest::Approx(2.0).epsilon(1e-10));

  // small spectral gap exercises the dyadic squaring fallback
  const CertifiedValue close = spectral_radius(M({{1, 1}, {1e-12, 1}}));
  CHECK(close.converged);
  const double expect = oracles::radius_2x2(1, 1, 1e-12, 1);
  CHECK(close.lo <= expect + 1e-12);
  CHECK(close.hi >= expect - 1e-12);
}

TEST_CASE("operator norms") {
  const NonnegMatrix a = M({{1, 2}, {3, 4}});
  CHECK(op_norm(a, PNorm::one) == 6.0);
  CHECK(op_norm(a, PNorm::inf) == 7.0);
  CHECK(op_norm(a, PNorm::two) == doctest::Approx(kOp2).epsilon(1e-10));
  CHECK(op_norm(NonnegMatrix::constant(3, 1.0), PNorm::two) ==
        doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("numerical radius") {
  CHECK(numerical_radius(M({{0, 1}, {0, 0}})) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(numerical_radius(M({{2, 1}, {1, 2}})) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(numerical_radius(M({{1, 2}, {3, 4}})) ==
        doctest::Approx(kW12).epsilon(1e-10));
}

TEST_CASE("evaluate dispatches") {
  CHECK(evaluate(Functional::max_entry, M({{1, 5}, {0, 2}})) == 5.0);
  CHECK(evaluate(Functional::spectral_radius, NonnegMatrix::identity(2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(evaluate(Functional::op_norm_2, NonnegMatrix::constant(3, 1.0)) ==
        doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("functional properties on random matrices") {
  GenConfig cfg;
  cfg.entry_model = EntryModel::loguniform;
  cfg.min_dim = 1;
  cfg.max_dim = 6;
  // relative-accurate evaluations at every scale: the math properties are
  // exact, so a tiny rtol and a negligible atol keep the asserts honest
  SpectralOptions tight;
  tight.rtol = 1e-12;
  tight.atol = 1e-300;
  Stream st(derive_key(5, "spectral-props", "", 0));
  const Functional all[] = {Functional::spectral_radius, Functional::op_norm_1,
                            Functional::op_norm_2, Functional::op_norm_inf,
                            Functional::numerical_radius,
                            Functional::max_entry};
  for (int trial = 0; trial < 40; ++trial) {
    const NonnegMatrix a = gen_matrix(cfg, st);
    const int n = a.dim();
    NonnegMatrix extra = gen_matrix_dim(cfg, st, n);
    const NonnegMatrix b = linear_comb({1.0, 1.0}, {a, extra});
    const double c = st.uniform(0.0, 3.0);

    for (Functional f : all) {
      const double fa = evaluate(f, a, tight);
      const double fb = evaluate(f, b, tight);
      CHECK(fa <= fb * (1 + 1e-9) + 1e-12);  // monotone in the entries
      const double scaled = evaluate(f, linear_comb({c}, {a}), tight);
      CHECK(approx(scaled, c * fa, 1e-10));
    }

    const NonnegMatrix at = transpose(a);
    CHECK(approx(evaluate(Functional::spectral_radius, at, tight),
                 evaluate(Functional::spectral_radius, a, tight), 1e-9));
    CHECK(approx(evaluate(Functional::op_norm_2, at, tight),
                 evaluate(Functional::op_norm_2, a, tight), 1e-9));
    CHECK(evaluate(Functional::op_norm_1, at) ==
          evaluate(Functional::op_norm_inf, a));
    CHECK(approx(evaluate(Functional::numerical_radius, at, tight),
                 evaluate(Functional::numerical_radius, a, tight), 1e-9));

    const double r = evaluate(Functional::spectral_radius, a, tight);
    const double w = evaluate(Functional::numerical_radius, a, tight);
    const double o2 = evaluate(Functional::op_norm_2, a, tight);
    CHECK(r <= w * (1 + 1e-9) + 1e-15);
    CHECK(w <= o2 * (1 + 1e-9) + 1e-15);
    const double me = max_entry(a);
    CHECK(me <= evaluate(Functional::op_norm_1, a) * (1 + 1e-9) + 1e-15);
    CHECK(me <= o2 * (1 + 1e-9) + 1e-15);
    CHECK(me <= evaluate(Functional::op_norm_inf, a) * (1 + 1e-9) + 1e-15);
    CHECK(o2 <= std::sqrt(evaluate(Functional::op_norm_1, a) *
                          evaluate(Functional::op_norm_inf, a)) *
                    (1 + 1e-9) +
                1e-15);
  }
}

TEST_CASE("permutation similarity preserves the spectral radius") {
  GenConfig cfg;
  Stream st(derive_key(6, "perm-sim", "", 0));
  for (int trial = 0; trial < 20; ++trial) {
    const NonnegMatrix a = gen_matrix(cfg, st);
    const int n = a.dim();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    for (int i = n - 1; i > 0; --i)
      std::swap(img[i], img[st.int_in(0, i)]);
    const NonnegMatrix p = Permutation::from_image(img).matrix();
    const NonnegMatrix conj = matmul(matmul(p, a), transpose(p));
    CHECK(approx(spectral_radius(conj).value, spectral_radius(a).value, 1e-9,
                 1e-12));
  }
}

TEST_CASE("certified brackets contain the closed-form oracle") {
  GenConfig cfg;
  cfg.min_dim = 2;
  cfg.max_dim = 2;
  Stream st(derive_key(7, "oracle-2x2", "", 0));
  for (int trial = 0; trial < 500; ++trial) {
    const NonnegMatrix a = gen_matrix(cfg, st);
    const CertifiedValue cv = spectral_radius(a);
    const double expect = oracles::radius_2x2(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
    const double slack = 1e-12 * std::max(1.0, expect);
    CHECK(cv.lo <= expect + slack);
    CHECK(cv.hi >= expect - slack);
    CHECK(cv.width() <= std::max(1e-10 * cv.value, 1e-14));
  }
  cfg.min_dim = cfg.max_dim = 3;
  Stream st3(derive_key(7, "oracle-3x3", "", 0));
  for (int trial = 0; trial < 200; ++trial) {
    const NonnegMatrix a = gen_matrix(cfg, st3);
    const CertifiedValue cv = spectral_radius(a);
    double m[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = a(i, j);
    double err = 0.0;
    const double expect = oracles::radius_3x3(m, &err);
    const double slack = err + 1e-12 * std::max(1.0, expect);
    CHECK(cv.lo <= expect + slack);
    CHECK(cv.hi >= expect - slack);
    CHECK(cv.width() <= std::max(1e-10 * cv.value, 1e-14));
  }
}

TEST_CASE("two-norm squared matches r(A^T A)") {
  GenConfig cfg;
  SpectralOptions tight;
  tight.rtol = 1e-12;
  tight.atol = 1e-300;
  Stream st(derive_key(8, "op2-cross", "", 0));
  for (int trial = 0; trial < 20; ++trial) {
    const NonnegMatrix a = gen_matrix(cfg, st);
    const double o2 = op_norm(a, PNorm::two, tight);
    const double rata =
        spectral_radius(matmul(transpose(a), a), tight).value;
    CHECK(approx(o2 * o2, rata, 1e-9));
  }
}

TEST_CASE("extreme scales stay certified") {
  for (double scale : {1e-6, 1.0, 1e6}) {
    const NonnegMatrix a = M({{scale, 2 * scale}, {3 * scale, 4 * scale}});
    const CertifiedValue cv = spectral_radius(a);
    CHECK(cv.converged);
    CHECK(cv.value == doctest::Approx(kR12 * scale).epsilon(1e-9));
  }
}
