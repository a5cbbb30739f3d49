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

#include "hadspec/constructions.hpp"
#include "test_util.hpp"

using namespace hadspec;

TEST_CASE("weighted geometric means") {
  const NonnegMatrix g = weighted_gmean(
      {M({{1, 4}, {9, 16}}), M({{4, 1}, {1, 4}})}, Weights::of({0.5, 0.5}));
  CHECK(g == M({{2, 2}, {3, 8}}));

  const NonnegMatrix k = M({{1, 2}, {3, 4}});
  CHECK(weighted_gmean({k}, Weights::of({1.0})) == k);

  const NonnegMatrix g2 = weighted_gmean(
      {M({{1, 2}, {3, 4}}), M({{4, 3}, {2, 1}})}, Weights::of({0.5, 0.5}));
  CHECK(g2(0, 0) == doctest::Approx(2.0));
  CHECK(g2(0, 1) == doctest::Approx(std::sqrt(6.0)));
  CHECK(g2(1, 0) == doctest::Approx(std::sqrt(6.0)));
  CHECK(g2(1, 1) == doctest::Approx(2.0));

  CHECK_THROWS_AS(weighted_gmean({}, Weights::of({1.0})), Error);
  // zero weights drop their factor entirely
  const NonnegMatrix dropped = weighted_gmean(
      {k, NonnegMatrix::zero(2)}, Weights::of({1.0, 0.0}));
  CHECK(dropped == k);
}

TEST_CASE("c_matrix") {
  const NonnegMatrix c = c_matrix(
      {M({{1, 4}, {9, 1}}), M({{4, 1}, {1, 3}})}, Weights::of({0.5, 0.5}));
  CHECK(c == M({{2.5, 2}, {3, 2}}));

  const NonnegMatrix k = M({{1, 2}, {3, 4}});
  CHECK(c_matrix({k}, Weights::of({1.0})) == k);

  const NonnegMatrix d = c_matrix(
      {M({{2, 0}, {0, 4}}), M({{6, 0}, {0, 0}})}, Weights::of({0.5, 0.5}));
  CHECK(d == M({{4, 0}, {0, 2}}));

  try {
    c_matrix({k, k}, Weights::of({0.3, 0.3}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::weights_not_convex);
  }
}

TEST_CASE("weighted symmetrizations") {
  const NonnegMatrix half = sym(M({{1, 2}, {8, 4}}), 0.5, 0.5);
  const NonnegMatrix want = M({{1, 4}, {4, 4}});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(approx(half(i, j), want(i, j), 1e-14));
  const NonnegMatrix s = M({{2, 3}, {3, 5}});
  const NonnegMatrix fixed = sym(s, 0.25, 0.75);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(approx(fixed(i, j), s(i, j), 1e-14));
  CHECK(sym(M({{1, 2}, {8, 4}}), 1.0, 1.0) == M({{1, 16}, {16, 16}}));
  try {
    sym(M({{1}}), 0.3, 0.3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::exponent_domain);
  }
}

TEST_CASE("grid bundles") {
  const NonnegMatrix d2 = M({{2, 0}, {0, 2}});
  const NonnegMatrix d3 = M({{3, 0}, {0, 3}});
  const GridBundle gb = grid_bundle({{d2, d3}}, Weights::of({1.0, 1.0}));
  CHECK(gb.H == M({{6, 0}, {0, 6}}));
  CHECK(gb.M == 3.0);
  CHECK(gb.beta == doctest::Approx(3.0));
  CHECK(gb.weights.betas[0] == doctest::Approx(0.5));
  CHECK(gb.delta == doctest::Approx(9.0));

  const NonnegMatrix a = M({{1, 2}, {3, 4}});
  const NonnegMatrix b = M({{4, 3}, {2, 1}});
  const GridBundle convex = grid_bundle({{a, b}}, Weights::of({0.5, 0.5}));
  CHECK(convex.beta == doctest::Approx(1.0));
  CHECK(convex.H == weighted_gmean({a, b}, Weights::of({0.5, 0.5})));

  const GridBundle col = grid_bundle({{a}, {b}}, Weights::of({1.0}));
  CHECK(col.H_list.size() == 1);
  CHECK(col.H_list[0] == matmul(a, b));
  CHECK(col.H == matmul(a, b));

  try {
    grid_bundle({{a, b}}, Weights::of({0.25, 0.25}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::weights_too_small);
  }
}

TEST_CASE("refinement sequences") {
  // 3-cycle: supports of K^(2^n) and its transpose stay disjoint
  const NonnegMatrix p3 = M({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const RefinementSequence r1 =
      refinement_sequence(p3, 0.5, {}, 3, Functional::spectral_radius);
  REQUIRE(r1.values.size() == 4);
  for (double v : r1.values) CHECK(v == 0.0);
  CHECK(r1.cap == doctest::Approx(1.0).epsilon(1e-9));

  const RefinementSequence r2 = refinement_sequence(
      M({{0, 4}, {1, 0}}), 0.5, {}, 2, Functional::spectral_radius);
  REQUIRE(r2.values.size() == 3);
  for (double v : r2.values) CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r2.cap == doctest::Approx(2.0).epsilon(1e-9));

  const RefinementSequence r3 = refinement_sequence(
      M({{1, 2}, {3, 4}}), 0.5, {}, 1, Functional::spectral_radius);
  REQUIRE(r3.values.size() == 2);
  CHECK(r3.values[0] == doctest::Approx(5.372281323269014).epsilon(1e-9));
  CHECK(r3.values[1] == doctest::Approx(5.372281323269014).epsilon(1e-9));

  CHECK_THROWS_AS(refinement_sequence(p3, 0.5, {}, 3, Functional::op_norm_2),
                  Error);
  CHECK_THROWS_AS(refinement_sequence(p3, 1.5, {}, 3,
                                      Functional::spectral_radius),
                  Error);
  CHECK_THROWS_AS(refinement_sequence(p3, 0.5, {}, 40,
                                      Functional::spectral_radius),
                  Error);
}

TEST_CASE("refinement is monotone under the cap on random inputs") {
  GenConfig cfg;
  cfg.min_dim = 2;
  cfg.max_dim = 5;
  Stream st(derive_key(21, "refine-prop", "", 0));
  for (int trial = 0; trial < 15; ++trial) {
    const NonnegMatrix k = gen_matrix(cfg, st);
    const double alpha = st.uniform01();
    const RefinementSequence rs =
        refinement_sequence(k, alpha, {}, 3, Functional::spectral_radius);
    for (std::size_t i = 0; i + 1 < rs.values.size(); ++i)
      CHECK(rs.values[i] <= rs.values[i + 1] * (1 + 1e-9) + 1e-12 +
                                rs.certified[i].width() +
                                rs.certified[i + 1].width());
    CHECK(rs.values.back() <=
          rs.cap * (1 + 1e-9) + 1e-12 + rs.cap_certified.width());
  }
}

TEST_CASE("alpha profiles") {
  const NonnegMatrix s = M({{2, 1}, {1, 2}});
  const AlphaProfile flat =
      alpha_profile(s, Functional::spectral_radius, 5);
  for (double v : flat.values) CHECK(v == doctest::Approx(3.0).epsilon(1e-9));

  const NonnegMatrix p3 = M({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const AlphaProfile cyc =
      alpha_profile(p3, Functional::spectral_radius, 5);
  CHECK(cyc.values[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cyc.values[1] == 0.0);
  CHECK(cyc.values[2] == 0.0);
  CHECK(cyc.values[3] == 0.0);
  CHECK(cyc.values[4] == doctest::Approx(1.0).epsilon(1e-9));

  // 2x2 trace and determinant are preserved by S_alpha at the endpoints and
  // the middle, so this profile is flat as well
  const AlphaProfile prof =
      alpha_profile(M({{1, 2}, {8, 4}}), Functional::spectral_radius, 3);
  CHECK(prof.values[0] == doctest::Approx(prof.values[2]).epsilon(1e-9));
  CHECK(prof.values[1] ==
        doctest::Approx(0.5 * (5 + std::sqrt(73.0))).epsilon(1e-9));

  CHECK_THROWS_AS(alpha_profile(s, Functional::spectral_radius, 4), Error);
  CHECK_THROWS_AS(alpha_profile(s, Functional::op_norm_1, 5), Error);
}

TEST_CASE("profiles are unimodal and symmetric on random inputs") {
  GenConfig cfg;
  cfg.min_dim = 2;
  cfg.max_dim = 5;
  Stream st(derive_key(22, "profile-prop", "", 0));
  const Functional fns[] = {Functional::spectral_radius, Functional::op_norm_2,
                            Functional::numerical_radius};
  for (int trial = 0; trial < 6; ++trial) {
    const NonnegMatrix k = gen_matrix(cfg, st);
    for (Functional f : fns) {
      const AlphaProfile prof = alpha_profile(k, f, 11);
      const int mid = 5;
      for (int i = 0; i < mid; ++i) {
        const double slack = 1e-9 * std::max(prof.values[i], prof.values[i + 1]) +
                             1e-12 + prof.certified[i].width() +
                             prof.certified[i + 1].width();
        CHECK(prof.values[i] + slack >= prof.values[i + 1]);  // nonincreasing
      }
      for (int i = mid; i + 1 < 11; ++i) {
        const double slack = 1e-9 * std::max(prof.values[i], prof.values[i + 1]) +
                             1e-12 + prof.certified[i].width() +
                             prof.certified[i + 1].width();
        CHECK(prof.values[i + 1] + slack >= prof.values[i]);  // nondecreasing
      }
      for (int i = 0; i < 11; ++i) {
        const int j = 10 - i;
        CHECK(approx(prof.values[i], prof.values[j], 1e-9,
                     1e-12 + prof.certified[i].width() +
                         prof.certified[j].width()));
      }
    }
  }
}

TEST_CASE("sandwich between geometric and arithmetic means") {
  GenConfig cfg;
  Stream st(derive_key(23, "sandwich", "", 0));
  for (int trial = 0; trial < 20; ++trial) {
    const int n = st.int_in(1, 5);
    const int count = st.int_in(1, 4);
    std::vector<NonnegMatrix> ks;
    for (int i = 0; i < count; ++i) ks.push_back(gen_matrix_dim(cfg, st, n));
    std::vector<double> raw(count);
    double sum = 0.0;
    for (double& v : raw) {
      v = st.uniform01() + 1e-3;
      sum += v;
    }
    for (double& v : raw) v /= sum;
    const Weights w = Weights::of(raw);
    const NonnegMatrix g = weighted_gmean(ks, w);
    const NonnegMatrix c = c_matrix(ks, w);
    const NonnegMatrix am = linear_comb(w.alphas, ks);
    CHECK(entrywise_leq(g, c).holds);
    CHECK(entrywise_leq(c, am).holds);
  }
}

TEST_CASE("adjoint identity for S_alpha") {
  Stream st(derive_key(24, "adjoint", "", 0));
  GenConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    const NonnegMatrix k = gen_matrix(cfg, st);
    const double alpha = st.uniform01();
    CHECK(transpose(sym(k, alpha, 1.0 - alpha)) ==
          sym(k, 1.0 - alpha, alpha));
    CHECK(transpose(sym(k, alpha, 1.0 - alpha)) ==
          sym(transpose(k), alpha, 1.0 - alpha));
  }
}

TEST_CASE("squares of symmetrizations are dominated") {
  Stream st(derive_key(25, "lemma-sq", "", 0));
  GenConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    const NonnegMatrix k = gen_matrix(cfg, st);
    const double alpha = st.uniform01();
    const NonnegMatrix sa = sym(k, alpha, 1.0 - alpha);
    CHECK(entrywise_leq(matmul(sa, sa), sym(matpow(k, 2), alpha, 1.0 - alpha))
              .holds);
    const double s = st.uniform(1.0, 2.5);
    const double a2 = s * st.uniform01();
    const double b2 = s - a2;
    const NonnegMatrix sab = sym(k, a2, b2);
    CHECK(entrywise_leq(matmul(sab, sab), sym(matpow(k, 2), a2, b2)).holds);
  }
}

TEST_CASE("half symmetrization preserves 2x2 spectra") {
  Stream st(derive_key(26, "sharp-2x2", "", 0));
  GenConfig cfg;
  cfg.min_dim = cfg.max_dim = 2;
  for (int trial = 0; trial < 200; ++trial) {
    const NonnegMatrix k = gen_matrix(cfg, st);
    const double rk = spectral_radius(k).value;
    const double rs = spectral_radius(sym_half(k)).value;
    CHECK(approx(rs, rk, 1e-9, 1e-13));
  }
}

TEST_CASE("pair families") {
  const NonnegMatrix h1 = M({{1, 2}, {3, 4}});
  const NonnegMatrix h2 = M({{0, 1}, {2, 5}});
  const Permutation id2 = Permutation::identity(2);

  const auto fa = pair_family({h1, h2}, id2, {}, PairKind::A);
  REQUIRE(fa.size() == 2);
  CHECK(fa[0] == matmul(transpose(h1), h2));
  CHECK(fa[1] == matmul(transpose(h2), h1));

  const auto fb = pair_family({h1, h2}, id2, {}, PairKind::B);
  CHECK(fb[0] == matmul(h1, transpose(h2)));
  CHECK(fb[1] == matmul(h2, transpose(h1)));

  const auto fq = pair_family({h1, h2}, id2, id2, PairKind::Q);
  const NonnegMatrix g1 = matmul(transpose(h1), h1);
  const NonnegMatrix g2 = matmul(transpose(h2), h2);
  CHECK(fq[0] == matmul(g1, g2));
  CHECK(fq[1] == matmul(g2, g1));

  try {
    pair_family({h1, h2, h1}, Permutation::identity(3), {}, PairKind::A);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::odd_m);
  }
  try {
    pair_family({h1, h2}, id2, {}, PairKind::Q);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::missing_permutation);
  }
}

TEST_CASE("cyclic products share one spectral radius") {
  const NonnegMatrix a = M({{1, 2}, {3, 4}});
  CHECK(cyclic_products({a}).size() == 1);
  const NonnegMatrix b = M({{0, 1}, {2, 5}});
  const auto two = cyclic_products({a, b});
  CHECK(two[0] == matmul(a, b));
  CHECK(two[1] == matmul(b, a));
  const auto eyes = cyclic_products(
      {NonnegMatrix::identity(2), NonnegMatrix::identity(2)});
  CHECK(eyes[0] == NonnegMatrix::identity(2));

  Stream st(derive_key(27, "cyclic", "", 0));
  GenConfig cfg;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = st.int_in(1, 4);
    const int count = st.int_in(1, 4);
    std::vector<NonnegMatrix> as;
    for (int i = 0; i < count; ++i) as.push_back(gen_matrix_dim(cfg, st, n));
    const auto rots = cyclic_products(as);
    const double r0 = spectral_radius(rots[0]).value;
    for (const auto& rot : rots)
      CHECK(approx(spectral_radius(rot).value, r0, 1e-9, 1e-12));
  }
}
