// Copyright 2026 The opk authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch.hpp>

#include "opk/lperm.hpp"

using namespace opk;

TEST_CASE("unitized random generators are exact") {
  AlgebraPtr m2 = make_algebra(Field::Complex, {2});
  Rng rng(51);
  for (int t = 0; t < 10; ++t) {
    UM w = random_unitized_unitary(rng, m2, 2, 2);
    UM one = StarMatrix<Unitized<GRat>>::identity(2, Unitized<GRat>::zero(m2));
    REQUIRE(adjoint(w) * w == one);
    REQUIRE(w * adjoint(w) == one);

    UM p = random_unitized_projection(rng, m2, 2);
    REQUIRE(is_projection_matrix(p));

    LMor u = random_lmor(rng, m2, 2);
    REQUIRE(is_partial_isometry_matrix(u.mat, u.src, u.tgt));

    auto chain = random_lmor_chain(rng, m2, 3, 2);
    for (const auto& h : chain) REQUIRE(is_partial_isometry_matrix(h.mat, h.src, h.tgt));
    for (std::size_t k = 1; k < chain.size(); ++k) REQUIRE(chain[k].src == chain[k - 1].tgt);
  }
}

TEST_CASE("otimes basics") {
  AlgebraPtr alg = complex_field();
  Rng rng(52);

  SECTION("the identity injection is the identity") {
    UM p = random_unitized_projection(rng, alg, 2);
    REQUIRE(otimes_matrix(InjTuple::identity(), {p}, alg) == p);
  }
  SECTION("an empty factor absorbs") {
    UM p = random_unitized_projection(rng, alg, 2);
    REQUIRE(otimes_matrix(InjTuple::interleaving(2), {p, UM()}, alg) == UM());
  }
  SECTION("purely scalar factors reduce to the scalar Kronecker") {
    GM a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    UM ua = embed_scalar_matrix(a, alg), ub = embed_scalar_matrix(b, alg);
    UM prod = otimes_matrix(InjTuple::interleaving(2), {ua, ub}, alg);
    REQUIRE(prod == embed_scalar_matrix(kron<GRat>({a, b}, GRat(1)), alg));
  }
  SECTION("arity zero gives the unit object") {
    UM unit = otimes_matrix(InjTuple(), {}, alg);
    REQUIRE(unit.rows() == 1);
    REQUIRE(unit.at(1, 1) == Unitized<GRat>::unit(alg));
  }
}

TEST_CASE("additive braiding matches the block swap") {
  AlgebraPtr alg = complex_field();
  Rng rng(53);
  UM p1 = random_unitized_projection(rng, alg, 1);
  UM p2 = random_unitized_projection(rng, alg, 2);
  LMor tau = tau_oplus(FinMap::transposition(2, 1, 2), {p1, p2}, alg);
  REQUIRE(is_partial_isometry_matrix(tau.mat, tau.src, tau.tgt));
  // The braiding matrix is [[0, P2], [P1, 0]] in block form.
  REQUIRE(tau.mat.at(1, 1).is_zero());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) REQUIRE(tau.mat.at(i, 1 + j) == p2.at(i, j));
  REQUIRE(tau.mat.at(3, 1) == p1.at(1, 1));
  // Identity braiding is the identity morphism of the sum.
  LMor tid = tau_oplus(FinMap::identity(2), {p1, p2}, alg);
  REQUIRE(tid.mat == tid.src);
}

TEST_CASE("delta distributivity morphism") {
  AlgebraPtr alg = complex_field();
  Rng rng(54);
  SECTION("arity one is the identity") {
    std::vector<UM> fam = {random_unitized_projection(rng, alg, 1),
                           random_unitized_projection(rng, alg, 2)};
    LMor d = delta_dist(InjTuple::identity(), {fam}, alg);
    REQUIRE(d.mat == d.src);
    REQUIRE(d.src == d.tgt);
  }
  SECTION("scalar projections reduce to the permutation of the shuffle") {
    // With <a^i> = (1, 2) and scalar entries the morphism is the non-monotone
    // shuffle permutation times the product projection.
    GM e1 = GM::zero(2, 2, GRat());
    e1.at(1, 1) = GRat(1);
    UM p = embed_scalar_matrix(e1, alg);
    std::vector<std::vector<UM>> fams = {{p}, {p, p}};
    InjTuple f = InjTuple::interleaving(2);
    LMor d = delta_dist(f, fams, alg);
    REQUIRE(is_partial_isometry_matrix(d.mat, d.src, d.tgt));
    FinMap shuffle = delta_bijection(2, {1, 2}, {{2}, {2, 2}});
    UM perm = perm_matrix(shuffle, Unitized<GRat>::unit(alg));
    REQUIRE(d.mat == perm * d.src);
  }
}

TEST_CASE("coherence suite over the commutative two-block algebra") {
  AlgebraPtr c2 = make_algebra(Field::Complex, {1, 1});
  SuiteReport rep = lperm_coherence_suite(c2, 30, 55);
  for (const auto& law : rep.laws) {
    INFO(law.id);
    CHECK(law.failures.empty());
  }
  REQUIRE(rep.passed());
}

TEST_CASE("coherence suite over the noncommutative 2x2 block algebra") {
  AlgebraPtr m2 = make_algebra(Field::Complex, {2});
  SuiteReport rep = lperm_coherence_suite(m2, 30, 56);
  for (const auto& law : rep.laws) {
    INFO(law.id);
    CHECK(law.failures.empty());
  }
  REQUIRE(rep.passed());
}

TEST_CASE("negative control: honest Kronecker breaks over a noncommutative algebra") {
  AlgebraPtr m2 = make_algebra(Field::Complex, {2});
  REQUIRE(corrupted_otimes_breaks_composition(m2, 50, 57));
}
