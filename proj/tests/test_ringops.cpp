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

#include "opk/ringops.hpp"

using namespace opk;

TEST_CASE("hat composition") {
  SECTION("identities") {
    Rng rng(61);
    HatMor f = random_hat_mor(rng, 3, 2);
    REQUIRE(hat_compose(f, hat_identity(3)) == f);
    REQUIRE(hat_compose(hat_identity(2), f) == f);
  }
  SECTION("eta is a functor section") {
    Rng rng(62);
    for (int t = 0; t < 100; ++t) {
      int m0 = rng.range(0, 4), m1 = rng.range(0, 4), m2 = rng.range(0, 4);
      BasedMap p1 = random_based_map(rng, m0, m1);
      BasedMap p2 = random_based_map(rng, m1, m2);
      if (!p1.in_Pi() || !p2.in_Pi()) continue;
      REQUIRE(hat_compose(hat_eta(p2), hat_eta(p1)) == hat_eta(p2 * p1));
    }
  }
  SECTION("composite over the fold map lists components in fiber order") {
    // f2 over phi_2: one element of arity 2; f1 = identity on two coordinates.
    HatMor f2{BasedMap::phi(2), {InjTuple::interleaving(2)}};
    HatMor f1 = hat_identity(2);
    HatMor c = hat_compose(f2, f1);
    REQUIRE(c.psi == BasedMap::phi(2));
    REQUIRE(c.comps.size() == 1);
    REQUIRE(c.comps[0] == InjTuple::interleaving(2));

    // Both over phi: the composite has one component of arity 4 whose parts
    // compose the interleavings in lexicographic fiber order.
    HatMor g2{BasedMap::phi(2), {InjTuple::interleaving(2)}};
    HatMor g1{BasedMap(2, 2, {1, 2}),
              {InjTuple::interleaving(1), InjTuple::interleaving(1)}};
    HatMor d = hat_compose(g2, g1);
    REQUIRE(d.comps[0].arity() == 2);
  }
  SECTION("associativity and units on random triples") {
    Rng rng(63);
    for (int t = 0; t < 200; ++t) {
      int m0 = rng.range(0, 3), m1 = rng.range(0, 3), m2 = rng.range(0, 3),
          m3 = rng.range(0, 3);
      HatMor a = random_hat_mor(rng, m0, m1);
      HatMor b = random_hat_mor(rng, m1, m2);
      HatMor c = random_hat_mor(rng, m2, m3);
      REQUIRE(hat_compose(c, hat_compose(b, a)) == hat_compose(hat_compose(c, b), a));
      REQUIRE(hat_compose(a, hat_identity(m0)) == a);
      REQUIRE(hat_compose(hat_identity(m1), a) == a);
    }
  }
}

TEST_CASE("wreath composition") {
  Rng rng(64);
  SECTION("identity laws") {
    for (int t = 0; t < 50; ++t) {
      WreathObject x = random_wreath_object(rng, 3, 3);
      WreathObject y = random_wreath_object(rng, 3, 3);
      WreathMor w = random_wreath_mor(rng, x, y);
      REQUIRE(wreath_compose(w, wreath_identity(x)) == w);
      REQUIRE(wreath_compose(wreath_identity(y), w) == w);
    }
  }
  SECTION("associativity on random triples") {
    for (int t = 0; t < 200; ++t) {
      WreathObject x0 = random_wreath_object(rng, 3, 3);
      WreathObject x1 = random_wreath_object(rng, 3, 3);
      WreathObject x2 = random_wreath_object(rng, 3, 3);
      WreathObject x3 = random_wreath_object(rng, 3, 3);
      WreathMor a = random_wreath_mor(rng, x0, x1);
      WreathMor b = random_wreath_mor(rng, x1, x2);
      WreathMor c = random_wreath_mor(rng, x2, x3);
      REQUIRE(wreath_compose(c, wreath_compose(b, a)) ==
              wreath_compose(wreath_compose(c, b), a));
    }
  }
  SECTION("morphisms with singleton fibers compose as based maps") {
    for (int t = 0; t < 100; ++t) {
      WreathObject x0 = random_wreath_object(rng, 3, 2);
      WreathObject x1 = random_wreath_object(rng, 3, 2);
      WreathObject x2 = random_wreath_object(rng, 3, 2);
      BasedMap p1 = random_based_map(rng, x0.m, x1.m);
      BasedMap p2 = random_based_map(rng, x1.m, x2.m);
      if (!p1.in_Pi() || !p2.in_Pi()) continue;
      WreathMor a{x0, x1, hat_eta(p1), {}};
      for (int i1 = 1; i1 <= x1.m; ++i1) {
        std::vector<int> parts = fiber_a_parts(x0, p1.preimage(i1));
        DepProd smash(static_cast<int>(parts.size()), parts);
        a.kappas.push_back(random_based_map(rng, smash.total(), x1.as[i1 - 1]));
      }
      validate_wreath(a);
      WreathMor b{x1, x2, hat_eta(p2), {}};
      for (int i2 = 1; i2 <= x2.m; ++i2) {
        std::vector<int> parts = fiber_a_parts(x1, p2.preimage(i2));
        DepProd smash(static_cast<int>(parts.size()), parts);
        b.kappas.push_back(random_based_map(rng, smash.total(), x2.as[i2 - 1]));
      }
      validate_wreath(b);
      WreathMor c = wreath_compose(b, a);
      REQUIRE(c.fhat == hat_eta(p2 * p1));  // the operad layer stays degenerate
    }
  }
}

namespace {

AlgebraPtr test_alg() { return complex_field(); }

struct SliceChain {
  // psi_k : X_k -> X_{k-1}; tuples P_k at X_k with morphisms U_k: P_k -> F(psi_k) P_{k+1}.
  std::vector<WreathObject> xs;
  std::vector<WreathMor> psis;
  std::vector<std::vector<UM>> ps;
  std::vector<std::vector<LMor>> us;
};

// Build a composable chain of Street data ending in a random tuple.
SliceChain random_slice_chain(Rng& rng, const AlgebraPtr& alg, int len) {
  SliceChain ch;
  ch.xs.push_back(random_wreath_object(rng, 2, 2, 1, 1));
  for (int k = 1; k <= len; ++k) {
    ch.xs.push_back(random_wreath_object(rng, 2, 2, 1, 1));
    ch.psis.push_back(random_wreath_mor(rng, ch.xs[k], ch.xs[k - 1], true));
  }
  ch.ps.resize(len + 1);
  ch.us.resize(len);
  ch.ps[len] = random_object_tuple(rng, ch.xs[len], alg, 2);
  for (int k = len - 1; k >= 0; --k) {
    std::vector<UM> target = lax_apply_objects(ch.psis[k], ch.ps[k + 1], alg);
    // P_k: unitary conjugates of the targets, with the tautological morphisms.
    std::vector<UM> pk;
    std::vector<LMor> uk;
    for (const auto& tslot : target) {
      if (tslot.is_empty()) {
        pk.push_back(tslot);
        uk.push_back(identity_morphism(tslot));
        continue;
      }
      UM w = random_unitized_unitary(rng, alg, tslot.rows(), 2);
      UM p = w * tslot * adjoint(w);
      pk.push_back(p);
      uk.push_back(make_morphism(tslot * adjoint(w), p, tslot));
    }
    ch.ps[k] = pk;
    ch.us[k] = uk;
  }
  return ch;
}

}  // namespace

TEST_CASE("lax functor images") {
  AlgebraPtr alg = test_alg();
  Rng rng(65);

  SECTION("identity morphisms act as the identity") {
    WreathObject x = random_wreath_object(rng, 2, 2);
    std::vector<UM> ps = random_object_tuple(rng, x, alg);
    REQUIRE(lax_apply_objects(wreath_identity(x), ps, alg) == ps);
  }
  SECTION("coordinate projections select sub-tuples and jointly biject") {
    WreathObject x{2, {2, 1}};
    std::vector<UM> ps = random_object_tuple(rng, x, alg);
    DepSum idx = object_index(x);
    for (int i = 1; i <= x.m; ++i) {
      WreathObject tgt{1, {x.as[i - 1]}};
      WreathMor sel{x, tgt, hat_eta(BasedMap::delta(x.m, i)),
                    {BasedMap::identity(x.as[i - 1])}};
      validate_wreath(sel);
      std::vector<UM> img = lax_apply_objects(sel, ps, alg);
      for (int a = 1; a <= x.as[i - 1]; ++a)
        REQUIRE(img[a - 1] == ps[idx.rank(i, a) - 1]);
    }
  }
  SECTION("pure additive morphisms are direct sums without products") {
    WreathObject x{1, {2}};
    WreathObject y{1, {1}};
    WreathMor fold{x, y, hat_identity(1), {BasedMap::phi(2)}};
    validate_wreath(fold);
    std::vector<UM> ps = random_object_tuple(rng, x, alg);
    std::vector<UM> img = lax_apply_objects(fold, ps, alg);
    REQUIRE(img.size() == 1);
    REQUIRE(img[0] == direct_sum<Unitized<GRat>>({ps[0], ps[1]}));
  }
}

TEST_CASE("lax two-cells") {
  AlgebraPtr alg = test_alg();

  SECTION("omega against an identity is the identity") {
    Rng rng(66);
    for (int t = 0; t < 20; ++t) {
      WreathObject x = random_wreath_object(rng, 2, 2, 1, 1);
      WreathObject y = random_wreath_object(rng, 2, 2, 1, 1);
      WreathMor g = random_wreath_mor(rng, x, y, t % 3 != 0);
      std::vector<UM> ps = random_object_tuple(rng, x, alg);
      LaxCell left = lax_omega(g, wreath_identity(x), ps, alg);
      for (const auto& slot : left.composite) REQUIRE(slot.mat == slot.src);
      LaxCell right = lax_omega(wreath_identity(y), g, ps, alg);
      for (const auto& slot : right.composite) REQUIRE(slot.mat == slot.src);
    }
  }
  SECTION("omega components are partial isometries with the lax endpoints") {
    Rng rng(67);
    for (int t = 0; t < 20; ++t) {
      WreathObject x0 = random_wreath_object(rng, 2, 2, 1, 1);
      WreathObject x1 = random_wreath_object(rng, 2, 2, 1, 1);
      WreathObject x2 = random_wreath_object(rng, 2, 2, 1, 1);
      WreathMor h = random_wreath_mor(rng, x0, x1, t % 3 != 0);
      WreathMor g = random_wreath_mor(rng, x1, x2, t % 3 != 0);
      std::vector<UM> ps = random_object_tuple(rng, x0, alg);
      LaxCell cell = lax_omega(g, h, ps, alg);  // endpoint check is internal
      for (const auto& slot : cell.composite)
        REQUIRE(is_partial_isometry_matrix(slot.mat, slot.src, slot.tgt));
    }
  }
  SECTION("the lax coherence square commutes") {
    Rng rng(68);
    for (int t = 0; t < 12; ++t) {
      WreathObject x0 = random_wreath_object(rng, 2, 2, 1, 1);
      WreathObject x1 = random_wreath_object(rng, 2, 2, 1, 1);
      WreathObject x2 = random_wreath_object(rng, 2, 2, 1, 1);
      WreathObject x3 = random_wreath_object(rng, 2, 2, 1, 1);
      WreathMor g1 = random_wreath_mor(rng, x0, x1, t % 3 != 0);
      WreathMor g2 = random_wreath_mor(rng, x1, x2, t % 3 != 0);
      WreathMor g3 = random_wreath_mor(rng, x2, x3, t % 3 != 0);
      std::vector<UM> ps = random_object_tuple(rng, x0, alg);

      LaxCell w21 = lax_omega(g2, g1, ps, alg);
      std::vector<LMor> pushed = lax_apply_morphisms(g3, w21.composite, alg);
      LaxCell w3_21 = lax_omega(g3, wreath_compose(g2, g1), ps, alg);

      LaxCell w32 = lax_omega(g3, g2, lax_apply_objects(g1, ps, alg), alg);
      LaxCell w32_1 = lax_omega(wreath_compose(g3, g2), g1, ps, alg);

      for (std::size_t s = 0; s < pushed.size(); ++s) {
        LMor a = compose(w3_21.composite[s], pushed[s]);
        LMor b = compose(w32_1.composite[s], w32.composite[s]);
        REQUIRE(a.mat == b.mat);
        REQUIRE(a.src == b.src);
        REQUIRE(a.tgt == b.tgt);
      }
    }
  }
}

TEST_CASE("street construction") {
  AlgebraPtr alg = test_alg();

  SECTION("identity and unit laws") {
    Rng rng(69);
    for (int t = 0; t < 10; ++t) {
      SliceChain ch = random_slice_chain(rng, alg, 1);
      // The slice legs: the source object sits at xs[0], the target at xs[1].
      StreetObject src{wreath_identity(ch.xs[0]), ch.ps[0]};
      StreetObject tgt{ch.psis[0], ch.ps[1]};
      StreetMor m{ch.psis[0], ch.us[0]};
      StreetMor lhs = street_compose(m, street_identity(src), ch.ps[1], alg);
      REQUIRE(lhs.psi == m.psi);
      for (std::size_t s = 0; s < m.us.size(); ++s) REQUIRE(lhs.us[s].mat == m.us[s].mat);

      StreetMor rhs = street_compose(street_identity(tgt), m, ch.ps[1], alg);
      REQUIRE(rhs.psi == m.psi);
      for (std::size_t s = 0; s < m.us.size(); ++s) REQUIRE(rhs.us[s].mat == m.us[s].mat);
    }
  }
  SECTION("three-fold associativity") {
    Rng rng(71);
    for (int t = 0; t < 6; ++t) {
      SliceChain ch = random_slice_chain(rng, alg, 3);
      StreetMor m1{ch.psis[0], ch.us[0]};
      StreetMor m2{ch.psis[1], ch.us[1]};
      StreetMor m3{ch.psis[2], ch.us[2]};
      StreetMor left =
          street_compose(m3, street_compose(m2, m1, ch.ps[2], alg), ch.ps[3], alg);
      StreetMor right =
          street_compose(street_compose(m3, m2, ch.ps[3], alg), m1, ch.ps[3], alg);
      REQUIRE(left.psi == right.psi);
      for (std::size_t s = 0; s < left.us.size(); ++s)
        REQUIRE(left.us[s].mat == right.us[s].mat);
    }
  }
  SECTION("pushforward is functorial and U o F is the identity") {
    Rng rng(72);
    for (int t = 0; t < 10; ++t) {
      SliceChain ch = random_slice_chain(rng, alg, 1);
      WreathObject y = random_wreath_object(rng, 2, 2);
      WreathMor chi = random_wreath_mor(rng, ch.xs[0], y);
      StreetObject obj{ch.psis[0], ch.ps[1]};
      StreetObject pushed = street_pushforward_object(chi, obj);
      REQUIRE(pushed.phi == wreath_compose(chi, obj.phi));
      // U after F is the identity on tuples.
      std::vector<UM> ps = random_object_tuple(rng, y, alg);
      REQUIRE(adjoint_u(adjoint_f(y, ps), alg) == ps);
      // Unit naturality: U(F(V)) = V for a tuple morphism V.
      std::vector<LMor> vs;
      for (const auto& p : ps) vs.push_back(identity_morphism(p));
      StreetMor fv{wreath_identity(y), vs};
      std::vector<LMor> back = adjoint_u_morphism(adjoint_f(y, ps), fv, ps, alg);
      for (std::size_t s = 0; s < vs.size(); ++s) REQUIRE(back[s].mat == vs[s].mat);
    }
  }
}
