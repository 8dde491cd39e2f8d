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

#include "opk/operads.hpp"

using namespace opk;

TEST_CASE("eventually-arithmetic injections") {
  SECTION("identity and interleavings") {
    EAInjection id = EAInjection::identity();
    for (long long n = 1; n <= 10; ++n) REQUIRE(id(n) == n);
    EAInjection f1 = EAInjection::interleave(2, 1);
    EAInjection f2 = EAInjection::interleave(2, 2);
    REQUIRE(f1(1) == 1);
    REQUIRE(f1(3) == 5);
    REQUIRE(f2(1) == 2);
    REQUIRE(f2(3) == 6);
    REQUIRE(images_disjoint(f1, f2));
    REQUIRE_FALSE(images_disjoint(f1, f1));
  }
  SECTION("normal form makes equality decidable") {
    // A prefix that follows the affine law collapses to the empty prefix.
    EAInjection a({3, 6, 9}, 3, 0);
    REQUIRE(a == EAInjection({}, 3, 0));
    EAInjection b({6, 3}, 3, 0);
    REQUIRE_FALSE(b == a);
    REQUIRE(b(1) == 6);
    REQUIRE(b(3) == 9);
  }
  SECTION("prefix/tail collisions are rejected") {
    REQUIRE_THROWS_AS(EAInjection({4}, 2, 0), ShapeError);   // 4 = 2*2 is in the tail
    REQUIRE_THROWS_AS(EAInjection({1, 1}, 2, 0), ShapeError);
  }
  SECTION("composition is evaluated pointwise") {
    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
      EAInjection g = random_ea_injection(rng);
      EAInjection h = random_ea_injection(rng);
      EAInjection hg = compose(h, g);
      for (long long n = 1; n <= 30; ++n) REQUIRE(hg(n) == h(g(n)));
    }
  }
}

TEST_CASE("injection tuple composition") {
  InjTuple two = InjTuple::interleaving(2);

  SECTION("unit laws") {
    Rng rng(22);
    InjTuple g = random_inj_tuple(rng, 3);
    REQUIRE(inj_compose(InjTuple::identity(), {g}) == g);
    REQUIRE(inj_compose(two, {InjTuple::identity(), InjTuple::identity()}) == two);
  }
  SECTION("composite slopes") {
    InjTuple h = inj_compose(two, {two, InjTuple::identity()});
    REQUIRE(h.arity() == 3);
    REQUIRE(h.component(1).slope() == 4);
    REQUIRE(h.component(2).slope() == 4);
    REQUIRE(h.component(3).slope() == 2);
  }
  SECTION("right action selects components") {
    REQUIRE(inj_right_action(two, FinMap::identity(2)) == two);
    InjTuple swapped = inj_right_action(two, FinMap::transposition(2, 1, 2));
    REQUIRE(swapped.component(1) == two.component(2));
    REQUIRE(swapped.component(2) == two.component(1));
    InjTuple second = inj_right_action(two, FinMap(1, 2, {2}));
    REQUIRE(second.arity() == 1);
    REQUIRE(second.component(1) == two.component(2));
    REQUIRE_THROWS_AS(inj_right_action(two, FinMap(2, 2, {1, 1})), ShapeError);
  }
  SECTION("interleavings compose to the interleaving up to a shuffle") {
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        std::vector<InjTuple> gs(m, InjTuple::interleaving(n));
        InjTuple lhs = inj_compose(InjTuple::interleaving(m), gs);
        FinMap shuffle = reindex_prod_map(FinMap::transposition(2, 1, 2), {m, n});
        InjTuple rhs = inj_right_action(InjTuple::interleaving(m * n), shuffle);
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("operad axiom suite") {
  SECTION("terminal operad") {
    auto fails = operad_axiom_suite<TerminalOperad>(Rng(23), 200, 4);
    REQUIRE(fails.empty());
  }
  SECTION("injections operad") {
    auto fails = operad_axiom_suite<InjectionsOperad>(Rng(24), 300, 4);
    REQUIRE(fails.empty());
  }
  SECTION("negative control: corrupted composition breaks associativity") {
    auto fails = operad_axiom_suite<CorruptedInjectionsOperad>(Rng(25), 200, 4);
    bool assoc_broken = false;
    for (const auto& f : fails) assoc_broken |= f.law == "associativity";
    REQUIRE(assoc_broken);
  }
}

TEST_CASE("operad pair action on the terminal operad") {
  auto fails = pair_action_suite<InjectionsOperad>(Rng(26), 300);
  REQUIRE(fails.empty());
}
