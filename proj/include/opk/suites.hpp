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

#ifndef OPK_SUITES_HPP
#define OPK_SUITES_HPP

#include "opk/kring.hpp"
#include "opk/ringops.hpp"

namespace opk {

/// Ordered-set combinatorics: rank/unrank inverses, reindex functoriality,
/// delta bijectivity, fiber projections, and the three function equations.
inline SuiteReport finord_suite(std::uint64_t seed, int trials) {
  SuiteReport rep;
  rep.suite = "finord";
  LawResult ranks{"finord.ranks", "rank and unrank are mutually inverse", trials, {}};
  LawResult functorial{"finord.reindex_functorial",
                       "reindexing maps compose along map composition", trials, {}};
  LawResult delta{"finord.delta_bijective", "the delta map is a bijection", trials, {}};
  LawResult fibers{"finord.fiber_sections",
                   "fiber bijections section the projection to the source", trials, {}};
  LawResult fe1{"finord.eq_sum_reindex",
                "delta commutes with summand reindexing", trials, {}};
  LawResult fe2{"finord.eq_prod_reindex",
                "delta commutes with factor reindexing", trials, {}};
  LawResult fe3{"finord.eq_double_delta",
                "iterated delta agrees with the flattened delta", trials, {}};
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng r = root.fork(t);
    auto parts_of = [&](int n, int hi) {
      std::vector<int> p(n);
      for (int& v : p) v = r.range(0, hi);
      return p;
    };
    {
      int a = r.range(0, 4);
      DepSum s(a, parts_of(a, 5));
      for (int k = 1; k <= s.total(); ++k) {
        auto [x, mu] = s.unrank(k);
        if (s.rank(x, mu) != k) {
          ranks.failures.push_back({"finord.ranks", "sum, trial " + std::to_string(t)});
          break;
        }
      }
      int m = r.range(0, 3);
      DepProd pr(m, parts_of(m, 4));
      for (int k = 1; k <= pr.total(); ++k)
        if (pr.rank(pr.unrank(k)) != k) {
          ranks.failures.push_back({"finord.ranks", "prod, trial " + std::to_string(t)});
          break;
        }
    }
    {
      int a0 = r.range(0, 3), a1 = r.range(1, 3), a2 = r.range(1, 3);
      FinMap s1 = random_finmap(r, a0, a1), s2 = random_finmap(r, a1, a2);
      std::vector<int> p0 = parts_of(a0, 3);
      try {
        bool ok =
            reindex_sum_map(s2 * s1, p0) ==
                compose(reindex_sum_map(s2, transported_sum_parts(s1, p0)),
                        reindex_sum_map(s1, p0)) &&
            reindex_prod_map(s2 * s1, p0) ==
                compose(reindex_prod_map(s2, transported_prod_parts(s1, p0)),
                        reindex_prod_map(s1, p0));
        if (!ok)
          functorial.failures.push_back(
              {"finord.reindex_functorial", "trial " + std::to_string(t)});
      } catch (const ShapeError&) {
        // colliding preimages with unequal parts: a genuine shape error
      }
    }
    {
      int m = r.range(0, 3);
      std::vector<int> as = parts_of(m, 3);
      std::vector<std::vector<int>> ps(m);
      for (int i = 0; i < m; ++i) ps[i] = parts_of(as[i], 3);
      if (!delta_bijection(m, as, ps).is_bijective())
        delta.failures.push_back({"finord.delta_bijective", "trial " + std::to_string(t)});

      std::vector<FinMap> sigmas;
      for (int i = 0; i < m; ++i) sigmas.push_back(random_bijection(r, as[i]));
      auto [l1, r1] = function_equation_sum_reindex(m, as, ps, sigmas);
      if (!(l1 == r1)) fe1.failures.push_back({"finord.eq_sum_reindex", "trial " + std::to_string(t)});
      auto [l2, r2] = function_equation_prod_reindex(m, as, ps, random_bijection(r, m));
      if (!(l2 == r2)) fe2.failures.push_back({"finord.eq_prod_reindex", "trial " + std::to_string(t)});

      std::vector<std::vector<int>> bs(m);
      std::vector<std::vector<std::vector<int>>> pss(m);
      for (int i = 0; i < m; ++i) {
        bs[i] = parts_of(as[i], 2);
        pss[i].resize(as[i]);
        for (int x = 0; x < as[i]; ++x) pss[i][x] = parts_of(bs[i][x], 2);
      }
      auto [l3, r3] = function_equation_double_delta(m, as, bs, pss);
      if (!(l3 == r3)) fe3.failures.push_back({"finord.eq_double_delta", "trial " + std::to_string(t)});
    }
    {
      int m0 = r.range(0, 4), m1 = r.range(0, 4), m2 = r.range(1, 4);
      BasedMap psi1(m0, m1, [&] {
        std::vector<int> v(m0);
        for (int& x : v) x = r.range(0, m1);
        return v;
      }());
      BasedMap psi2(m1, m2, [&] {
        std::vector<int> v(m1);
        for (int& x : v) x = r.range(0, m2);
        return v;
      }());
      BasedMap comp = psi2 * psi1;
      for (int i2 = 1; i2 <= m2; ++i2) {
        std::vector<int> fib = comp.preimage(i2);
        FinMap sgm = fiber_bijection(psi2, psi1, i2);
        if (fib.empty()) {
          if (!(sgm == FinMap::identity(1)))
            fibers.failures.push_back({"finord.fiber_sections", "trial " + std::to_string(t)});
          continue;
        }
        if (!sgm.is_bijective())
          fibers.failures.push_back({"finord.fiber_sections", "trial " + std::to_string(t)});
      }
    }
  }
  rep.laws = {ranks, functorial, delta, fibers, fe1, fe2, fe3};
  return rep;
}

/// Operad axioms for the injections model and the terminal operad, the
/// operad-pair conditions over the terminal operad, and the interleaving
/// regression.
inline SuiteReport operads_suite(std::uint64_t seed, int trials, int max_arity = 4) {
  SuiteReport rep;
  rep.suite = "operads";
  auto wrap = [&](const char* id, const char* stmt,
                  const std::vector<LawFailure>& fails) {
    LawResult law{id, stmt, trials, fails};
    return law;
  };
  rep.laws.push_back(wrap("operads.injections", "operad axioms hold for the injections model",
                          operad_axiom_suite<InjectionsOperad>(Rng(seed), trials, max_arity)));
  rep.laws.push_back(wrap("operads.terminal", "operad axioms hold for the terminal operad",
                          operad_axiom_suite<TerminalOperad>(Rng(seed + 1), trials, max_arity)));
  rep.laws.push_back(wrap("operads.pair", "the eight action conditions hold over the terminal operad",
                          pair_action_suite<InjectionsOperad>(Rng(seed + 2), trials, 3)));
  LawResult inter{"operads.interleave", "interleavings compose to the interleaving up to a shuffle",
                  9, {}};
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      std::vector<InjTuple> gs(m, InjTuple::interleaving(n));
      InjTuple lhs = inj_compose(InjTuple::interleaving(m), gs);
      FinMap shuffle = reindex_prod_map(FinMap::transposition(2, 1, 2), {m, n});
      if (!(lhs == inj_right_action(InjTuple::interleaving(m * n), shuffle)))
        inter.failures.push_back({"operads.interleave", std::to_string(m) + "x" + std::to_string(n)});
    }
  rep.laws.push_back(inter);
  LawResult neg{"operads.negative_control", "a corrupted composition is caught", 1, {}};
  auto bad = operad_axiom_suite<CorruptedInjectionsOperad>(Rng(seed + 3), std::max(trials / 2, 50),
                                                           max_arity);
  bool assoc_broken = false;
  for (const auto& f : bad) assoc_broken |= f.law == "associativity";
  if (!assoc_broken)
    neg.failures.push_back({"operads.negative_control", "associativity failure not observed"});
  rep.laws.push_back(neg);
  return rep;
}

/// Matrix-operation laws on the exact backend, plus the stored
/// noncommutative counterexample.
inline SuiteReport matops_suite(std::uint64_t seed, int trials, int max_dim = 4) {
  auto gen = [](Rng& r, int rows, int cols) { return random_matrix(r, rows, cols); };
  SuiteReport rep = direct_sum_suite<GRat>(Rng(seed), trials, max_dim, gen, GRat(1));
  SuiteReport kr = kron_suite<GRat>(Rng(seed + 1), trials, std::min(max_dim, 3), gen, GRat(1), true);
  rep.suite = "matops";
  for (auto& law : kr.laws) rep.laws.push_back(law);

  AlgebraPtr m2 = make_algebra(Field::Complex, {2});
  auto agen = [&](Rng& r, int rows, int cols) { return random_alg_matrix<GRat>(r, m2, rows, cols); };
  SuiteReport nc = kron_suite<AlgElem<GRat>>(Rng(seed + 2), std::max(trials / 4, 25), 2, agen,
                                             AlgElem<GRat>::unit(m2), false);
  for (auto& law : nc.laws) {
    law.id = "noncomm." + law.id;
    rep.laws.push_back(law);
  }
  LawResult cx{"kron.noncomm_counterexample",
               "composition and adjoint compatibility fail over a 2x2 block", 1, {}};
  KronCounterexample k = kron_noncommutative_counterexample();
  if (!k.violates_composition || !k.violates_adjoint)
    cx.failures.push_back({"kron.noncomm_counterexample", "violation not exhibited"});
  rep.laws.push_back(cx);
  LawResult unital{"unitization.split", "the unitization splits with s = lambda pi idempotent",
                   trials, {}};
  Rng root(seed + 3);
  for (int t = 0; t < trials; ++t) {
    Rng r = root.fork(t);
    AlgebraPtr alg = make_algebra(Field::Complex, {1, 2});
    Unitized<GRat> x(random_grat(r), Stab<GRat>::single(alg, r.range(1, 3), r.range(1, 3),
                                                        random_alg_elem<GRat>(r, alg)));
    Unitized<GRat> y(random_grat(r), Stab<GRat>::single(alg, r.range(1, 3), r.range(1, 3),
                                                        random_alg_elem<GRat>(r, alg)));
    bool ok = pi(Unitized<GRat>::embed_scalar(alg, pi(x))) == pi(x) &&
              scalar_part(scalar_part(x)) == scalar_part(x) &&
              is_zero(pi(x - scalar_part(x))) && star(x * y) == star(y) * star(x);
    if (!ok) unital.failures.push_back({"unitization.split", "trial " + std::to_string(t)});
  }
  rep.laws.push_back(unital);
  return rep;
}

/// Murray-von Neumann layer: trace symmetry, invariant additivity, witness
/// certification on random conjugates, the braiding witness, and the
/// component structure of the small groupoid fragment.
inline SuiteReport mvn_suite(const AlgebraPtr& alg, std::uint64_t seed, int trials) {
  SuiteReport rep;
  rep.suite = "mvn";
  LawResult trace{"mvn.trace_symmetry", "trace(U*U) equals trace(UU*)", trials, {}};
  LawResult additive{"mvn.additive", "the invariant is additive under direct sums", trials, {}};
  LawResult cert{"mvn.witness", "equal invariants yield verified witnesses", trials, {}};
  LawResult braid{"mvn.braiding", "the block swap witnesses the sum braiding", trials, {}};
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng r = root.fork(t);
    {
      GM u = random_matrix(r, r.range(1, 4), r.range(1, 4));
      if (!((adjoint(u) * u).trace() == (u * adjoint(u)).trace()))
        trace.failures.push_back({"mvn.trace_symmetry", "trial " + std::to_string(t)});
    }
    {
      StarMatrix<AlgElem<GRat>> a = random_alg_projection(r, alg, r.range(1, 2));
      StarMatrix<AlgElem<GRat>> b = random_alg_projection(r, alg, r.range(1, 2));
      MvNInvariant ia = mvn_invariant(a, alg), ib = mvn_invariant(b, alg);
      MvNInvariant is = mvn_invariant(direct_sum<AlgElem<GRat>>({a, b}), alg);
      for (std::size_t j = 0; j < ia.ranks.size(); ++j)
        if (is.ranks[j] != ia.ranks[j] + ib.ranks[j]) {
          additive.failures.push_back({"mvn.additive", "trial " + std::to_string(t)});
          break;
        }
      StarMatrix<AlgElem<GRat>> braided =
          perm_matrix(reindex_sum_map(FinMap::transposition(2, 1, 2), {a.rows(), b.rows()}),
                      AlgElem<GRat>::unit(alg)) *
          direct_sum<AlgElem<GRat>>({a, b});
      if (!is_partial_isometry_matrix(braided, direct_sum<AlgElem<GRat>>({a, b}),
                                      direct_sum<AlgElem<GRat>>({b, a})))
        braid.failures.push_back({"mvn.braiding", "trial " + std::to_string(t)});
    }
    {
      int n = r.range(1, 2);
      StarMatrix<AlgElem<GRat>> d(n, n, AlgElem<GRat>::zero(alg));
      for (int i = 1; i <= n; ++i) {
        std::vector<int> rk(alg->block_count());
        for (int j = 0; j < alg->block_count(); ++j) rk[j] = r.range(0, alg->blocks[j]);
        d.at(i, i) = AlgElem<GRat>::leading_idempotent(alg, rk);
      }
      StarMatrix<AlgElem<GRat>> u1 = random_alg_unitary(r, alg, n);
      StarMatrix<AlgElem<GRat>> u2 = random_alg_unitary(r, alg, n);
      StarMatrix<AlgElem<GRat>> p = u1 * d * adjoint(u1), q = u2 * d * adjoint(u2);
      auto w = witness(p, q, alg);
      if (!w) cert.failures.push_back({"mvn.witness", "trial " + std::to_string(t)});
    }
  }
  rep.laws = {trace, additive, cert, braid};
  LawResult comp{"mvn.components", "groupoid components realize exactly the invariants", 1, {}};
  GroupoidFragment frag = pr_groupoid_fragment(alg, 2);
  if (!frag.components_match_invariants)
    comp.failures.push_back({"mvn.components", "component/invariant mismatch"});
  rep.laws.push_back(comp);
  return rep;
}

/// Categories of operators and the Street layer: composition laws, the lax
/// coherence square, the unit triangles, and the adjunction identities.
inline SuiteReport ringops_suite(const AlgebraPtr& alg, std::uint64_t seed, int trials) {
  SuiteReport rep;
  rep.suite = "ringops";
  int heavy = std::max(trials / 2, 1);
  LawResult hat{"ringops.hat", "operator-category composition is associative and unital", trials, {}};
  LawResult wreath{"ringops.wreath", "wreath composition is associative and unital", trials, {}};
  LawResult omega_id{"ringops.omega_unit", "the two-cell against an identity is the identity",
                     heavy, {}};
  LawResult square{"ringops.lax_square", "the lax coherence square commutes", heavy, {}};
  LawResult street{"ringops.street", "Street composition is associative and unital", heavy, {}};
  LawResult adj{"ringops.adjunction", "U after F is the identity and the unit is natural",
                heavy, {}};
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng r = root.fork(t);
    int m0 = r.range(0, 3), m1 = r.range(0, 3), m2 = r.range(0, 3), m3 = r.range(0, 3);
    HatMor a = random_hat_mor(r, m0, m1);
    HatMor b = random_hat_mor(r, m1, m2);
    HatMor c = random_hat_mor(r, m2, m3);
    if (!(hat_compose(c, hat_compose(b, a)) == hat_compose(hat_compose(c, b), a) &&
          hat_compose(a, hat_identity(m0)) == a && hat_compose(hat_identity(m1), a) == a))
      hat.failures.push_back({"ringops.hat", "trial " + std::to_string(t)});

    WreathObject x0 = random_wreath_object(r, 3, 3);
    WreathObject x1 = random_wreath_object(r, 3, 3);
    WreathObject x2 = random_wreath_object(r, 3, 3);
    WreathObject x3 = random_wreath_object(r, 3, 3);
    WreathMor wa = random_wreath_mor(r, x0, x1);
    WreathMor wb = random_wreath_mor(r, x1, x2);
    WreathMor wc = random_wreath_mor(r, x2, x3);
    if (!(wreath_compose(wc, wreath_compose(wb, wa)) ==
              wreath_compose(wreath_compose(wc, wb), wa) &&
          wreath_compose(wa, wreath_identity(x0)) == wa &&
          wreath_compose(wreath_identity(x1), wa) == wa))
      wreath.failures.push_back({"ringops.wreath", "trial " + std::to_string(t)});
  }
  for (int t = 0; t < heavy; ++t) {
    Rng r = root.fork(100000 + t);
    WreathObject x0 = random_wreath_object(r, 2, 2, 1, 1);
    WreathObject x1 = random_wreath_object(r, 2, 2, 1, 1);
    WreathObject x2 = random_wreath_object(r, 2, 2, 1, 1);
    WreathObject x3 = random_wreath_object(r, 2, 2, 1, 1);
    bool covering = t % 3 != 0;
    WreathMor g1 = random_wreath_mor(r, x0, x1, covering);
    WreathMor g2 = random_wreath_mor(r, x1, x2, covering);
    WreathMor g3 = random_wreath_mor(r, x2, x3, covering);
    std::vector<UM> ps = random_object_tuple(r, x0, alg);
    try {
      LaxCell idc = lax_omega(g1, wreath_identity(x0), ps, alg);
      bool ok = true;
      for (const auto& slot : idc.composite) ok &= slot.mat == slot.src;
      LaxCell idc2 = lax_omega(wreath_identity(x1), g1, ps, alg);
      for (const auto& slot : idc2.composite) ok &= slot.mat == slot.src;
      if (!ok) omega_id.failures.push_back({"ringops.omega_unit", "trial " + std::to_string(t)});

      LaxCell w21 = lax_omega(g2, g1, ps, alg);
      std::vector<LMor> pushed = lax_apply_morphisms(g3, w21.composite, alg);
      LaxCell w3_21 = lax_omega(g3, wreath_compose(g2, g1), ps, alg);
      LaxCell w32 = lax_omega(g3, g2, lax_apply_objects(g1, ps, alg), alg);
      LaxCell w32_1 = lax_omega(wreath_compose(g3, g2), g1, ps, alg);
      bool sq = true;
      for (std::size_t s = 0; s < pushed.size(); ++s)
        sq &= compose(w3_21.composite[s], pushed[s]).mat ==
              compose(w32_1.composite[s], w32.composite[s]).mat;
      if (!sq) square.failures.push_back({"ringops.lax_square", "trial " + std::to_string(t)});
    } catch (const std::exception& e) {
      square.failures.push_back({"ringops.lax_square",
                                 std::string("exception: ") + e.what() + ", trial " +
                                     std::to_string(t)});
    }
  }
  for (int t = 0; t < heavy; ++t) {
    Rng r = root.fork(200000 + t);
    try {
      // A composable chain of three Street morphisms over a common base.
      std::vector<WreathObject> xs;
      std::vector<WreathMor> psis;
      xs.push_back(random_wreath_object(r, 2, 2, 1, 1));
      for (int k = 1; k <= 3; ++k) {
        xs.push_back(random_wreath_object(r, 2, 2, 1, 1));
        psis.push_back(random_wreath_mor(r, xs[k], xs[k - 1], true));
      }
      std::vector<std::vector<UM>> ps(4);
      std::vector<std::vector<LMor>> us(3);
      ps[3] = random_object_tuple(r, xs[3], alg, 2);
      for (int k = 2; k >= 0; --k) {
        std::vector<UM> target = lax_apply_objects(psis[k], ps[k + 1], alg);
        std::vector<UM> pk;
        std::vector<LMor> uk;
        for (const auto& tslot : target) {
          if (tslot.is_empty()) {
            pk.push_back(tslot);
            uk.push_back(identity_morphism(tslot));
            continue;
          }
          UM w = random_unitized_unitary(r, alg, tslot.rows(), 2);
          pk.push_back(w * tslot * adjoint(w));
          uk.push_back(make_morphism(tslot * adjoint(w), pk.back(), tslot));
        }
        ps[k] = pk;
        us[k] = uk;
      }
      StreetMor m1{psis[0], us[0]}, m2{psis[1], us[1]}, m3{psis[2], us[2]};
      StreetMor left = street_compose(m3, street_compose(m2, m1, ps[2], alg), ps[3], alg);
      StreetMor right = street_compose(street_compose(m3, m2, ps[3], alg), m1, ps[3], alg);
      bool ok = left.psi == right.psi;
      for (std::size_t s = 0; ok && s < left.us.size(); ++s)
        ok = left.us[s].mat == right.us[s].mat;
      StreetObject src{wreath_identity(xs[0]), ps[0]};
      StreetMor lid = street_compose(m1, street_identity(src), ps[1], alg);
      ok = ok && lid.psi == m1.psi;
      for (std::size_t s = 0; ok && s < m1.us.size(); ++s) ok = lid.us[s].mat == m1.us[s].mat;
      if (!ok) street.failures.push_back({"ringops.street", "trial " + std::to_string(t)});

      std::vector<UM> tup = random_object_tuple(r, xs[0], alg, 2);
      bool uf = adjoint_u(adjoint_f(xs[0], tup), alg) == tup;
      std::vector<LMor> vs;
      for (const auto& p : tup) vs.push_back(identity_morphism(p));
      StreetMor fv{wreath_identity(xs[0]), vs};
      std::vector<LMor> back = adjoint_u_morphism(adjoint_f(xs[0], tup), fv, tup, alg);
      for (std::size_t s = 0; uf && s < vs.size(); ++s) uf = back[s].mat == vs[s].mat;
      if (!uf) adj.failures.push_back({"ringops.adjunction", "trial " + std::to_string(t)});
    } catch (const std::exception& e) {
      street.failures.push_back({"ringops.street", std::string("exception: ") + e.what() +
                                                       ", trial " + std::to_string(t)});
    }
  }
  rep.laws = {hat, wreath, omega_id, square, street, adj};
  return rep;
}

/// Cup-product checks against the Gelfand/Swan oracle on a commutative
/// algebra: exhaustive class agreement, representative realization on a
/// bounded family, and f- plus representative-independence.
inline SuiteReport cup_suite(const AlgebraPtr& alg, std::uint64_t seed, int max_entry = 3,
                             int rep_budget = 500) {
  if (!alg->commutative()) throw ShapeError("cup_suite: needs a commutative algebra");
  SuiteReport rep;
  rep.suite = "cup";
  int n = alg->block_count();
  long long classes = 1;
  for (int j = 0; j < n; ++j) classes *= 2 * max_entry + 1;
  LawResult oracle{"cup.oracle", "cup agrees with the componentwise integer ring",
                   classes * classes, {}};
  LawResult reps{"cup.representatives",
                 "the Kronecker representative route realizes the class product", 0, {}};
  LawResult findep{"cup.f_independent", "the product does not depend on the injection tuple",
                   0, {}};
  LawResult ring{"cup.ring", "commutativity, associativity and the embedded unit", 0, {}};
  InjTuple f = InjTuple::interleaving(2);

  std::vector<std::vector<long>> all;
  std::vector<long> cur(n, -max_entry);
  while (true) {
    all.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == max_entry) cur[i--] = -max_entry;
    if (i < 0) break;
    ++cur[i];
  }
  if (n == 0) all.assign(1, {});

  Rng rng(seed);
  long long rep_checks = 0;
  for (const auto& u : all)
    for (const auto& v : all) {
      K0RingElem x = k0_elem(alg, u), y = k0_elem(alg, v);
      K0RingElem c = cup(x, y, f);
      if (c.cls.rel != gelfand_oracle_mult(alg, u, v)) {
        oracle.failures.push_back({"cup.oracle", "class pair mismatch"});
        continue;
      }
      bool small = true;
      for (long e : u) small &= std::abs(e) <= 2;
      for (long e : v) small &= std::abs(e) <= 2;
      if (small && rep_checks < rep_budget && rng.below(4) == 0) {
        ++rep_checks;
        if (!(cup_via_plain_reps(x, y) == c))
          reps.failures.push_back({"cup.representatives", "matrix route disagrees"});
        if (rep_checks % 7 == 0) {
          Rng conj = rng.fork(rep_checks);
          if (!(cup_via_plain_reps(x, y, &conj) == c))
            reps.failures.push_back({"cup.representatives", "conjugated route disagrees"});
        }
      }
    }
  reps.trials = rep_checks;

  std::vector<long> ones(n, 1), zeros(n, 0);
  K0RingElem unit = k0_elem(alg, ones);
  for (int t = 0; t < 50; ++t) {
    std::vector<long> u(n), v(n), w(n);
    for (auto& e : u) e = rng.range(-max_entry, max_entry);
    for (auto& e : v) e = rng.range(-max_entry, max_entry);
    for (auto& e : w) e = rng.range(-max_entry, max_entry);
    K0RingElem x = k0_elem(alg, u), y = k0_elem(alg, v), z = k0_elem(alg, w);
    bool ok = cup(x, y, f) == cup(y, x, f) &&
              cup(cup(x, y, f), z, f) == cup(x, cup(y, z, f), f) && cup(x, unit, f) == x &&
              cup(x, k0_elem(alg, zeros), f).cls.is_zero();
    if (!ok) ring.failures.push_back({"cup.ring", "trial " + std::to_string(t)});
    InjTuple g = random_inj_tuple(rng, 2);
    if (!(cup(x, y, g) == cup(x, y, f)))
      findep.failures.push_back({"cup.f_independent", "trial " + std::to_string(t)});
  }
  ring.trials = 50;
  findep.trials = 50;
  rep.laws = {oracle, reps, findep, ring};
  return rep;
}

}  // namespace opk

#endif  // OPK_SUITES_HPP
