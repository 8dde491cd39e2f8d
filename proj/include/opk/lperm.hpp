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

#ifndef OPK_LPERM_HPP
#define OPK_LPERM_HPP

#include <functional>
#include <string>
#include <vector>

#include "opk/mvn.hpp"
#include "opk/operads.hpp"
#include "opk/parallel.hpp"

namespace opk {

using UM = StarMatrix<Unitized<GRat>>;

/// A morphism of the groupoid of projections over the unitized stabilization:
/// a partial isometry together with its source and target projections.
struct LMor {
  UM mat, src, tgt;
};

inline LMor identity_morphism(const UM& p) { return {p, p, p}; }

inline LMor make_morphism(UM mat, UM src, UM tgt) {
  if (!is_partial_isometry_matrix(mat, src, tgt))
    throw InvalidProjection("make_morphism: not a partial isometry for the given ends");
  return {std::move(mat), std::move(src), std::move(tgt)};
}

inline LMor compose(const LMor& g, const LMor& f) {
  if (!(f.tgt == g.src)) throw ShapeError("compose: middle objects differ");
  return {g.mat * f.mat, f.src, g.tgt};
}

inline LMor adjoint(const LMor& f) { return {adjoint(f.mat), f.tgt, f.src}; }

// ---------------------------------------------------------------------------
// The additive structure: block direct sums and their braidings.
// ---------------------------------------------------------------------------

inline LMor oplus(const std::vector<LMor>& ms) {
  std::vector<UM> mats, srcs, tgts;
  for (const auto& m : ms) {
    mats.push_back(m.mat);
    srcs.push_back(m.src);
    tgts.push_back(m.tgt);
  }
  return {direct_sum<Unitized<GRat>>(mats), direct_sum<Unitized<GRat>>(srcs),
          direct_sum<Unitized<GRat>>(tgts)};
}

/// The additive braiding along a bijection of the summand index set:
/// perm(sigma(p^x)) * (+P^x), from +P^x to +P^{sigma^-1 x}.
inline LMor tau_oplus(const FinMap& sigma, const std::vector<UM>& ps, const AlgebraPtr& alg) {
  if (sigma.dom() != static_cast<int>(ps.size()) || !sigma.is_bijective())
    throw ShapeError("tau_oplus: need a bijection of the summand index");
  std::vector<int> sizes(ps.size());
  for (std::size_t x = 0; x < ps.size(); ++x) sizes[x] = ps[x].rows();
  UM src = direct_sum<Unitized<GRat>>(ps);
  FinMap sinv = sigma.inverse();
  std::vector<UM> permuted(ps.size());
  for (int y = 1; y <= sigma.cod(); ++y) permuted[y - 1] = ps[sinv(y) - 1];
  UM tgt = direct_sum<Unitized<GRat>>(permuted);
  UM braid = perm_matrix(reindex_sum_map(sigma, sizes), Unitized<GRat>::unit(alg));
  if (src.is_empty()) return {UM(), UM(), UM()};
  return {braid * src, src, tgt};
}

// ---------------------------------------------------------------------------
// The multiplicative structure parameterized by injection tuples.
// ---------------------------------------------------------------------------

/// The f-parameterized Kronecker-like product: entrywise
///   prod_i scalar^i 1~  +  sum_i (prod_{i' != i} scalar^{i'}) f_i hat^i f_i^*.
/// Reduces to the ordinary Kronecker of the scalar parts when all stab parts
/// vanish, and preserves projections and partial isometries for any f.
inline UM otimes_matrix(const InjTuple& f, const std::vector<UM>& us, const AlgebraPtr& alg) {
  int m = f.arity();
  if (static_cast<int>(us.size()) != m) throw ShapeError("otimes: arity mismatch");
  std::vector<int> rparts(m), cparts(m);
  for (int i = 0; i < m; ++i) {
    rparts[i] = us[i].rows();
    cparts[i] = us[i].cols();
  }
  DepProd rp(m, rparts), cp(m, cparts);
  if (rp.total() == 0 || cp.total() == 0) return UM();
  UM r(rp.total(), cp.total(), Unitized<GRat>::zero(alg));
  for (int a = 1; a <= rp.total(); ++a) {
    std::vector<int> mu = rp.unrank(a);
    for (int b = 1; b <= cp.total(); ++b) {
      std::vector<int> nu = cp.unrank(b);
      GRat scalar(1);
      for (int i = 0; i < m; ++i) scalar = scalar * us[i].at(mu[i], nu[i]).scalar();
      Stab<GRat> hat(alg);
      for (int i = 0; i < m; ++i) {
        const Stab<GRat>& h = us[i].at(mu[i], nu[i]).hat();
        if (h.is_zero()) continue;
        GRat coeff(1);
        for (int k = 0; k < m; ++k)
          if (k != i) coeff = coeff * us[k].at(mu[k], nu[k]).scalar();
        if (coeff.is_zero()) continue;
        hat = hat + coeff * conj_by_injection(f.component(i + 1), h);
      }
      r.at(a, b) = Unitized<GRat>(scalar, hat);
    }
  }
  return r;
}

inline LMor otimes(const InjTuple& f, const std::vector<LMor>& us, const AlgebraPtr& alg) {
  std::vector<UM> mats, srcs, tgts;
  for (const auto& u : us) {
    mats.push_back(u.mat);
    srcs.push_back(u.src);
    tgts.push_back(u.tgt);
  }
  LMor out{otimes_matrix(f, mats, alg), otimes_matrix(f, srcs, alg),
           otimes_matrix(f, tgts, alg)};
  if (!is_partial_isometry_matrix(out.mat, out.src, out.tgt))
    throw std::logic_error("otimes: output failed the partial isometry check");
  return out;
}

/// Multiplicative braiding: perm(sigma<p^i>) * (x)_{f.sigma} P^i, from
/// (x)_{f.sigma} P^i to (x)_f P^{sigma^-1 i}.
inline LMor tau_otimes(const InjTuple& f, const FinMap& sigma, const std::vector<UM>& ps,
                       const AlgebraPtr& alg) {
  if (!sigma.is_bijective() || sigma.cod() != f.arity() ||
      sigma.dom() != static_cast<int>(ps.size()))
    throw ShapeError("tau_otimes: need a bijection matching the arity");
  std::vector<int> sizes(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) sizes[i] = ps[i].rows();
  UM src = otimes_matrix(inj_right_action(f, sigma), ps, alg);
  FinMap sinv = sigma.inverse();
  std::vector<UM> permuted(ps.size());
  for (int i = 1; i <= sigma.cod(); ++i) permuted[i - 1] = ps[sinv(i) - 1];
  UM tgt = otimes_matrix(f, permuted, alg);
  if (src.is_empty()) return {UM(), UM(), UM()};
  UM braid = perm_matrix(reindex_prod_map(sigma, sizes), Unitized<GRat>::unit(alg));
  return {braid * src, src, tgt};
}

/// The distributivity morphism: perm(delta) * (x)_f (+_x P^{ix}), from
/// (x)_f (+ P^{ix}) to +_{<x^i>} (x)_f P^{i x^i}.
/// families[i] lists the projections P^{ix} for x in a^i.
inline LMor delta_dist(const InjTuple& f, const std::vector<std::vector<UM>>& families,
                       const AlgebraPtr& alg) {
  int m = f.arity();
  if (static_cast<int>(families.size()) != m) throw ShapeError("delta_dist: arity mismatch");
  std::vector<int> as(m);
  std::vector<std::vector<int>> sizes(m);
  std::vector<UM> sums(m);
  for (int i = 0; i < m; ++i) {
    as[i] = static_cast<int>(families[i].size());
    for (const auto& p : families[i]) sizes[i].push_back(p.rows());
    sums[i] = direct_sum<Unitized<GRat>>(families[i]);
  }
  UM src = otimes_matrix(f, sums, alg);
  DepProd outer(m, as);
  std::vector<UM> summands;
  for (int X = 1; X <= outer.total(); ++X) {
    std::vector<int> xs = outer.unrank(X);
    std::vector<UM> tuple(m);
    for (int i = 0; i < m; ++i) tuple[i] = families[i][xs[i] - 1];
    summands.push_back(otimes_matrix(f, tuple, alg));
  }
  UM tgt = direct_sum<Unitized<GRat>>(summands);
  if (src.is_empty()) return {UM(), UM(), UM()};
  UM braid = perm_matrix(delta_bijection(m, as, sizes), Unitized<GRat>::unit(alg));
  return {braid * src, src, tgt};
}

// ---------------------------------------------------------------------------
// Random data over the unitized stabilization.
// ---------------------------------------------------------------------------

/// Unitary of the form 1~ + iota(V - 1) for a corner unitary V: exactly
/// unitary over the unitized stabilization.
inline UM random_unitized_unitary(Rng& rng, const AlgebraPtr& alg, int dim, int support) {
  StarMatrix<AlgElem<GRat>> v = random_alg_unitary(rng, alg, dim * support);
  UM w(dim, dim, Unitized<GRat>::zero(alg));
  AlgElem<GRat> unit = AlgElem<GRat>::unit(alg);
  for (int r = 1; r <= dim; ++r)
    for (int c = 1; c <= dim; ++c) {
      Stab<GRat> hat(alg);
      for (int a = 1; a <= support; ++a)
        for (int b = 1; b <= support; ++b) {
          AlgElem<GRat> e = v.at((r - 1) * support + a, (c - 1) * support + b);
          if (r == c && a == b) e = e - unit;
          hat.set(a, b, e);
        }
      w.at(r, c) = Unitized<GRat>(r == c ? GRat(1) : GRat(0), hat);
    }
  return w;
}

/// Diagonal projection entries: scalar 0 or 1~, an embedded idempotent, or
/// the complement of one.
inline Unitized<GRat> random_projection_entry(Rng& rng, const AlgebraPtr& alg, int max_support) {
  int mode = rng.below(alg->is_zero_algebra() ? 2 : 4);
  Unitized<GRat> unit = Unitized<GRat>::unit(alg);
  switch (mode) {
    case 0:
      return Unitized<GRat>::zero(alg);
    case 1:
      return unit;
    default: {
      std::vector<int> rk(alg->block_count());
      for (int j = 0; j < alg->block_count(); ++j) rk[j] = rng.range(0, alg->blocks[j]);
      int n = rng.range(1, max_support);
      Unitized<GRat> em = Unitized<GRat>::embed_stab(
          Stab<GRat>::single(alg, n, n, AlgElem<GRat>::leading_idempotent(alg, rk)));
      return mode == 2 ? em : unit - em;
    }
  }
}

inline UM random_unitized_projection(Rng& rng, const AlgebraPtr& alg, int dim,
                                     int max_support = 2) {
  UM d(dim, dim, Unitized<GRat>::zero(alg));
  for (int i = 1; i <= dim; ++i) d.at(i, i) = random_projection_entry(rng, alg, max_support);
  UM w = random_unitized_unitary(rng, alg, dim, max_support);
  return w * d * adjoint(w);
}

/// A random morphism, possibly rectangular: conjugated selector of a diagonal
/// of projection entries.
inline LMor random_lmor(Rng& rng, const AlgebraPtr& alg, int max_dim, int max_support = 2) {
  int p = rng.range(1, max_dim), q = rng.range(1, max_dim);
  int r = rng.range(0, std::min(p, q));
  UM sel(q, p, Unitized<GRat>::zero(alg));
  for (int i = 1; i <= r; ++i) sel.at(i, i) = random_projection_entry(rng, alg, max_support);
  UM w1 = random_unitized_unitary(rng, alg, p, max_support);
  UM w2 = random_unitized_unitary(rng, alg, q, max_support);
  UM mat = w2 * sel * adjoint(w1);
  UM src = w1 * (adjoint(sel) * sel) * adjoint(w1);
  UM tgt = w2 * (sel * adjoint(sel)) * adjoint(w2);
  return {mat, src, tgt};
}

/// A composable chain of morphisms through conjugates of a common diagonal.
inline std::vector<LMor> random_lmor_chain(Rng& rng, const AlgebraPtr& alg, int len,
                                           int max_dim, int max_support = 2) {
  int p = rng.range(1, max_dim);
  UM d(p, p, Unitized<GRat>::zero(alg));
  for (int i = 1; i <= p; ++i) d.at(i, i) = random_projection_entry(rng, alg, max_support);
  std::vector<UM> ws;
  for (int k = 0; k <= len; ++k) ws.push_back(random_unitized_unitary(rng, alg, p, max_support));
  std::vector<LMor> out;
  for (int k = 1; k <= len; ++k)
    out.push_back({ws[k] * d * adjoint(ws[k - 1]), ws[k - 1] * d * adjoint(ws[k - 1]),
                   ws[k] * d * adjoint(ws[k])});
  return out;
}

// ---------------------------------------------------------------------------
// The coherence suite.
// ---------------------------------------------------------------------------

struct LPermConfig {
  int max_arity = 2;
  int max_dim = 2;
  int max_family = 2;
  int max_support = 2;
};

/// Every structural law of the multiplicative action evaluated as both-sides
/// exact matrix equality: preservation, functoriality, strict nesting,
/// braidings and their cocycles, absorbing zero, and the three distributivity
/// coherence squares.
inline SuiteReport lperm_coherence_suite(const AlgebraPtr& alg, int trials,
                                         std::uint64_t seed, LPermConfig cfg = {}) {
  SuiteReport rep;
  rep.suite = "lperm";
  LawResult preserve{"lperm.preserve", "the f-product preserves projections and partial isometries",
                     trials, {}};
  LawResult functor{"lperm.functor", "the f-product respects composition and adjoints", trials, {}};
  LawResult nest{"lperm.nest", "products nest strictly along operad composition", trials, {}};
  LawResult unit{"lperm.unit", "the identity injection acts as the identity", trials, {}};
  LawResult braid{"lperm.braid", "factor reordering is realized by the permutation conjugation",
                  trials, {}};
  LawResult cocycle{"lperm.cocycle", "multiplicative and additive braidings compose as cocycles",
                    trials, {}};
  LawResult absorb{"lperm.absorb", "empty factors absorb the product", trials, {}};
  LawResult dist1{"lperm.dist_sum_reindex",
                  "distributivity commutes with summand reindexing", trials, {}};
  LawResult dist2{"lperm.dist_factor_reindex",
                  "distributivity commutes with factor reordering", trials, {}};
  LawResult dist3{"lperm.dist_nested", "iterated distributivity agrees with the flattened one",
                  trials, {}};

  std::vector<LawResult*> slots = {&preserve, &functor, &nest,  &unit,  &braid,
                                   &cocycle,  &absorb,  &dist1, &dist2, &dist3};
  Rng root(seed);
  using TrialFailures = std::vector<std::pair<int, LawFailure>>;
  auto run_one = [&](int t) -> TrialFailures {
    TrialFailures out;
    Rng r = root.fork(t);
    auto fail = [&](const LawResult& law, const char* which) {
      int idx = 0;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (slots[k]->id == law.id) idx = static_cast<int>(k);
      out.push_back({idx, {law.id, std::string(which) + ", trial " + std::to_string(t)}});
    };

    int m = r.range(0, cfg.max_arity);
    InjTuple f = random_inj_tuple(r, m);

    // Preservation and functoriality on composable tuples.
    {
      std::vector<LMor> first, second;
      for (int i = 0; i < m; ++i) {
        auto chain = random_lmor_chain(r, alg, 2, cfg.max_dim, cfg.max_support);
        first.push_back(chain[0]);
        second.push_back(chain[1]);
      }
      LMor a = otimes(f, first, alg);   // throws if preservation fails
      LMor b = otimes(f, second, alg);
      if (!is_projection_matrix(a.src) || !is_projection_matrix(a.tgt))
        fail(preserve, "ends");
      std::vector<LMor> composed;
      for (int i = 0; i < m; ++i) composed.push_back(compose(second[i], first[i]));
      LMor both = otimes(f, composed, alg);
      if (!(both.mat == b.mat * a.mat)) fail(functor, "composition");
      std::vector<LMor> adjoints;
      for (int i = 0; i < m; ++i) adjoints.push_back(adjoint(first[i]));
      if (!(otimes(f, adjoints, alg).mat == adjoint(a.mat))) fail(functor, "adjoint");
    }

    // Strict nesting along operad composition and the unit law.
    {
      std::vector<InjTuple> gs;
      std::vector<std::vector<UM>> inner(m);
      std::vector<UM> flat;
      for (int i = 0; i < m; ++i) {
        int n = r.range(0, cfg.max_arity);
        gs.push_back(random_inj_tuple(r, n));
        for (int j = 0; j < n; ++j) {
          inner[i].push_back(random_unitized_projection(r, alg, r.range(1, cfg.max_dim),
                                                        cfg.max_support));
          flat.push_back(inner[i].back());
        }
      }
      std::vector<UM> mids(m);
      for (int i = 0; i < m; ++i) mids[i] = otimes_matrix(gs[i], inner[i], alg);
      UM lhs = otimes_matrix(f, mids, alg);
      UM rhs = otimes_matrix(inj_compose(f, gs), flat, alg);
      if (!(lhs == rhs)) fail(nest, "nesting");

      UM p = random_unitized_projection(r, alg, r.range(1, cfg.max_dim), cfg.max_support);
      if (!(otimes_matrix(InjTuple::identity(), {p}, alg) == p)) fail(unit, "identity");
    }

    // Braiding conjugation, tau cocycles and the identity braidings.
    if (m >= 1) {
      std::vector<UM> ps;
      for (int i = 0; i < m; ++i)
        ps.push_back(random_unitized_projection(r, alg, r.range(1, cfg.max_dim),
                                                cfg.max_support));
      FinMap sigma = random_bijection(r, m);
      LMor tau = tau_otimes(f, sigma, ps, alg);
      if (!tau.src.is_empty()) {
        if (!is_partial_isometry_matrix(tau.mat, tau.src, tau.tgt)) fail(braid, "tau form");
        // Conjugation identity: braid src braid^* = tgt.
        std::vector<int> sizes(m);
        for (int i = 0; i < m; ++i) sizes[i] = ps[i].rows();
        UM b = perm_matrix(reindex_prod_map(sigma, sizes), Unitized<GRat>::unit(alg));
        if (!(b * tau.src * adjoint(b) == tau.tgt)) fail(braid, "conjugation");
      }
      FinMap sigma2 = random_bijection(r, m);
      // tau^{sigma, P^{sigma2^-1 i}} o tau^{sigma2, P} = tau^{sigma sigma2, P}.
      FinMap s2inv = sigma2.inverse();
      std::vector<UM> ps2(m);
      for (int i = 1; i <= m; ++i) ps2[i - 1] = ps[s2inv(i) - 1];
      LMor t2 = tau_otimes(inj_right_action(f, sigma), sigma2, ps, alg);
      LMor t1 = tau_otimes(f, sigma, ps2, alg);
      LMor t12 = tau_otimes(f, compose(sigma, sigma2), ps, alg);
      if (!t12.src.is_empty() && !(t1.mat * t2.mat == t12.mat)) fail(cocycle, "otimes cocycle");
      LMor tid = tau_otimes(f, FinMap::identity(m), ps, alg);
      if (!tid.src.is_empty() && !(tid.mat == tid.src)) fail(cocycle, "otimes identity");

      // Additive side.
      int a = r.range(0, 3);
      std::vector<UM> qs;
      for (int x = 0; x < a; ++x)
        qs.push_back(random_unitized_projection(r, alg, r.range(1, cfg.max_dim),
                                                cfg.max_support));
      FinMap pi1 = random_bijection(r, a), pi2 = random_bijection(r, a);
      FinMap p2inv = pi2.inverse();
      std::vector<UM> qs2(a);
      for (int x = 1; x <= a; ++x) qs2[x - 1] = qs[p2inv(x) - 1];
      LMor u2 = tau_oplus(pi2, qs, alg);
      LMor u1 = tau_oplus(pi1, qs2, alg);
      LMor u12 = tau_oplus(compose(pi1, pi2), qs, alg);
      if (!u12.src.is_empty() && !(u1.mat * u2.mat == u12.mat)) fail(cocycle, "oplus cocycle");
    }

    // Absorbing zero: an empty factor kills the product.
    if (m >= 1) {
      std::vector<UM> ps;
      for (int i = 0; i < m; ++i)
        ps.push_back(random_unitized_projection(r, alg, r.range(1, cfg.max_dim),
                                                cfg.max_support));
      ps[r.below(m)] = UM();
      if (!(otimes_matrix(f, ps, alg) == UM())) fail(absorb, "empty factor");
    }

    // Coherence square 1: distributivity against summand reindexing.
    {
      std::vector<std::vector<UM>> fams(m);
      std::vector<FinMap> sigmas(m);
      for (int i = 0; i < m; ++i) {
        int a = r.range(0, cfg.max_family);
        for (int x = 0; x < a; ++x)
          fams[i].push_back(random_unitized_projection(r, alg, r.range(1, cfg.max_dim),
                                                       cfg.max_support));
        sigmas[i] = random_bijection(r, a);
      }
      LMor top = delta_dist(f, fams, alg);
      // Left: otimes of the additive braidings.
      std::vector<LMor> taus;
      for (int i = 0; i < m; ++i) taus.push_back(tau_oplus(sigmas[i], fams[i], alg));
      bool any_empty = top.src.is_empty();
      if (!any_empty) {
        LMor left = otimes(f, taus, alg);
        // Right: additive braiding along the product of the sigmas.
        DepProd outer(m, [&] {
          std::vector<int> as(m);
          for (int i = 0; i < m; ++i) as[i] = static_cast<int>(fams[i].size());
          return as;
        }());
        std::vector<UM> summands;
        for (int X = 1; X <= outer.total(); ++X) {
          std::vector<int> xs = outer.unrank(X);
          std::vector<UM> tuple(m);
          for (int i = 0; i < m; ++i) tuple[i] = fams[i][xs[i] - 1];
          summands.push_back(otimes_matrix(f, tuple, alg));
        }
        LMor right = tau_oplus(prod_of_maps(sigmas), summands, alg);
        // Bottom: distributivity of the reindexed families.
        std::vector<std::vector<UM>> fams2(m);
        for (int i = 0; i < m; ++i) {
          FinMap inv = sigmas[i].inverse();
          fams2[i].resize(fams[i].size());
          for (std::size_t x = 1; x <= fams[i].size(); ++x)
            fams2[i][x - 1] = fams[i][inv(static_cast<int>(x)) - 1];
        }
        LMor bottom = delta_dist(f, fams2, alg);
        if (!(right.mat * top.mat == bottom.mat * left.mat)) fail(dist1, "square");
      }
    }

    // Coherence square 2: distributivity against factor reordering.
    if (m >= 1) {
      FinMap sigma = random_bijection(r, m);
      FinMap sinv = sigma.inverse();
      std::vector<std::vector<UM>> fams(m);
      std::vector<int> as(m);
      for (int i = 0; i < m; ++i) {
        as[i] = r.range(0, cfg.max_family);
        for (int x = 0; x < as[i]; ++x)
          fams[i].push_back(random_unitized_projection(r, alg, r.range(1, cfg.max_dim),
                                                       cfg.max_support));
      }
      LMor top = delta_dist(inj_right_action(f, sigma), fams, alg);
      if (!top.src.is_empty()) {
        // Right 1: per-summand multiplicative braidings.
        DepProd outer(m, as);
        std::vector<LMor> taus;
        std::vector<UM> mid_summands;
        for (int X = 1; X <= outer.total(); ++X) {
          std::vector<int> xs = outer.unrank(X);
          std::vector<UM> tuple(m);
          for (int i = 0; i < m; ++i) tuple[i] = fams[i][xs[i] - 1];
          LMor tx = tau_otimes(f, sigma, tuple, alg);
          taus.push_back(tx);
          mid_summands.push_back(tx.src);
        }
        LMor right1 = oplus(taus);
        // Right 2: additive braiding along sigma<a^i> of the braided summands.
        std::vector<UM> braided;
        for (const auto& tx : taus) braided.push_back(tx.tgt);
        LMor right2 = tau_oplus(reindex_prod_map(sigma, as), braided, alg);
        // Left: multiplicative braiding of the sums.
        std::vector<UM> sums(m);
        for (int i = 0; i < m; ++i) sums[i] = direct_sum<Unitized<GRat>>(fams[i]);
        LMor left = tau_otimes(f, sigma, sums, alg);
        // Bottom: distributivity of the sigma-reordered families.
        std::vector<std::vector<UM>> fams2(m);
        for (int i = 1; i <= m; ++i) fams2[i - 1] = fams[sinv(i) - 1];
        LMor bottom = delta_dist(f, fams2, alg);
        if (!(right2.mat * right1.mat * top.mat == bottom.mat * left.mat))
          fail(dist2, "square");
      }
    }

    // Coherence square 3: iterated distributivity.
    {
      std::vector<std::vector<std::vector<UM>>> nested(m);  // [i][x][y]
      std::vector<int> as(m);
      for (int i = 0; i < m; ++i) {
        as[i] = r.range(0, cfg.max_family);
        nested[i].resize(as[i]);
        for (int x = 0; x < as[i]; ++x) {
          int b = r.range(0, cfg.max_family);
          for (int y = 0; y < b; ++y)
            nested[i][x].push_back(random_unitized_projection(r, alg, 1, cfg.max_support));
        }
      }
      // Top: distributivity of the families of inner sums.
      std::vector<std::vector<UM>> outer_fams(m);
      std::vector<std::vector<UM>> flat_fams(m);
      std::vector<std::vector<int>> bs(m);
      for (int i = 0; i < m; ++i) {
        for (int x = 0; x < as[i]; ++x) {
          outer_fams[i].push_back(direct_sum<Unitized<GRat>>(nested[i][x]));
          bs[i].push_back(static_cast<int>(nested[i][x].size()));
          for (const auto& p : nested[i][x]) flat_fams[i].push_back(p);
        }
      }
      LMor top = delta_dist(f, outer_fams, alg);
      if (!top.src.is_empty()) {
        DepProd outer(m, as);
        std::vector<LMor> inner_deltas;
        for (int X = 1; X <= outer.total(); ++X) {
          std::vector<int> xs = outer.unrank(X);
          std::vector<std::vector<UM>> fam_x(m);
          for (int i = 0; i < m; ++i) fam_x[i] = nested[i][xs[i] - 1];
          inner_deltas.push_back(delta_dist(f, fam_x, alg));
        }
        LMor right = oplus(inner_deltas);
        LMor left = delta_dist(f, flat_fams, alg);
        // Bottom: additive braiding along the delta bijection of the shapes.
        FinMap db = delta_bijection(m, as, bs);
        std::vector<UM> w_summands;
        DepProd bdom(m, [&] {
          std::vector<int> bsum(m);
          for (int i = 0; i < m; ++i) {
            bsum[i] = 0;
            for (int x = 0; x < as[i]; ++x) bsum[i] += bs[i][x];
          }
          return bsum;
        }());
        std::vector<DepSum> bsums;
        for (int i = 0; i < m; ++i) bsums.emplace_back(as[i], bs[i]);
        for (int W = 1; W <= bdom.total(); ++W) {
          std::vector<int> ws = bdom.unrank(W);
          std::vector<UM> tuple(m);
          for (int i = 0; i < m; ++i) {
            auto [x, y] = bsums[i].unrank(ws[i]);
            tuple[i] = nested[i][x - 1][y - 1];
          }
          w_summands.push_back(otimes_matrix(f, tuple, alg));
        }
        LMor bottom = tau_oplus(db, w_summands, alg);
        if (!(right.mat * top.mat == bottom.mat * left.mat)) fail(dist3, "square");
      }
    }
    return out;
  };
  auto all = run_trials<TrialFailures>(trials, run_one);
  for (const auto& tf : all)
    for (const auto& [idx, failure] : tf) slots[idx]->failures.push_back(failure);
  rep.laws = {preserve, functor, nest, unit, braid, cocycle, absorb, dist1, dist2, dist3};
  return rep;
}

/// Negative control: dropping the injection conjugation (i.e. taking the
/// honest Kronecker product over the unitized stabilization) must break
/// composition compatibility over a noncommutative base algebra.
inline bool corrupted_otimes_breaks_composition(const AlgebraPtr& alg, int trials,
                                                std::uint64_t seed) {
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng r = root.fork(t);
    std::vector<LMor> first, second;
    for (int i = 0; i < 2; ++i) {
      auto chain = random_lmor_chain(r, alg, 2, 2, 2);
      first.push_back(chain[0]);
      second.push_back(chain[1]);
    }
    auto naive = [&](const std::vector<UM>& us) {
      return kron<Unitized<GRat>>({us[0], us[1]}, Unitized<GRat>::unit(alg));
    };
    UM a = naive({first[0].mat, first[1].mat});
    UM b = naive({second[0].mat, second[1].mat});
    UM both = naive({second[0].mat * first[0].mat, second[1].mat * first[1].mat});
    if (!(both == b * a)) return true;
  }
  return false;
}

}  // namespace opk

#endif  // OPK_LPERM_HPP
