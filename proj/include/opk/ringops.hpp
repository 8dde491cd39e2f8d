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

#ifndef OPK_RINGOPS_HPP
#define OPK_RINGOPS_HPP

#include <string>
#include <vector>

#include "opk/lperm.hpp"

namespace opk {

// ---------------------------------------------------------------------------
// The category of operators over the injections operad: morphisms pair a
// based map with one operad element per non-base target, of arity the fiber
// size.
// ---------------------------------------------------------------------------

struct HatMor {
  BasedMap psi;
  std::vector<InjTuple> comps;  // comps[i1 - 1] has arity |psi^-1(i1)|
};

inline void validate_hat(const HatMor& f) {
  if (static_cast<int>(f.comps.size()) != f.psi.cod())
    throw ShapeError("HatMor: one operad element per non-base target required");
  for (int i1 = 1; i1 <= f.psi.cod(); ++i1)
    if (f.comps[i1 - 1].arity() != static_cast<int>(f.psi.preimage(i1).size()))
      throw ShapeError("HatMor: component arity must match the fiber size");
}

inline bool operator==(const HatMor& a, const HatMor& b) {
  return a.psi == b.psi && a.comps == b.comps;
}

inline HatMor hat_identity(int m) {
  HatMor f{BasedMap::identity(m), std::vector<InjTuple>(m, InjTuple::identity())};
  return f;
}

/// The section eta on maps whose non-base fibers have at most one element.
inline HatMor hat_eta(const BasedMap& psi) {
  if (!psi.in_Pi()) throw ShapeError("hat_eta: map must have fibers of size at most one");
  HatMor f{psi, {}};
  for (int i1 = 1; i1 <= psi.cod(); ++i1)
    f.comps.push_back(psi.preimage(i1).empty() ? InjTuple() : InjTuple::identity());
  return f;
}

inline HatMor hat_compose(const HatMor& f2, const HatMor& f1) {
  if (f1.psi.cod() != f2.psi.dom()) throw ShapeError("hat_compose: not composable");
  HatMor out{f2.psi * f1.psi, {}};
  for (int i2 = 1; i2 <= f2.psi.cod(); ++i2) {
    std::vector<int> fiber2 = f2.psi.preimage(i2);
    std::vector<InjTuple> gs;
    gs.reserve(fiber2.size());
    for (int i1 : fiber2) gs.push_back(f1.comps[i1 - 1]);
    InjTuple comp = inj_compose(f2.comps[i2 - 1], gs);
    if (comp.arity() > 0)
      comp = inj_right_action(comp, fiber_bijection(f2.psi, f1.psi, i2));
    out.comps.push_back(comp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The wreath product with the based-set category: the category of ring
// operators for the injections model.
// ---------------------------------------------------------------------------

struct WreathObject {
  int m = 0;
  std::vector<int> as;

  friend bool operator==(const WreathObject& a, const WreathObject& b) {
    return a.m == b.m && a.as == b.as;
  }
};

struct WreathMor {
  WreathObject src, tgt;
  HatMor fhat;                   // over the based map psi = fhat.psi
  std::vector<BasedMap> kappas;  // kappas[i1-1]: smash of the fiber a's -> a^{1 i1}
};

inline std::vector<int> fiber_a_parts(const WreathObject& src, const std::vector<int>& fiber) {
  std::vector<int> parts;
  parts.reserve(fiber.size());
  for (int i0 : fiber) parts.push_back(src.as[i0 - 1]);
  return parts;
}

inline void validate_wreath(const WreathMor& w) {
  validate_hat(w.fhat);
  if (w.fhat.psi.dom() != w.src.m || w.fhat.psi.cod() != w.tgt.m)
    throw ShapeError("WreathMor: based map shape mismatch");
  if (static_cast<int>(w.kappas.size()) != w.tgt.m)
    throw ShapeError("WreathMor: one kappa per target coordinate required");
  for (int i1 = 1; i1 <= w.tgt.m; ++i1) {
    std::vector<int> parts = fiber_a_parts(w.src, w.fhat.psi.preimage(i1));
    DepProd smash(static_cast<int>(parts.size()), parts);
    if (w.kappas[i1 - 1].dom() != smash.total() || w.kappas[i1 - 1].cod() != w.tgt.as[i1 - 1])
      throw ShapeError("WreathMor: kappa shape mismatch");
  }
}

inline bool operator==(const WreathMor& a, const WreathMor& b) {
  return a.src == b.src && a.tgt == b.tgt && a.fhat == b.fhat && a.kappas == b.kappas;
}

inline WreathMor wreath_identity(const WreathObject& x) {
  WreathMor w{x, x, hat_identity(x.m), {}};
  for (int i = 0; i < x.m; ++i) w.kappas.push_back(BasedMap::identity(x.as[i]));
  return w;
}

inline WreathMor wreath_compose(const WreathMor& g, const WreathMor& h) {
  if (!(h.tgt == g.src)) throw ShapeError("wreath_compose: not composable");
  WreathMor out{h.src, g.tgt, hat_compose(g.fhat, h.fhat), {}};
  for (int i2 = 1; i2 <= g.tgt.m; ++i2) {
    std::vector<int> fiber2 = g.fhat.psi.preimage(i2);
    std::vector<BasedMap> inner;
    inner.reserve(fiber2.size());
    for (int i1 : fiber2) inner.push_back(h.kappas[i1 - 1]);
    BasedMap smash1 = smash_of_maps(inner);
    FinMap sigma = fiber_bijection(g.fhat.psi, h.fhat.psi, i2);
    std::vector<int> comp_fiber = (g.fhat.psi * h.fhat.psi).preimage(i2);
    std::vector<int> parts = fiber_a_parts(h.src, comp_fiber);
    if (comp_fiber.empty()) parts = {1};  // the <1> convention
    out.kappas.push_back(g.kappas[i2 - 1] * smash1 * smash_reindex(sigma, parts));
  }
  validate_wreath(out);
  return out;
}

// ---------------------------------------------------------------------------
// The lax functor from the category of ring operators to tuples of
// projections over the unitized stabilization.
// ---------------------------------------------------------------------------

inline DepSum object_index(const WreathObject& x) { return DepSum(x.m, x.as); }

/// Image of a projection tuple under a ring-operator morphism: at each target
/// slot, the direct sum over the kappa-fiber of the f-products of the tuple.
inline std::vector<UM> lax_apply_objects(const WreathMor& w, const std::vector<UM>& ps,
                                         const AlgebraPtr& alg) {
  DepSum src_idx = object_index(w.src);
  if (static_cast<int>(ps.size()) != src_idx.total())
    throw ShapeError("lax_apply_objects: tuple length mismatch");
  DepSum tgt_idx = object_index(w.tgt);
  std::vector<UM> out;
  out.reserve(tgt_idx.total());
  for (int slot = 1; slot <= tgt_idx.total(); ++slot) {
    auto [i1, x1] = tgt_idx.unrank(slot);
    std::vector<int> fiber = w.fhat.psi.preimage(i1);
    std::vector<int> parts = fiber_a_parts(w.src, fiber);
    DepProd smash(static_cast<int>(parts.size()), parts);
    std::vector<UM> summands;
    for (int wpt : w.kappas[i1 - 1].preimage(x1)) {
      std::vector<int> xs = smash.unrank(wpt);
      std::vector<UM> tuple;
      tuple.reserve(fiber.size());
      for (std::size_t k = 0; k < fiber.size(); ++k)
        tuple.push_back(ps[src_idx.rank(fiber[k], xs[k]) - 1]);
      summands.push_back(otimes_matrix(w.fhat.comps[i1 - 1], tuple, alg));
    }
    out.push_back(direct_sum<Unitized<GRat>>(summands));
  }
  return out;
}

inline std::vector<LMor> lax_apply_morphisms(const WreathMor& w, const std::vector<LMor>& us,
                                             const AlgebraPtr& alg) {
  DepSum src_idx = object_index(w.src);
  if (static_cast<int>(us.size()) != src_idx.total())
    throw ShapeError("lax_apply_morphisms: tuple length mismatch");
  DepSum tgt_idx = object_index(w.tgt);
  std::vector<LMor> out;
  for (int slot = 1; slot <= tgt_idx.total(); ++slot) {
    auto [i1, x1] = tgt_idx.unrank(slot);
    std::vector<int> fiber = w.fhat.psi.preimage(i1);
    std::vector<int> parts = fiber_a_parts(w.src, fiber);
    DepProd smash(static_cast<int>(parts.size()), parts);
    std::vector<LMor> summands;
    for (int wpt : w.kappas[i1 - 1].preimage(x1)) {
      std::vector<int> xs = smash.unrank(wpt);
      std::vector<LMor> tuple;
      for (std::size_t k = 0; k < fiber.size(); ++k)
        tuple.push_back(us[src_idx.rank(fiber[k], xs[k]) - 1]);
      summands.push_back(otimes(w.fhat.comps[i1 - 1], tuple, alg));
    }
    out.push_back(oplus(summands));
  }
  return out;
}

/// The lax-functor two-cell from Fg Fh to F(gh), stored as its three stages:
/// the distributivity stage, the factor-reordering stage, and the summand-
/// reordering stage.  Each stage is a verified partial isometry per slot.
struct LaxCell {
  std::vector<LMor> stage_delta, stage_factor, stage_summand;
  std::vector<LMor> composite;
};

inline LaxCell lax_omega(const WreathMor& g, const WreathMor& h, const std::vector<UM>& ps,
                         const AlgebraPtr& alg) {
  if (!(h.tgt == g.src)) throw ShapeError("lax_omega: not composable");
  DepSum src_idx = object_index(h.src);
  if (static_cast<int>(ps.size()) != src_idx.total())
    throw ShapeError("lax_omega: tuple length mismatch");
  DepSum tgt_idx = object_index(g.tgt);
  DepSum mid_idx = object_index(g.src);

  LaxCell cell;
  WreathMor gh = wreath_compose(g, h);
  std::vector<UM> expected_src = lax_apply_objects(g, lax_apply_objects(h, ps, alg), alg);
  std::vector<UM> expected_tgt = lax_apply_objects(gh, ps, alg);

  for (int slot = 1; slot <= tgt_idx.total(); ++slot) {
    auto [i2, x2] = tgt_idx.unrank(slot);
    std::vector<int> fiber2 = g.fhat.psi.preimage(i2);
    std::vector<int> parts2 = fiber_a_parts(g.src, fiber2);
    DepProd smash2(static_cast<int>(parts2.size()), parts2);
    const InjTuple& f2 = g.fhat.comps[i2 - 1];

    FinMap sigma = fiber_bijection(g.fhat.psi, h.fhat.psi, i2);
    std::vector<int> comp_fiber = (g.fhat.psi * h.fhat.psi).preimage(i2);
    const InjTuple& fcomp = gh.fhat.comps[i2 - 1];

    // Stage 1: inside each outer summand, distribute the f2-product over the
    // direct sums delivered by h.
    std::vector<LMor> deltas;
    std::vector<std::vector<std::vector<UM>>> family_store;  // per w2: families
    std::vector<int> w2list = g.kappas[i2 - 1].preimage(x2);
    for (int w2 : w2list) {
      std::vector<int> x1s = smash2.unrank(w2);
      std::vector<std::vector<UM>> families(fiber2.size());
      for (std::size_t k = 0; k < fiber2.size(); ++k) {
        int i1 = fiber2[k];
        std::vector<int> fiber1 = h.fhat.psi.preimage(i1);
        std::vector<int> parts1 = fiber_a_parts(h.src, fiber1);
        DepProd smash1(static_cast<int>(parts1.size()), parts1);
        for (int w1 : h.kappas[i1 - 1].preimage(x1s[k])) {
          std::vector<int> x0s = smash1.unrank(w1);
          std::vector<UM> tuple;
          for (std::size_t l = 0; l < fiber1.size(); ++l)
            tuple.push_back(ps[src_idx.rank(fiber1[l], x0s[l]) - 1]);
          families[k].push_back(otimes_matrix(h.fhat.comps[i1 - 1], tuple, alg));
        }
      }
      deltas.push_back(delta_dist(f2, families, alg));
      family_store.push_back(std::move(families));
    }
    LMor stage1 = oplus(deltas);

    // Stage 2: reorder the factors of each nested product from lexicographic
    // to composite-fiber order, by the multiplicative braiding along the
    // inverse fiber bijection.  Each summand also records the point of the
    // smash domain of (smash kappa1) it occupies, for the stage-3 reordering.
    std::vector<LMor> taus;
    std::vector<int> u_ranks;
    std::vector<int> mid_doms(fiber2.size());
    for (std::size_t k = 0; k < fiber2.size(); ++k)
      mid_doms[k] = h.kappas[fiber2[k] - 1].dom();
    DepProd udom(static_cast<int>(fiber2.size()), mid_doms);
    for (std::size_t wi = 0; wi < w2list.size(); ++wi) {
      int w2 = w2list[wi];
      std::vector<int> x1s = smash2.unrank(w2);
      std::vector<int> inner_counts(fiber2.size());
      for (std::size_t k = 0; k < fiber2.size(); ++k)
        inner_counts[k] = static_cast<int>(family_store[wi][k].size());
      DepProd inner(static_cast<int>(fiber2.size()), inner_counts);
      for (int X = 1; X <= inner.total(); ++X) {
        std::vector<int> w1pos = inner.unrank(X);
        // Flat factor tuple in lexicographic (i1, i0) order.
        std::vector<UM> flat;
        std::vector<int> upoint(fiber2.size());
        for (std::size_t k = 0; k < fiber2.size(); ++k) {
          int i1 = fiber2[k];
          std::vector<int> fiber1 = h.fhat.psi.preimage(i1);
          std::vector<int> parts1 = fiber_a_parts(h.src, fiber1);
          DepProd smash1(static_cast<int>(parts1.size()), parts1);
          std::vector<int> w1s = h.kappas[i1 - 1].preimage(x1s[k]);
          upoint[k] = w1s[w1pos[k] - 1];
          std::vector<int> x0s = smash1.unrank(upoint[k]);
          for (std::size_t l = 0; l < fiber1.size(); ++l)
            flat.push_back(ps[src_idx.rank(fiber1[l], x0s[l]) - 1]);
        }
        u_ranks.push_back(udom.rank(upoint));
        if (comp_fiber.empty()) {
          taus.push_back(identity_morphism(otimes_matrix(fcomp, {}, alg)));
        } else {
          taus.push_back(tau_otimes(fcomp, sigma.inverse(), flat, alg));
        }
      }
    }
    LMor stage2 = oplus(taus);

    // Stage 3: reorder the outer summands from the enumeration order above to
    // the composite-kappa fiber order, through the smash reindexing of the
    // fiber bijection.
    std::vector<int> parts0 = fiber_a_parts(h.src, comp_fiber);
    if (comp_fiber.empty()) parts0 = {1};
    BasedMap s = smash_reindex(sigma, parts0);
    const BasedMap& kcomp = gh.kappas[i2 - 1];
    std::vector<int> comp_fiber_pts = kcomp.preimage(x2);
    std::vector<int> comp_pos(kcomp.dom() + 1, 0);
    for (std::size_t v = 0; v < comp_fiber_pts.size(); ++v)
      comp_pos[comp_fiber_pts[v]] = static_cast<int>(v) + 1;
    std::vector<int> s_inv(s.cod() + 1, 0);
    for (int v = 1; v <= s.dom(); ++v) s_inv[s(v)] = v;
    std::vector<int> rho_table(u_ranks.size(), 0);
    for (std::size_t u = 0; u < u_ranks.size(); ++u)
      rho_table[u] = comp_pos[s_inv[u_ranks[u]]];
    FinMap rho(static_cast<int>(u_ranks.size()), static_cast<int>(comp_fiber_pts.size()),
               rho_table);
    std::vector<UM> stage2_targets;
    for (const auto& t : taus) stage2_targets.push_back(t.tgt);
    LMor stage3 = tau_oplus(rho, stage2_targets, alg);

    // Assemble and check the stage boundaries.
    LMor comp_slot = compose(stage3, compose(stage2, stage1));
    if (!(comp_slot.src == expected_src[slot - 1] && comp_slot.tgt == expected_tgt[slot - 1]))
      throw std::logic_error("lax_omega: stage boundaries do not match the lax images");
    cell.stage_delta.push_back(stage1);
    cell.stage_factor.push_back(stage2);
    cell.stage_summand.push_back(stage3);
    cell.composite.push_back(comp_slot);
  }
  return cell;
}

// ---------------------------------------------------------------------------
// Street's first construction over a fixed base object.
// ---------------------------------------------------------------------------

struct StreetObject {
  WreathMor phi;        // slice leg into the base object
  std::vector<UM> ps;   // projection tuple at the slice source
};

struct StreetMor {
  // From (phi0, P1) to (phi1, P2): a slice morphism psi with phi0 psi = phi1
  // (note the reversed orientation) and a tuple P1 -> F(psi) P2.
  WreathMor psi;
  std::vector<LMor> us;
};

inline StreetMor street_identity(const StreetObject& x) {
  StreetMor m{wreath_identity(x.phi.src), {}};
  for (const auto& p : x.ps) m.us.push_back(identity_morphism(p));
  return m;
}

/// (psi2, U2)(psi1, U1) := (psi1 psi2, omega^{psi1, psi2} (F psi1 U2) U1).
inline StreetMor street_compose(const StreetMor& m2, const StreetMor& m1,
                                const std::vector<UM>& p3, const AlgebraPtr& alg) {
  StreetMor out{wreath_compose(m1.psi, m2.psi), {}};
  LaxCell omega = lax_omega(m1.psi, m2.psi, p3, alg);
  std::vector<LMor> pushed = lax_apply_morphisms(m1.psi, m2.us, alg);
  for (std::size_t s = 0; s < m1.us.size(); ++s)
    out.us.push_back(compose(omega.composite[s], compose(pushed[s], m1.us[s])));
  return out;
}

inline StreetObject street_pushforward_object(const WreathMor& chi, const StreetObject& x) {
  return {wreath_compose(chi, x.phi), x.ps};
}

// The morphism part of the pushforward leaves the slice data untouched.
inline StreetMor street_pushforward_morphism(const WreathMor&, const StreetMor& m) { return m; }

/// F of the adjunction: a tuple at X becomes the identity-slice object.
inline StreetObject adjoint_f(const WreathObject& x, const std::vector<UM>& ps) {
  StreetObject obj;
  obj.phi = wreath_identity(x);
  obj.ps = ps;
  return obj;
}

/// U of the adjunction: push the tuple through the slice leg.
inline std::vector<UM> adjoint_u(const StreetObject& obj, const AlgebraPtr& alg) {
  return lax_apply_objects(obj.phi, obj.ps, alg);
}

inline std::vector<LMor> adjoint_u_morphism(const StreetObject& src, const StreetMor& m,
                                            const std::vector<UM>& p2, const AlgebraPtr& alg) {
  // F(phi0) U corrected by omega^{phi0, psi} lands in F(phi1) P2.
  LaxCell omega = lax_omega(src.phi, m.psi, p2, alg);
  std::vector<LMor> pushed = lax_apply_morphisms(src.phi, m.us, alg);
  std::vector<LMor> out;
  for (std::size_t s = 0; s < pushed.size(); ++s)
    out.push_back(compose(omega.composite[s], pushed[s]));
  return out;
}

// ---------------------------------------------------------------------------
// Random data.
// ---------------------------------------------------------------------------

inline BasedMap random_based_map(Rng& rng, int m0, int m1) {
  std::vector<int> t(m0);
  for (int& v : t) v = rng.range(0, m1);
  return BasedMap(m0, m1, std::move(t));
}

/// A random based map hitting every non-base target that the domain can
/// cover, so downstream fibers are rarely empty.
inline BasedMap random_covering_based_map(Rng& rng, int m0, int m1) {
  std::vector<int> t(m0, 0);
  if (m0 > 0 && m1 > 0) {
    FinMap sel = random_injection(rng, std::min(m0, m1), m0);
    for (int y = 1; y <= std::min(m0, m1); ++y) t[sel(y) - 1] = y;
    for (int& v : t)
      if (v == 0) v = rng.range(0, m1);
  }
  return BasedMap(m0, m1, std::move(t));
}

inline HatMor random_hat_mor(Rng& rng, int m0, int m1) {
  HatMor f{random_based_map(rng, m0, m1), {}};
  for (int i1 = 1; i1 <= m1; ++i1)
    f.comps.push_back(random_inj_tuple(rng, static_cast<int>(f.psi.preimage(i1).size())));
  return f;
}

inline WreathObject random_wreath_object(Rng& rng, int max_m, int max_a, int min_m = 0,
                                         int min_a = 0) {
  WreathObject x;
  x.m = rng.range(min_m, max_m);
  for (int i = 0; i < x.m; ++i) x.as.push_back(rng.range(min_a, max_a));
  return x;
}

inline WreathMor random_wreath_mor(Rng& rng, const WreathObject& src, const WreathObject& tgt,
                                   bool covering = false) {
  WreathMor w{src, tgt, HatMor{}, {}};
  BasedMap psi = covering ? random_covering_based_map(rng, src.m, tgt.m)
                          : random_based_map(rng, src.m, tgt.m);
  w.fhat = HatMor{psi, {}};
  for (int i1 = 1; i1 <= tgt.m; ++i1)
    w.fhat.comps.push_back(random_inj_tuple(rng, static_cast<int>(psi.preimage(i1).size())));
  for (int i1 = 1; i1 <= tgt.m; ++i1) {
    std::vector<int> parts = fiber_a_parts(src, w.fhat.psi.preimage(i1));
    DepProd smash(static_cast<int>(parts.size()), parts);
    w.kappas.push_back(covering ? random_covering_based_map(rng, smash.total(), tgt.as[i1 - 1])
                                : random_based_map(rng, smash.total(), tgt.as[i1 - 1]));
  }
  validate_wreath(w);
  return w;
}

inline std::vector<UM> random_object_tuple(Rng& rng, const WreathObject& x,
                                           const AlgebraPtr& alg, int max_dim = 2) {
  DepSum idx = object_index(x);
  std::vector<UM> ps;
  for (int s = 0; s < idx.total(); ++s)
    ps.push_back(random_unitized_projection(rng, alg, rng.range(1, max_dim), 2));
  return ps;
}

}  // namespace opk

#endif  // OPK_RINGOPS_HPP
