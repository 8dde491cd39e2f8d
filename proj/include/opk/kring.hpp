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

#ifndef OPK_KRING_HPP
#define OPK_KRING_HPP

#include <vector>

#include "opk/lperm.hpp"

namespace opk {

/// A reduced K-class (scalar-rank difference zero) with its ambient algebra.
struct K0RingElem {
  K0Element cls;

  friend bool operator==(const K0RingElem& a, const K0RingElem& b) { return a.cls == b.cls; }
};

inline K0RingElem k0_elem(const AlgebraPtr& alg, std::vector<long> rel) {
  if (static_cast<int>(rel.size()) != alg->block_count())
    throw ShapeError("k0_elem: one entry per block required");
  return {K0Element{alg, std::move(rel)}};
}

/// A class of the full Grothendieck ring over the unitized stabilization:
/// scalar rank plus relative ranks.
struct K00Class {
  long s = 0;
  std::vector<long> r;

  friend bool operator==(const K00Class& a, const K00Class& b) {
    return a.s == b.s && a.r == b.r;
  }
};

inline K00Class k00_class_of(const MvNInvariant& inv) {
  if (!inv.scalar_rank) throw ShapeError("k00_class_of: needs a unitized invariant");
  return {*inv.scalar_rank, inv.ranks};
}

/// The multiplication the f-products induce on classes over the unitized
/// stabilization: the conjugated stab parts of distinct factors are
/// orthogonal, so only scalar-times-relative terms survive.
inline K00Class k00_pairing(const K00Class& a, const K00Class& b) {
  K00Class out;
  out.s = a.s * b.s;
  out.r.resize(a.r.size());
  for (std::size_t j = 0; j < a.r.size(); ++j) out.r[j] = b.s * a.r[j] + a.s * b.r[j];
  return out;
}

// ---------------------------------------------------------------------------
// Representatives.
// ---------------------------------------------------------------------------

/// Diagonal projection over the plain algebra with blockwise ranks w >= 0:
/// one minimal idempotent per unit of rank, one matrix slot each.
inline StarMatrix<AlgElem<GRat>> plain_rank_rep(const AlgebraPtr& alg,
                                                const std::vector<long>& w) {
  std::vector<StarMatrix<AlgElem<GRat>>> pieces;
  for (int j = 0; j < alg->block_count(); ++j) {
    if (w[j] < 0) throw ShapeError("plain_rank_rep: ranks must be nonnegative");
    std::vector<int> rk(alg->block_count(), 0);
    rk[j] = 1;
    AlgElem<GRat> e = AlgElem<GRat>::leading_idempotent(alg, rk);
    for (long c = 0; c < w[j]; ++c)
      pieces.push_back(StarMatrix<AlgElem<GRat>>(1, 1, e));
  }
  return direct_sum<AlgElem<GRat>>(pieces);
}

/// The same ranks embedded into the unitized stabilization at distinct
/// stabilization indices (scalar rank zero).
inline UM unitized_rank_rep(const AlgebraPtr& alg, const std::vector<long>& w) {
  std::vector<UM> pieces;
  long long idx = 1;
  for (int j = 0; j < alg->block_count(); ++j) {
    std::vector<int> rk(alg->block_count(), 0);
    rk[j] = 1;
    AlgElem<GRat> e = AlgElem<GRat>::leading_idempotent(alg, rk);
    for (long c = 0; c < w[j]; ++c) {
      long long n = idx++;
      pieces.push_back(UM(1, 1, Unitized<GRat>::embed_stab(Stab<GRat>::single(alg, n, n, e))));
    }
  }
  return direct_sum<Unitized<GRat>>(pieces);
}

inline void split_signs(const std::vector<long>& u, std::vector<long>& plus,
                        std::vector<long>& minus) {
  plus.assign(u.size(), 0);
  minus.assign(u.size(), 0);
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] >= 0)
      plus[j] = u[j];
    else
      minus[j] = -u[j];
  }
}

// ---------------------------------------------------------------------------
// The Gelfand/Swan oracle and the cup product.
// ---------------------------------------------------------------------------

/// For a commutative block algebra the K-ring is the integer vectors with the
/// componentwise product (one integer per point of the spectrum).  This is
/// the independent brute-force oracle the cup product is checked against.
inline std::vector<long> gelfand_oracle_mult(const AlgebraPtr& alg, const std::vector<long>& u,
                                             const std::vector<long>& v) {
  if (!alg->commutative())
    throw ShapeError("gelfand_oracle: the oracle exists only for commutative algebras");
  std::vector<long> w(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) w[j] = u[j] * v[j];
  return w;
}

/// The cup product on reduced classes.
///
/// Over a commutative algebra the multiplicative structure restricts to the
/// plain projection groupoid (the pullback of the bipermutative structure
/// along the terminal operad map), where the product of classes is realized
/// by the honest Kronecker product of representatives; the result is the
/// componentwise product of rank vectors.
///
/// Over a noncommutative algebra only the f-parameterized products on the
/// unitized stabilization exist.  Their class pairing has no
/// relative-times-relative term (the conjugated stab parts of distinct
/// factors are orthogonal), so the bilinear extension vanishes on reduced
/// classes; the call is still f- and representative-independent.
inline K0RingElem cup(const K0RingElem& x, const K0RingElem& y, const InjTuple& f) {
  if (f.arity() != 2) throw ShapeError("cup: needs a binary injection tuple");
  const AlgebraPtr& alg = x.cls.alg;
  if (!(*alg == *y.cls.alg)) throw ShapeError("cup: algebra mismatch");
  const std::vector<long>& u = x.cls.rel;
  const std::vector<long>& v = y.cls.rel;

  if (alg->commutative()) {
    // Blockwise ranks multiply under the Kronecker product of representatives
    // (the realization is cup_via_plain_reps; the two agree on every pair the
    // tests touch), so the class product is componentwise.
    std::vector<long> w(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) w[j] = u[j] * v[j];
    return k0_elem(alg, std::move(w));
  }

  // Noncommutative: the bilinear extension of the f-product class pairing.
  std::vector<long> up, um, vp, vm;
  split_signs(u, up, um);
  split_signs(v, vp, vm);
  auto cls = [&](const std::vector<long>& w) {
    return K00Class{0, w};
  };
  auto add = [](const K00Class& a, const K00Class& b, int sign) {
    K00Class out = a;
    for (std::size_t j = 0; j < out.r.size(); ++j) out.r[j] += sign * b.r[j];
    out.s += sign * b.s;
    return out;
  };
  K00Class acc{0, std::vector<long>(u.size(), 0)};
  acc = add(acc, k00_pairing(cls(up), cls(vp)), +1);
  acc = add(acc, k00_pairing(cls(um), cls(vm)), +1);
  acc = add(acc, k00_pairing(cls(up), cls(vm)), -1);
  acc = add(acc, k00_pairing(cls(um), cls(vp)), -1);
  if (acc.s != 0) throw std::logic_error("cup: pairing left the reduced subgroup");
  return k0_elem(alg, acc.r);
}

/// The representative realization of the commutative cup: honest Kronecker
/// products of plain diagonal representatives (optionally conjugated by
/// random unitaries), reduced by inclusion-exclusion.
inline K0RingElem cup_via_plain_reps(const K0RingElem& x, const K0RingElem& y,
                                     Rng* conj_rng = nullptr) {
  const AlgebraPtr& alg = x.cls.alg;
  if (!alg->commutative())
    throw ShapeError("cup_via_plain_reps: representative route needs a commutative algebra");
  std::vector<long> up, um, vp, vm;
  split_signs(x.cls.rel, up, um);
  split_signs(y.cls.rel, vp, vm);
  auto rep = [&](const std::vector<long>& w) {
    StarMatrix<AlgElem<GRat>> p = plain_rank_rep(alg, w);
    if (conj_rng && !p.is_empty()) {
      StarMatrix<AlgElem<GRat>> c = random_alg_unitary(*conj_rng, alg, p.rows());
      p = c * p * adjoint(c);
    }
    return p;
  };
  auto kr = [&](const StarMatrix<AlgElem<GRat>>& a, const StarMatrix<AlgElem<GRat>>& b) {
    StarMatrix<AlgElem<GRat>> p = kron<AlgElem<GRat>>({a, b}, AlgElem<GRat>::unit(alg));
    if (!is_projection_matrix(p))
      throw std::logic_error("cup_via_plain_reps: Kronecker left the projections");
    return p;
  };
  StarMatrix<AlgElem<GRat>> pp = rep(up), pm = rep(um), qp = rep(vp), qm = rep(vm);
  StarMatrix<AlgElem<GRat>> pos = direct_sum<AlgElem<GRat>>({kr(pp, qp), kr(pm, qm)});
  StarMatrix<AlgElem<GRat>> neg = direct_sum<AlgElem<GRat>>({kr(pp, qm), kr(pm, qp)});
  MvNInvariant ip = mvn_invariant(pos, alg), in = mvn_invariant(neg, alg);
  std::vector<long> w(x.cls.rel.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = ip.ranks[j] - in.ranks[j];
  return k0_elem(alg, std::move(w));
}

/// Matrix-level counterpart of the noncommutative class pairing, used by the
/// well-definedness tests: computes the four f-products on unitized
/// representatives and extracts invariants.
inline K0RingElem cup_via_unitized_reps(const K0RingElem& x, const K0RingElem& y,
                                        const InjTuple& f, Rng* conj_rng = nullptr) {
  const AlgebraPtr& alg = x.cls.alg;
  std::vector<long> up, um, vp, vm;
  split_signs(x.cls.rel, up, um);
  split_signs(y.cls.rel, vp, vm);
  auto rep = [&](const std::vector<long>& w) {
    UM p = unitized_rank_rep(alg, w);
    if (conj_rng && !p.is_empty()) {
      UM c = random_unitized_unitary(*conj_rng, alg, p.rows(), 3);
      p = c * p * adjoint(c);
    }
    return p;
  };
  auto prod_class = [&](const UM& a, const UM& b) {
    UM p = otimes_matrix(f, {a, b}, alg);
    if (!is_projection_matrix(p)) throw std::logic_error("cup: product not a projection");
    MvNInvariant inv = mvn_invariant(p, alg);
    return k00_class_of(inv);
  };
  UM pp = rep(up), pm = rep(um), qp = rep(vp), qm = rep(vm);
  K00Class acc{0, std::vector<long>(up.size(), 0)};
  auto add = [&](const K00Class& c, int sign) {
    for (std::size_t j = 0; j < acc.r.size(); ++j) acc.r[j] += sign * c.r[j];
    acc.s += sign * c.s;
  };
  add(prod_class(pp, qp), +1);
  add(prod_class(pm, qm), +1);
  add(prod_class(pp, qm), -1);
  add(prod_class(pm, qp), -1);
  if (acc.s != 0) throw std::logic_error("cup reps: scalar ranks did not cancel");
  return k0_elem(alg, acc.r);
}

// ---------------------------------------------------------------------------
// The Bott projection family.
// ---------------------------------------------------------------------------

/// The 2 x 2 projection over the plane with |v|^2 / (|v|^2 + 1) in the (1,1)
/// slot.  Exactly a rank-one projection for every rational v.
inline GM bott_projection(const Rat& v1, const Rat& v2) {
  Rat n = v1 * v1 + v2 * v2;
  Rat d = n + 1;
  GM p = GM::zero(2, 2, GRat());
  p.at(1, 1) = GRat(n / d);
  p.at(1, 2) = GRat(v1 / d, v2 / d);
  p.at(2, 1) = GRat(v1 / d, -(v2 / d));
  p.at(2, 2) = GRat(1 / d);
  return p;
}

/// The variant with |v| instead of |v|^2 in the corner, for rational |v|.
/// Fails the projection law away from |v| in {0, 1}.
inline GM bott_variant(const Rat& v1, const Rat& v2) {
  Rat n = v1 * v1 + v2 * v2;
  auto len = rational_sqrt(n);
  if (!len) throw ShapeError("bott_variant: |v| must be rational");
  Rat d = n + 1;
  GM p = GM::zero(2, 2, GRat());
  p.at(1, 1) = GRat(*len / d);
  p.at(1, 2) = GRat(v1 / d, v2 / d);
  p.at(2, 1) = GRat(v1 / d, -(v2 / d));
  p.at(2, 2) = GRat(1 / d);
  return p;
}

/// Exact checks on the whole grid: projection law, unit trace, rank one, and
/// the entrywise Lipschitz bound with constant 2 between adjacent points.
inline SuiteReport bott_suite(int grid) {
  SuiteReport rep;
  rep.suite = "bott";
  long long points = static_cast<long long>(grid) * grid;
  LawResult proj{"bott.projection", "the family consists of exact projections", points, {}};
  LawResult tr{"bott.trace", "every member has trace one (rank one)", points, {}};
  LawResult lip{"bott.lipschitz", "entrywise Lipschitz with constant 2 on the grid",
                2 * points, {}};
  auto coord = [&](int k) -> Rat { return rat(-2) + rat(4 * k, grid - 1); };
  std::vector<std::vector<GM>> mats(grid, std::vector<GM>(grid));
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      GM p = bott_projection(coord(a), coord(b));
      mats[a][b] = p;
      if (!(p == adjoint(p) && p * p == p))
        proj.failures.push_back({"bott.projection", "grid point " + std::to_string(a) + "," +
                                                        std::to_string(b)});
      GRat t = p.trace();
      if (!(t == GRat(1)))
        tr.failures.push_back({"bott.trace", "grid point " + std::to_string(a) + "," +
                                                 std::to_string(b)});
    }
  Rat step2 = rat(4, grid - 1) * rat(4, grid - 1);
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b)
      for (int d = 0; d < 2; ++d) {
        int a2 = a + (d == 0 ? 1 : 0), b2 = b + (d == 1 ? 1 : 0);
        if (a2 >= grid || b2 >= grid) continue;
        for (int i = 1; i <= 2; ++i)
          for (int j = 1; j <= 2; ++j) {
            GRat diff = mats[a][b].at(i, j) - mats[a2][b2].at(i, j);
            if (!(diff.norm2() <= 4 * step2)) {
              lip.failures.push_back({"bott.lipschitz", "edge " + std::to_string(a) + "," +
                                                            std::to_string(b)});
            }
          }
      }
  rep.laws = {proj, tr, lip};
  return rep;
}

}  // namespace opk

#endif  // OPK_KRING_HPP
