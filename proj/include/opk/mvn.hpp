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

#ifndef OPK_MVN_HPP
#define OPK_MVN_HPP

#include <optional>
#include <string>
#include <vector>

#include "opk/linalg.hpp"
#include "opk/matlaws.hpp"
#include "opk/numeric.hpp"

namespace opk {

struct InvalidProjection : std::domain_error {
  using std::domain_error::domain_error;
};

constexpr double kWitnessTol = 1e-9;

inline long integer_of(const GRat& v, const char* what) {
  if (!v.is_real() || v.re.get_den() != 1)
    throw InvalidProjection(std::string(what) + ": trace is not an integer");
  if (!v.re.get_num().fits_slong_p())
    throw InvalidProjection(std::string(what) + ": trace out of range");
  return v.re.get_num().get_si();
}

/// The decidable equivalence invariant: blockwise ranks for projections over
/// a block algebra; scalar rank plus blockwise relative ranks over the
/// unitized stabilization (where relative ranks may be negative).
struct MvNInvariant {
  std::optional<long> scalar_rank;
  std::vector<long> ranks;

  friend bool operator==(const MvNInvariant& a, const MvNInvariant& b) {
    return a.scalar_rank == b.scalar_rank && a.ranks == b.ranks;
  }
  std::string str() const {
    std::string s;
    if (scalar_rank) s += "scalar " + std::to_string(*scalar_rank) + ", rel ";
    s += "(";
    for (std::size_t i = 0; i < ranks.size(); ++i)
      s += (i ? "," : "") + std::to_string(ranks[i]);
    return s + ")";
  }
};

/// Blockwise rank of a projection over a block algebra (the trace of each
/// scalar block expansion, asserted integer).
inline MvNInvariant mvn_invariant(const StarMatrix<AlgElem<GRat>>& p, const AlgebraPtr& alg) {
  if (!is_projection_matrix(p)) throw InvalidProjection("mvn_invariant: not a projection");
  MvNInvariant inv;
  for (int j = 0; j < alg->block_count(); ++j) {
    StarMatrix<GRat> blk = expand_block(p, alg, j);
    long r = blk.is_empty() ? 0 : integer_of(blk.trace(), "blockwise rank");
    if (r < 0) throw InvalidProjection("mvn_invariant: negative rank");
    inv.ranks.push_back(r);
  }
  return inv;
}

inline MvNInvariant mvn_invariant(const StarMatrix<Unitized<GRat>>& p, const AlgebraPtr& alg) {
  if (!is_projection_matrix(p)) throw InvalidProjection("mvn_invariant: not a projection");
  MvNInvariant inv;
  if (p.is_empty()) {
    inv.scalar_rank = 0;
    inv.ranks.assign(alg->block_count(), 0);
    return inv;
  }
  inv.scalar_rank = integer_of(scalar_matrix(p).trace(), "scalar rank");
  for (int j = 0; j < alg->block_count(); ++j) {
    GRat t;
    for (int mu = 1; mu <= p.rows(); ++mu) t = t + p.at(mu, mu).hat().diag_block_trace(j);
    inv.ranks.push_back(integer_of(t, "relative rank"));
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Witness construction.
// ---------------------------------------------------------------------------

/// A constructed and verified Murray-von Neumann witness between scalar
/// projections.  Rank-zero pairs carry the (possibly formal) zero matrix.
struct ScalarWitness {
  bool exact = true;
  GM w;                   // valid when exact
  StarMatrix<CD> wf;      // valid when !exact, certified to kWitnessTol
};

namespace detail {

// 0/1 diagonal projections admit positional witnesses; this shortcut carries
// most of the exhaustive diagonal families.  Allocation-free scan.
inline bool monomial_positions(const GM& p, std::vector<int>& pos) {
  pos.clear();
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.cols(); ++j) {
      const GRat& v = p.at(i, j);
      if (!v.is_real()) return false;
      if (i == j) {
        if (v.re == 1)
          pos.push_back(i);
        else if (v.re != 0)
          return false;
      } else if (v.re != 0) {
        return false;
      }
    }
  return true;
}

inline StarMatrix<CD> orthonormalize_columns(StarMatrix<CD> x) {
  int n = x.rows(), r = x.cols();
  for (int pass = 0; pass < 2; ++pass)
    for (int c = 1; c <= r; ++c) {
      for (int prev = 1; prev < c; ++prev) {
        CD dot{};
        for (int i = 1; i <= n; ++i) dot += std::conj(x.at(i, prev)) * x.at(i, c);
        for (int i = 1; i <= n; ++i) x.at(i, c) -= dot * x.at(i, prev);
      }
      double nrm = 0;
      for (int i = 1; i <= n; ++i) nrm += std::norm(x.at(i, c));
      nrm = std::sqrt(nrm);
      for (int i = 1; i <= n; ++i) x.at(i, c) /= nrm;
    }
  return x;
}

inline std::optional<GM> exact_scalar_witness(const GM& p, const GM& q, Field field) {
  GM x = column_space_basis(p);
  GM y = column_space_basis(q);
  if (x.cols() != y.cols()) return std::nullopt;
  int r = x.cols();
  GM gx = adjoint(x) * x, gy = adjoint(y) * y;
  auto [lx, dx] = ldl_decompose(gx);
  auto [ly, dy] = ldl_decompose(gy);
  GM c = GM::zero(r, r, GRat());
  for (int k = 1; k <= r; ++k) {
    Rat ratio = dx[k - 1] / dy[k - 1];
    if (field == Field::Real) {
      auto s = rational_sqrt(ratio);
      if (!s) return std::nullopt;
      c.at(k, k) = GRat(*s);
    } else {
      auto s = gaussian_norm_sqrt(ratio);
      if (!s) return std::nullopt;
      c.at(k, k) = *s;
    }
  }
  GM b = unit_upper_inverse(adjoint(ly)) * c * adjoint(lx);
  GM w = y * b * matrix_inverse(gx) * adjoint(x);
  if (!is_partial_isometry_matrix(w, p, q))
    throw std::logic_error("exact_scalar_witness: construction failed verification");
  return w;
}

}  // namespace detail

/// An explicit partial isometry between equal-rank scalar projections.
/// The exact route diagonalizes the Gram forms by LDL* and matches the pivots
/// by Q(i)-norm square roots; when a pivot ratio is not a norm the witness is
/// certified on the float backend instead.
inline ScalarWitness scalar_witness(const GM& p, const GM& q, Field field) {
  ScalarWitness out;
  if (p == q) {
    out.w = p;  // the identity morphism of P is P itself
    return out;
  }
  {
    std::vector<int> ppos, qpos;
    if (detail::monomial_positions(p, ppos) && detail::monomial_positions(q, qpos)) {
      // For 0/1 diagonals the scan above is already the exact verification:
      // with W carrying ones at (qpos[k], ppos[k]), W*W is the diagonal at
      // ppos and WW* the diagonal at qpos, entry by entry.  Rank-zero pairs
      // (including the formal empty matrix) get the zero witness.
      if (ppos.size() != qpos.size())
        throw std::logic_error("scalar_witness: monomial ranks differ");
      out.w = GM::zero(q.rows(), p.rows(), GRat());
      for (std::size_t k = 0; k < ppos.size(); ++k) out.w.at(qpos[k], ppos[k]) = GRat(1);
      return out;
    }
  }
  if (p.is_empty() || q.is_empty())
    throw std::logic_error("scalar_witness: empty matrix against a nonzero projection");
  if (integer_of(p.trace(), "rank") == 0) {
    out.w = GM::zero(q.rows(), p.rows(), GRat());
    return out;
  }
  if (auto w = detail::exact_scalar_witness(p, q, field)) {
    out.w = *w;
    return out;
  }
  StarMatrix<CD> wx = detail::orthonormalize_columns(to_float(column_space_basis(p)));
  StarMatrix<CD> wy = detail::orthonormalize_columns(to_float(column_space_basis(q)));
  StarMatrix<CD> u = wy * adjoint(wx);
  if (!is_partial_isometry_tol(u, to_float(p), to_float(q), kWitnessTol))
    throw std::logic_error("scalar_witness: float certification failed");
  out.exact = false;
  out.wf = u;
  return out;
}

/// Witness over a block algebra: built blockwise.  Exact when every block is.
struct AlgWitness {
  bool exact = true;
  StarMatrix<AlgElem<GRat>> w;
  std::vector<StarMatrix<CD>> wf_blocks;  // per block, when !exact
};

inline AlgWitness alg_witness(const StarMatrix<AlgElem<GRat>>& p,
                              const StarMatrix<AlgElem<GRat>>& q, const AlgebraPtr& alg) {
  AlgWitness out;
  if (is_zero_matrix(p) && is_zero_matrix(q)) {
    // Rank-zero classes: the witness is the (possibly formal empty) zero
    // matrix, certified by both sides being zero projections.
    out.w = StarMatrix<AlgElem<GRat>>::zero(q.rows(), p.rows(), AlgElem<GRat>::zero(alg));
    return out;
  }
  // Each block witness is verified exactly (or to tolerance) against its own
  // expansion inside scalar_witness; blockwise certificates are equivalent to
  // the algebra-level one.
  std::vector<ScalarWitness> blocks(alg->block_count());
  bool all_exact = true;
  for (int j = 0; j < alg->block_count(); ++j) {
    blocks[j] = scalar_witness(expand_block(p, alg, j), expand_block(q, alg, j), alg->field);
    all_exact &= blocks[j].exact;
  }
  out.exact = all_exact;
  if (all_exact) {
    AlgElem<GRat> z = AlgElem<GRat>::zero(alg);
    out.w = StarMatrix<AlgElem<GRat>>::zero(q.rows(), p.rows(), z);
    for (int j = 0; j < alg->block_count(); ++j) {
      int k = alg->blocks[j];
      if (blocks[j].w.is_empty()) continue;
      for (int i = 1; i <= q.rows(); ++i)
        for (int c = 1; c <= p.rows(); ++c)
          for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y)
              out.w.at(i, c).at(j, x, y) =
                  blocks[j].w.at((i - 1) * k + x + 1, (c - 1) * k + y + 1);
    }
  } else {
    for (int j = 0; j < alg->block_count(); ++j) {
      StarMatrix<CD> wf = blocks[j].exact ? to_float(blocks[j].w) : blocks[j].wf;
      if (!is_partial_isometry_tol(wf, float_block(p, alg, j), float_block(q, alg, j),
                                   kWitnessTol))
        throw std::logic_error("alg_witness: float certification failed");
      out.wf_blocks.push_back(std::move(wf));
    }
  }
  return out;
}

// Float conversions for the unitized tower.
inline AlgElem<CD> to_float(const AlgElem<GRat>& a) {
  AlgElem<CD> r(a.algebra());
  for (int j = 0; j < a.algebra()->block_count(); ++j)
    for (int x = 0; x < a.algebra()->blocks[j]; ++x)
      for (int y = 0; y < a.algebra()->blocks[j]; ++y) r.at(j, x, y) = to_complex(a.at(j, x, y));
  return r;
}

inline Unitized<CD> to_float(const Unitized<GRat>& u) {
  Stab<CD> hat(u.algebra());
  for (const auto& [k, v] : u.hat().entries()) hat.set(k.first, k.second, to_float(v));
  return Unitized<CD>(to_complex(u.scalar()), hat);
}

inline StarMatrix<Unitized<CD>> to_float(const StarMatrix<Unitized<GRat>>& m) {
  if (m.is_empty()) return StarMatrix<Unitized<CD>>();
  StarMatrix<Unitized<CD>> r(m.rows(), m.cols(), to_float(m.at(1, 1)));
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) r.at(i, j) = to_float(m.at(i, j));
  return r;
}

/// Norm of a matrix over the unitized stabilization (float backend): the
/// scalar part acts beyond the common support, the corner carries the rest.
inline double unitized_matrix_norm(const StarMatrix<Unitized<CD>>& m, const AlgebraPtr& alg) {
  if (m.is_empty()) return 0.0;
  double best = op_norm(scalar_matrix(m));
  long long bound = std::max(support_bound(m), 1LL);
  StarMatrix<AlgElem<CD>> corner = unitized_corner(m, alg, bound);
  for (int j = 0; j < alg->block_count(); ++j)
    best = std::max(best, op_norm(expand_block(corner, alg, j)));
  return best;
}

/// Witness over the unitized stabilization, by splitting off the corner of
/// the common support: inside the corner the problem is a block-algebra one,
/// outside it only the scalar parts act.
struct UnitizedWitness {
  bool exact = true;
  StarMatrix<Unitized<GRat>> w;        // valid when exact
  StarMatrix<Unitized<CD>> wf;         // valid when !exact, certified to kWitnessTol
};

namespace detail {

template <class S>
StarMatrix<Unitized<S>> assemble_unitized_witness(const StarMatrix<AlgElem<S>>& corner_w,
                                                  const StarMatrix<S>& scalar_w,
                                                  const AlgebraPtr& alg, long long bound,
                                                  int rows, int cols) {
  int n = static_cast<int>(bound);
  StarMatrix<Unitized<S>> u(rows, cols, Unitized<S>::zero(alg));
  AlgElem<S> unit = AlgElem<S>::unit(alg);
  for (int i = 1; i <= rows; ++i)
    for (int c = 1; c <= cols; ++c) {
      Stab<S> hat(alg);
      if (!corner_w.is_empty())
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b)
            hat.set(a, b, corner_w.at((i - 1) * n + a, (c - 1) * n + b));
      S sc{};
      if (!scalar_w.is_empty()) {
        sc = scalar_w.at(i, c);
        // subtract the scalar acting inside the corner: W0 (x) iota(e_N)
        if (!is_zero(sc))
          for (int a = 1; a <= n; ++a) hat.set(a, a, hat.get(a, a) - sc * unit);
      }
      u.at(i, c) = Unitized<S>(sc, hat);
    }
  return u;
}

}  // namespace detail

inline UnitizedWitness unitized_witness(const StarMatrix<Unitized<GRat>>& p,
                                        const StarMatrix<Unitized<GRat>>& q,
                                        const AlgebraPtr& alg) {
  UnitizedWitness out;
  if (p == q) {
    out.w = p;
    return out;
  }
  if (is_zero_matrix(p) && is_zero_matrix(q)) {
    out.w = StarMatrix<Unitized<GRat>>::zero(q.rows(), p.rows(), Unitized<GRat>::zero(alg));
    return out;
  }
  long long bound = std::max({support_bound(p), support_bound(q), 1LL});
  StarMatrix<AlgElem<GRat>> cp = unitized_corner(p, alg, bound);
  StarMatrix<AlgElem<GRat>> cq = unitized_corner(q, alg, bound);
  AlgWitness cw = alg_witness(cp, cq, alg);
  ScalarWitness sw = scalar_witness(scalar_matrix(p), scalar_matrix(q), alg->field);
  if (cw.exact && sw.exact) {
    out.w = detail::assemble_unitized_witness<GRat>(cw.w, sw.w, alg, bound, q.rows(), p.rows());
    if (!(adjoint(out.w) * out.w == p && out.w * adjoint(out.w) == q))
      throw std::logic_error("unitized_witness: assembled witness failed verification");
    return out;
  }
  // Float certification: assemble from the per-block float corner witness and
  // the float scalar witness.
  out.exact = false;
  AlgElem<CD> zf = AlgElem<CD>::zero(alg);
  int n = static_cast<int>(bound);
  StarMatrix<AlgElem<CD>> cwf =
      StarMatrix<AlgElem<CD>>::zero(q.rows() * n, p.rows() * n, zf);
  for (int j = 0; j < alg->block_count(); ++j) {
    int k = alg->blocks[j];
    StarMatrix<CD> blk = cw.exact ? to_float(expand_block(cw.w, alg, j)) : cw.wf_blocks[j];
    if (blk.is_empty()) continue;
    for (int r = 1; r <= q.rows() * n; ++r)
      for (int c = 1; c <= p.rows() * n; ++c)
        for (int x = 0; x < k; ++x)
          for (int y = 0; y < k; ++y)
            cwf.at(r, c).at(j, x, y) = blk.at((r - 1) * k + x + 1, (c - 1) * k + y + 1);
  }
  StarMatrix<CD> swf = sw.exact ? to_float(sw.w) : sw.wf;
  out.wf = detail::assemble_unitized_witness<CD>(cwf, swf, alg, bound, q.rows(), p.rows());
  StarMatrix<Unitized<CD>> pf = to_float(p), qf = to_float(q);
  if (unitized_matrix_norm(adjoint(out.wf) * out.wf - pf, alg) > kWitnessTol ||
      unitized_matrix_norm(out.wf * adjoint(out.wf) - qf, alg) > kWitnessTol)
    throw std::logic_error("unitized_witness: float certification failed");
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence decisions: decided by the invariant, certified by a witness
// (soundness) or the trace obstruction (completeness).
// ---------------------------------------------------------------------------

template <class R>
bool mvn_equivalent(const StarMatrix<R>& p, const StarMatrix<R>& q, const AlgebraPtr& alg) {
  return mvn_invariant(p, alg) == mvn_invariant(q, alg);
}

inline std::optional<AlgWitness> witness(const StarMatrix<AlgElem<GRat>>& p,
                                         const StarMatrix<AlgElem<GRat>>& q,
                                         const AlgebraPtr& alg) {
  if (!mvn_equivalent(p, q, alg)) return std::nullopt;
  return alg_witness(p, q, alg);
}

inline std::optional<UnitizedWitness> witness(const StarMatrix<Unitized<GRat>>& p,
                                              const StarMatrix<Unitized<GRat>>& q,
                                              const AlgebraPtr& alg) {
  if (!mvn_equivalent(p, q, alg)) return std::nullopt;
  return unitized_witness(p, q, alg);
}

// ---------------------------------------------------------------------------
// K-groups.
// ---------------------------------------------------------------------------

/// A K-class in canonical form: the difference of the relative rank vectors
/// of two projections over the unitized stabilization with equal scalar rank.
struct K0Element {
  AlgebraPtr alg;
  std::vector<long> rel;

  friend bool operator==(const K0Element& a, const K0Element& b) {
    return *a.alg == *b.alg && a.rel == b.rel;
  }
  friend K0Element operator+(const K0Element& a, const K0Element& b) {
    K0Element r = a;
    for (std::size_t i = 0; i < r.rel.size(); ++i) r.rel[i] += b.rel[i];
    return r;
  }
  friend K0Element operator-(const K0Element& a, const K0Element& b) {
    K0Element r = a;
    for (std::size_t i = 0; i < r.rel.size(); ++i) r.rel[i] -= b.rel[i];
    return r;
  }
  bool is_zero() const {
    for (long v : rel)
      if (v != 0) return false;
    return true;
  }
};

inline K0Element k0_class(const MvNInvariant& a, const MvNInvariant& b, AlgebraPtr alg) {
  if (a.scalar_rank != b.scalar_rank)
    throw ShapeError("k0_class: scalar ranks must agree for a reduced class");
  K0Element e;
  e.alg = std::move(alg);
  e.rel.resize(a.ranks.size());
  for (std::size_t i = 0; i < a.ranks.size(); ++i) e.rel[i] = a.ranks[i] - b.ranks[i];
  return e;
}

/// A finitely generated free abelian group presentation.
struct GroupPresentation {
  int rank = 0;
  std::vector<std::string> basis_labels;
  std::vector<K0Element> basis;  // populated for the kernel description
};

/// The Grothendieck group of the rank monoid of a unital block algebra:
/// free abelian on one minimal projection class per block.
inline GroupPresentation k00(const AlgebraPtr& alg) {
  GroupPresentation g;
  g.rank = alg->block_count();
  for (int j = 0; j < g.rank; ++j)
    g.basis_labels.push_back("[e_" + std::to_string(j + 1) + "]");
  return g;
}

/// The kernel of the scalar-quotient map on the unitized stabilization:
/// free abelian with basis the classes of the embedded minimal projections.
inline GroupPresentation k0(const AlgebraPtr& alg) {
  GroupPresentation g;
  g.rank = alg->block_count();
  for (int j = 0; j < g.rank; ++j) {
    g.basis_labels.push_back("[iota e_" + std::to_string(j + 1) + "] - [0]");
    K0Element e;
    e.alg = alg;
    e.rel.assign(alg->block_count(), 0);
    e.rel[j] = 1;
    g.basis.push_back(e);
  }
  return g;
}

// ---------------------------------------------------------------------------
// The finite groupoid fragment and its component structure.
// ---------------------------------------------------------------------------

struct GroupoidFragment {
  std::vector<StarMatrix<AlgElem<GRat>>> projections;
  std::vector<MvNInvariant> invariants;
  std::vector<int> component;  // component id per projection
  int component_count = 0;
  bool components_match_invariants = false;
};

/// All diagonal projections with leading-idempotent entries, sizes 0..max_dim.
inline std::vector<StarMatrix<AlgElem<GRat>>> enumerate_diagonal_projections(
    const AlgebraPtr& alg, int max_dim) {
  std::vector<AlgElem<GRat>> entry_choices;
  std::vector<int> radix(alg->block_count() + 1, 1);
  for (int j = 0; j < alg->block_count(); ++j) radix[j + 1] = radix[j] * (alg->blocks[j] + 1);
  for (int code = 0; code < radix[alg->block_count()]; ++code) {
    std::vector<int> rk(alg->block_count());
    int c = code;
    for (int j = 0; j < alg->block_count(); ++j) {
      rk[j] = c % (alg->blocks[j] + 1);
      c /= alg->blocks[j] + 1;
    }
    entry_choices.push_back(AlgElem<GRat>::leading_idempotent(alg, rk));
  }
  std::vector<StarMatrix<AlgElem<GRat>>> out;
  out.push_back(StarMatrix<AlgElem<GRat>>());  // the empty projection
  long long count = 1;
  for (int p = 1; p <= max_dim; ++p) {
    count *= static_cast<long long>(entry_choices.size());
    if (count > 100000) throw ShapeError("enumerate_diagonal_projections: budget exceeded");
    std::vector<int> idx(p, 0);
    while (true) {
      StarMatrix<AlgElem<GRat>> m(p, p, AlgElem<GRat>::zero(alg));
      for (int d = 0; d < p; ++d) m.at(d + 1, d + 1) = entry_choices[idx[d]];
      out.push_back(std::move(m));
      int d = p - 1;
      while (d >= 0 && idx[d] == static_cast<int>(entry_choices.size()) - 1) idx[d--] = 0;
      if (d < 0) break;
      ++idx[d];
    }
  }
  return out;
}

/// A finite sample of the groupoid with every pairwise witness check run;
/// connected components must biject with the realized invariants.
inline GroupoidFragment pr_groupoid_fragment(const AlgebraPtr& alg, int max_dim) {
  if (max_dim > 6) throw ShapeError("pr_groupoid_fragment: max_dim exceeds budget");
  GroupoidFragment frag;
  frag.projections = enumerate_diagonal_projections(alg, max_dim);
  for (const auto& p : frag.projections) frag.invariants.push_back(mvn_invariant(p, alg));

  int n = static_cast<int>(frag.projections.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(frag.invariants[i] == frag.invariants[j])) continue;
      auto w = witness(frag.projections[i], frag.projections[j], alg);
      if (w) parent[find(i)] = find(j);
    }
  std::vector<int> roots;
  frag.component.resize(n);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    int id = -1;
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (roots[k] == r) id = static_cast<int>(k);
    if (id < 0) {
      roots.push_back(r);
      id = static_cast<int>(roots.size()) - 1;
    }
    frag.component[i] = id;
  }
  frag.component_count = static_cast<int>(roots.size());

  // Components match invariants: same component iff same invariant.
  frag.components_match_invariants = true;
  for (int i = 0; i < n && frag.components_match_invariants; ++i)
    for (int j = 0; j < n; ++j)
      if ((frag.component[i] == frag.component[j]) != (frag.invariants[i] == frag.invariants[j])) {
        frag.components_match_invariants = false;
        break;
      }
  return frag;
}

// Random projections over a block algebra: unitary conjugates of leading
// idempotent diagonals.
inline StarMatrix<AlgElem<GRat>> random_alg_unitary(Rng& rng, const AlgebraPtr& alg, int n) {
  StarMatrix<AlgElem<GRat>> u(n, n, AlgElem<GRat>::zero(alg));
  bool real_only = alg->field == Field::Real;
  for (int j = 0; j < alg->block_count(); ++j) {
    int k = alg->blocks[j];
    GM block = random_unitary(rng, n * k, real_only);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        for (int x = 0; x < k; ++x)
          for (int y = 0; y < k; ++y)
            u.at(r, c).at(j, x, y) = block.at((r - 1) * k + x + 1, (c - 1) * k + y + 1);
  }
  return u;
}

inline StarMatrix<AlgElem<GRat>> random_alg_projection(Rng& rng, const AlgebraPtr& alg,
                                                       int dim) {
  StarMatrix<AlgElem<GRat>> d(dim, dim, AlgElem<GRat>::zero(alg));
  for (int i = 1; i <= dim; ++i) {
    std::vector<int> rk(alg->block_count());
    for (int j = 0; j < alg->block_count(); ++j) rk[j] = rng.range(0, alg->blocks[j]);
    d.at(i, i) = AlgElem<GRat>::leading_idempotent(alg, rk);
  }
  StarMatrix<AlgElem<GRat>> u = random_alg_unitary(rng, alg, dim);
  return u * d * adjoint(u);
}

}  // namespace opk

#endif  // OPK_MVN_HPP
