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

#ifndef OPK_MATLAWS_HPP
#define OPK_MATLAWS_HPP

#include <string>
#include <vector>

#include "opk/report.hpp"
#include "opk/starmat.hpp"

namespace opk {

inline StarMatrix<GRat> random_matrix(Rng& rng, int rows, int cols, bool real_only = false) {
  StarMatrix<GRat> m = StarMatrix<GRat>::zero(rows, cols, GRat());
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) m.at(i, j) = random_grat(rng, real_only);
  return m;
}

template <class S>
inline StarMatrix<AlgElem<S>> random_alg_matrix(Rng& rng, const AlgebraPtr& alg, int rows,
                                                int cols) {
  StarMatrix<AlgElem<S>> m =
      StarMatrix<AlgElem<S>>::zero(rows, cols, AlgElem<S>::zero(alg));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) m.at(i, j) = random_alg_elem<S>(rng, alg);
  return m;
}

namespace detail {

// delta-conjugation sending U11 x (U21 + U22) to (U11 x U21) + (U11 x U22):
// rows and columns each get their own delta bijection.
template <class R>
StarMatrix<R> left_dist_conjugate(const StarMatrix<R>& lhs, int r11, int r21, int r22,
                                  int c11, int c21, int c22, const R& one) {
  FinMap drow = delta_bijection(2, {1, 2}, {{r11}, {r21, r22}});
  FinMap dcol = delta_bijection(2, {1, 2}, {{c11}, {c21, c22}});
  return perm_matrix(drow, one) * lhs * adjoint(perm_matrix(dcol, one));
}

}  // namespace detail

/// Randomized checks of the direct-sum laws: bilinearity, monoid structure
/// with the empty matrix as unit, compatibility with composition and
/// adjoints, and commutativity up to the block-swap similarity.
template <class R, class Gen>
SuiteReport direct_sum_suite(Rng rng, int trials, int max_dim, Gen gen, const R& one) {
  SuiteReport rep;
  rep.suite = "direct_sum";
  LawResult bilin{"dsum.linear", "direct sum commutes with entrywise addition and scaling",
                  trials, {}};
  LawResult monoid{"dsum.monoid", "direct sum is associative with the empty matrix as unit",
                   trials, {}};
  LawResult compat{"dsum.compat", "direct sum commutes with composition and adjoints", trials, {}};
  LawResult braid{"dsum.braid", "block swap conjugates A+B to B+A", trials, {}};
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.fork(t);
    int p0 = r.range(1, max_dim), p1 = r.range(1, max_dim);
    int q0 = r.range(1, max_dim), q1 = r.range(1, max_dim);
    StarMatrix<R> a = gen(r, p0, p1), a2 = gen(r, p0, p1), b = gen(r, q0, q1);
    StarMatrix<R> b2 = gen(r, q0, q1);

    if (!(direct_sum<R>({a + a2, b + b2}) == direct_sum<R>({a, b}) + direct_sum<R>({a2, b2})))
      bilin.failures.push_back({"dsum.linear", "additivity, trial " + std::to_string(t)});
    {
      R s = a.sample();
      if (!(s * direct_sum<R>({a, b}) == direct_sum<R>({s * a, s * b})))
        bilin.failures.push_back({"dsum.linear", "scaling, trial " + std::to_string(t)});
    }

    StarMatrix<R> c = gen(r, r.range(1, max_dim), r.range(1, max_dim));
    if (!(direct_sum<R>({direct_sum<R>({a, b}), c}) ==
          direct_sum<R>({a, direct_sum<R>({b, c})})))
      monoid.failures.push_back({"dsum.monoid", "associativity, trial " + std::to_string(t)});
    if (!(direct_sum<R>({a, StarMatrix<R>()}) == a &&
          direct_sum<R>({StarMatrix<R>(), a}) == a && direct_sum<R>({}) == StarMatrix<R>()))
      monoid.failures.push_back({"dsum.monoid", "unit, trial " + std::to_string(t)});

    StarMatrix<R> u21 = gen(r, p1, r.range(1, max_dim));
    StarMatrix<R> u22 = gen(r, q1, r.range(1, max_dim));
    if (!(direct_sum<R>({a, b}) * direct_sum<R>({u21, u22}) ==
          direct_sum<R>({a * u21, b * u22})))
      compat.failures.push_back({"dsum.compat", "composition, trial " + std::to_string(t)});
    if (!(adjoint(direct_sum<R>({a, b})) == direct_sum<R>({adjoint(a), adjoint(b)})))
      compat.failures.push_back({"dsum.compat", "adjoint, trial " + std::to_string(t)});

    FinMap swap = FinMap::transposition(2, 1, 2);
    StarMatrix<R> rowswap = perm_matrix(reindex_sum_map(swap, {p0, q0}), one);
    StarMatrix<R> colswap = perm_matrix(reindex_sum_map(swap, {p1, q1}), one);
    if (!(rowswap * direct_sum<R>({a, b}) * adjoint(colswap) == direct_sum<R>({b, a})))
      braid.failures.push_back({"dsum.braid", "trial " + std::to_string(t)});
  }
  rep.laws = {bilin, monoid, compat, braid};
  return rep;
}

/// Randomized checks of the Kronecker laws.  The adjoint/composition/braid
/// laws are asserted only when `commutative` is set; they genuinely fail over
/// noncommutative entry rings.
template <class R, class Gen>
SuiteReport kron_suite(Rng rng, int trials, int max_dim, Gen gen, const R& one,
                       bool commutative) {
  SuiteReport rep;
  rep.suite = "kron";
  LawResult monoid{"kron.monoid", "Kronecker product is associative with unit of size one",
                   trials, {}};
  LawResult absorb{"kron.absorb", "the empty matrix absorbs the Kronecker product", trials, {}};
  LawResult bilin{"kron.bilinear", "Kronecker product is additive in each slot", trials, {}};
  LawResult rdist{"kron.right_dist", "strict right distributivity over direct sums", trials, {}};
  LawResult ldist{"kron.left_dist", "left distributivity up to the delta similarity", trials, {}};
  LawResult cstar{"kron.star", "adjoint compatibility over commutative entries", trials, {}};
  LawResult ccomp{"kron.compose", "composition compatibility over commutative entries", trials, {}};
  LawResult cbraid{"kron.braid", "factor swap similarity over commutative entries", trials, {}};
  auto kr2 = [&](const StarMatrix<R>& x, const StarMatrix<R>& y) {
    return kron<R>({x, y}, one);
  };
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.fork(t);
    int p0 = r.range(1, max_dim), p1 = r.range(1, max_dim);
    int q0 = r.range(1, max_dim), q1 = r.range(1, max_dim);
    StarMatrix<R> a = gen(r, p0, p1), a2 = gen(r, p0, p1), b = gen(r, q0, q1);

    StarMatrix<R> unit = kron<R>({}, one);
    if (!(kr2(kr2(a, b), unit) == kron<R>({a, b, unit}, one) && kr2(a, unit) == a &&
          kr2(unit, a) == a))
      monoid.failures.push_back({"kron.monoid", "unit, trial " + std::to_string(t)});
    StarMatrix<R> c = gen(r, r.range(1, 2), r.range(1, 2));
    if (!(kr2(kr2(a, b), c) == kr2(a, kr2(b, c))))
      monoid.failures.push_back({"kron.monoid", "associativity, trial " + std::to_string(t)});

    if (!(kr2(a, StarMatrix<R>()) == StarMatrix<R>() &&
          kr2(StarMatrix<R>(), a) == StarMatrix<R>()))
      absorb.failures.push_back({"kron.absorb", "trial " + std::to_string(t)});

    if (!(kr2(a + a2, b) == kr2(a, b) + kr2(a2, b) &&
          kr2(b, a + a2) == kr2(b, a) + kr2(b, a2)))
      bilin.failures.push_back({"kron.bilinear", "trial " + std::to_string(t)});

    StarMatrix<R> u11 = a, u12 = a2, u21 = b;
    if (!(kr2(direct_sum<R>({u11, u12}), u21) ==
          direct_sum<R>({kr2(u11, u21), kr2(u12, u21)})))
      rdist.failures.push_back({"kron.right_dist", "trial " + std::to_string(t)});

    {
      StarMatrix<R> u22 = gen(r, r.range(1, max_dim), r.range(1, max_dim));
      StarMatrix<R> lhs = kr2(u11, direct_sum<R>({u21, u22}));
      StarMatrix<R> conj = detail::left_dist_conjugate(
          lhs, u11.rows(), u21.rows(), u22.rows(), u11.cols(), u21.cols(), u22.cols(), one);
      if (!(conj == direct_sum<R>({kr2(u11, u21), kr2(u11, u22)})))
        ldist.failures.push_back({"kron.left_dist", "trial " + std::to_string(t)});
    }

    if (commutative) {
      if (!(adjoint(kr2(a, b)) == kr2(adjoint(a), adjoint(b))))
        cstar.failures.push_back({"kron.star", "trial " + std::to_string(t)});
      StarMatrix<R> v1 = gen(r, p1, r.range(1, max_dim));
      StarMatrix<R> v2 = gen(r, q1, r.range(1, max_dim));
      if (!(kr2(a, b) * kr2(v1, v2) == kr2(a * v1, b * v2)))
        ccomp.failures.push_back({"kron.compose", "trial " + std::to_string(t)});
      FinMap swap = FinMap::transposition(2, 1, 2);
      StarMatrix<R> rowswap = perm_matrix(reindex_prod_map(swap, {p0, q0}), one);
      StarMatrix<R> colswap = perm_matrix(reindex_prod_map(swap, {p1, q1}), one);
      if (!(rowswap * kr2(a, b) * adjoint(colswap) == kr2(b, a)))
        cbraid.failures.push_back({"kron.braid", "trial " + std::to_string(t)});
    }
  }
  rep.laws = {monoid, absorb, bilin, rdist, ldist};
  if (commutative) {
    rep.laws.push_back(cstar);
    rep.laws.push_back(ccomp);
    rep.laws.push_back(cbraid);
  }
  return rep;
}

struct KronCounterexample {
  StarMatrix<AlgElem<GRat>> u1, u2, v1, v2;
  bool violates_composition = false;
  bool violates_adjoint = false;
};

/// A stored witness that Kronecker/composition compatibility fails over a
/// noncommutative entry ring: 1 x 1 matrices whose entries are the matrix
/// units e12 and e21 of a 2 x 2 block.
inline KronCounterexample kron_noncommutative_counterexample() {
  AlgebraPtr m2 = make_algebra(Field::Complex, {2});
  AlgElem<GRat> e12 = AlgElem<GRat>::zero(m2);
  e12.at(0, 0, 1) = GRat(1);
  AlgElem<GRat> e21 = AlgElem<GRat>::zero(m2);
  e21.at(0, 1, 0) = GRat(1);
  AlgElem<GRat> unit = AlgElem<GRat>::unit(m2);

  using M = StarMatrix<AlgElem<GRat>>;
  KronCounterexample cx;
  cx.u1 = M(1, 1, unit);
  cx.u2 = M(1, 1, e21);
  cx.v1 = M(1, 1, e12);
  cx.v2 = M(1, 1, unit);
  M lhs = kron<AlgElem<GRat>>({cx.u1, cx.u2}) * kron<AlgElem<GRat>>({cx.v1, cx.v2});
  M rhs = kron<AlgElem<GRat>>({cx.u1 * cx.v1, cx.u2 * cx.v2});
  cx.violates_composition = !(lhs == rhs);
  M w = kron<AlgElem<GRat>>({M(1, 1, e12), M(1, 1, e21)});
  cx.violates_adjoint = !(adjoint(w) == kron<AlgElem<GRat>>({M(1, 1, star(e12)), M(1, 1, star(e21))}));
  return cx;
}

}  // namespace opk

#endif  // OPK_MATLAWS_HPP
