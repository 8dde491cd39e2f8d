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

#ifndef OPK_OPERADS_HPP
#define OPK_OPERADS_HPP

#include <string>
#include <vector>

#include "opk/finord.hpp"
#include "opk/injections.hpp"
#include "opk/report.hpp"
#include "opk/rng.hpp"

namespace opk {

// Operad models share a small static interface so the axiom suite can run
// against any of them: Elem, arity, random, compose, identity, right_action,
// equality.

/// The operad of tuples of eventually-arithmetic injections with pairwise
/// disjoint images (a genuine sub-operad of the linear isometries operad,
/// restricted to basis-permuting isometries).
struct InjectionsOperad {
  using Elem = InjTuple;
  static int arity(const Elem& f) { return f.arity(); }
  static Elem random(Rng& rng, int m) { return random_inj_tuple(rng, m); }
  static Elem compose(const Elem& f, const std::vector<Elem>& gs) {
    return inj_compose(f, gs);
  }
  static Elem identity() { return InjTuple::identity(); }
  static Elem right_action(const Elem& f, const FinMap& sigma) {
    return inj_right_action(f, sigma);
  }
  static bool equal(const Elem& a, const Elem& b) { return a == b; }
};

/// The terminal operad: one element per arity.
struct TerminalOperad {
  using Elem = int;  // the arity itself
  static int arity(const Elem& f) { return f; }
  static Elem random(Rng&, int m) { return m; }
  static Elem compose(const Elem& f, const std::vector<Elem>& gs) {
    if (static_cast<int>(gs.size()) != f)
      throw ShapeError("terminal compose: arity mismatch");
    int s = 0;
    for (int g : gs) s += g;
    return s;
  }
  static Elem identity() { return 1; }
  static Elem right_action(const Elem& f, const FinMap& sigma) {
    if (sigma.cod() != f) throw ShapeError("terminal right action: arity mismatch");
    if (!sigma.is_injective()) throw ShapeError("terminal right action: not injective");
    return sigma.dom();
  }
  static bool equal(const Elem& a, const Elem& b) { return a == b; }
};

/// Test fixture: injections with a composition that deliberately swaps the
/// first two output components whenever possible.  Associativity must fail.
struct CorruptedInjectionsOperad : InjectionsOperad {
  static Elem compose(const Elem& f, const std::vector<Elem>& gs) {
    InjTuple h = inj_compose(f, gs);
    if (h.arity() >= 2)
      return inj_right_action(h, FinMap::transposition(h.arity(), 1, 2));
    return h;
  }
};

/// Randomized both-sides evaluation of the operad axioms: associativity, the
/// two unit laws and the two equivariance laws.
template <class Op>
std::vector<LawFailure> operad_axiom_suite(Rng rng, int trials, int max_arity) {
  std::vector<LawFailure> failures;
  auto fail = [&](const std::string& law, int t) {
    failures.push_back({law, "trial " + std::to_string(t)});
  };
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.fork(t);
    int m = r.range(0, max_arity);
    typename Op::Elem f = Op::random(r, m);

    std::vector<typename Op::Elem> gs;
    std::vector<int> ns(m);
    for (int i = 0; i < m; ++i) {
      ns[i] = r.range(0, max_arity);
      gs.push_back(Op::random(r, ns[i]));
    }

    // Associativity.
    {
      std::vector<std::vector<typename Op::Elem>> hs(m);
      std::vector<typename Op::Elem> flat;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < ns[i]; ++j) {
          hs[i].push_back(Op::random(r, r.range(0, 2)));
          flat.push_back(hs[i].back());
        }
      std::vector<typename Op::Elem> inner;
      for (int i = 0; i < m; ++i) inner.push_back(Op::compose(gs[i], hs[i]));
      auto lhs = Op::compose(f, inner);
      auto rhs = Op::compose(Op::compose(f, gs), flat);
      if (!Op::equal(lhs, rhs)) fail("associativity", t);
    }

    // Units.
    {
      auto lhs = Op::compose(Op::identity(), {f});
      if (!Op::equal(lhs, f)) fail("left unit", t);
      std::vector<typename Op::Elem> ids(m, Op::identity());
      auto rhs = Op::compose(f, ids);
      if (!Op::equal(rhs, f)) fail("right unit", t);
    }

    // Equivariance in the outer slot: (f.sigma)<g^i> = (f<g^{sigma^-1 i}>).sigma(n^i).
    {
      FinMap sigma = random_bijection(r, m);
      FinMap sinv = sigma.inverse();
      auto lhs = Op::compose(Op::right_action(f, sigma), gs);
      std::vector<typename Op::Elem> permuted;
      std::vector<int> nperm(m);
      for (int i = 0; i < m; ++i) {
        permuted.push_back(gs[sinv(i + 1) - 1]);
        nperm[i] = ns[sinv(i + 1) - 1];
      }
      // parts over the domain of sigma are the arities n^i
      auto rhs = Op::right_action(Op::compose(f, permuted), reindex_sum_map(sigma, ns));
      if (!Op::equal(lhs, rhs)) fail("outer equivariance", t);
    }

    // Equivariance in the inner slots: f<g^i . sigma^i> = (f<g^i>).Sum sigma^i.
    {
      std::vector<FinMap> sigmas;
      std::vector<typename Op::Elem> acted;
      for (int i = 0; i < m; ++i) {
        sigmas.push_back(random_bijection(r, ns[i]));
        acted.push_back(Op::right_action(gs[i], sigmas[i]));
      }
      auto lhs = Op::compose(f, acted);
      auto rhs = Op::right_action(Op::compose(f, gs), sum_of_maps(sigmas));
      if (!Op::equal(lhs, rhs)) fail("inner equivariance", t);
    }
  }
  return failures;
}

/// The action of a multiplicative operad on the terminal operad sends
/// f |x| <a^i> to Prod_m a^i.  The eight operad-pair conditions reduce to
/// arithmetic of dependent shapes plus validity of the delta bijection.
template <class Op>
std::vector<LawFailure> pair_action_suite(Rng rng, int trials, int max_arity = 3) {
  std::vector<LawFailure> failures;
  auto fail = [&](const std::string& law, int t) {
    failures.push_back({law, "trial " + std::to_string(t)});
  };
  auto ltimes = [](int /*unused f*/, const std::vector<int>& as) {
    long long p = 1;
    for (int a : as) p *= a;
    return static_cast<int>(p);
  };
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.fork(t);
    int m = r.range(0, max_arity);
    typename Op::Elem f = Op::random(r, m);
    std::vector<int> as(m);
    for (int& a : as) a = r.range(0, 3);

    // (1) f |x| <g^i |x| a^{ij}> = (f<g^i>) |x| <a^{ij}>.
    {
      std::vector<typename Op::Elem> gs;
      std::vector<std::vector<int>> aij(m);
      std::vector<int> flat;
      std::vector<int> inner(m);
      for (int i = 0; i < m; ++i) {
        int n = r.range(0, 2);
        gs.push_back(Op::random(r, n));
        aij[i].resize(n);
        for (int& a : aij[i]) a = r.range(0, 3);
        for (int a : aij[i]) flat.push_back(a);
        inner[i] = ltimes(0, aij[i]);
      }
      int lhs = ltimes(0, inner);
      int rhs = ltimes(0, flat);
      (void)Op::compose(f, gs);
      if (lhs != rhs) fail("pair: mixed associativity", t);
    }

    // (2) f |x| <alpha^i <beta^ix>> = ((f |x| alpha)<f |x| beta^{.x^i}>) . delta.
    {
      std::vector<std::vector<int>> bs(m);
      for (int i = 0; i < m; ++i) {
        bs[i].resize(as[i]);
        for (int& b : bs[i]) b = r.range(0, 2);
      }
      std::vector<int> composed(m);
      for (int i = 0; i < m; ++i) composed[i] = std::accumulate(bs[i].begin(), bs[i].end(), 0);
      int lhs = ltimes(0, composed);  // arity of f |x| <alpha<beta>>
      DepProd outer(m, as);
      long long rhs = 0;
      for (int X = 1; X <= outer.total(); ++X) {
        std::vector<int> xs = outer.unrank(X);
        long long p = 1;
        for (int i = 0; i < m; ++i) p *= bs[i][xs[i] - 1];
        rhs += p;
      }
      FinMap delta = delta_bijection(m, as, bs);
      bool ok = lhs == static_cast<int>(rhs) && delta.is_bijective() &&
                delta.dom() == lhs && delta.cod() == static_cast<int>(rhs);
      if (!ok) fail("pair: distributivity", t);
    }

    // (3) id |x| alpha = alpha and (4) f |x| <id> = id.
    {
      int a = r.range(0, 4);
      if (ltimes(0, {a}) != a) fail("pair: unit action", t);
      std::vector<int> ids(m, 1);
      if (ltimes(0, ids) != 1) fail("pair: action on units", t);
    }

    // (5) (f.sigma) |x| <alpha^i> = (f |x| <alpha^{sigma^-1 i}>) . sigma<a^i>.
    {
      FinMap sigma = random_bijection(r, m);
      FinMap sinv = sigma.inverse();
      (void)Op::right_action(f, sigma);
      std::vector<int> as_p(m);
      for (int i = 0; i < m; ++i) as_p[i] = as[sinv(i + 1) - 1];
      int lhs = ltimes(0, as);
      int rhs = ltimes(0, as_p);
      FinMap re = reindex_prod_map(sigma, as);
      bool ok = lhs == rhs && re.is_bijective() && re.dom() == lhs && re.cod() == rhs;
      if (!ok) fail("pair: outer equivariance", t);
    }

    // (6) f |x| <alpha^i . sigma^i> = (f |x| <alpha^i>) . Prod sigma^i.
    {
      std::vector<FinMap> sigmas;
      for (int i = 0; i < m; ++i) sigmas.push_back(random_bijection(r, as[i]));
      FinMap pm = prod_of_maps(sigmas);
      if (!(pm.is_bijective() && pm.dom() == ltimes(0, as))) fail("pair: inner equivariance", t);
    }

    // (7) 1 |x| * = id.
    if (ltimes(0, {}) != 1) fail("pair: nullary unit", t);

    // (8) any alpha^i = 0 forces the product to 0.
    if (m > 0) {
      std::vector<int> with_zero = as;
      with_zero[r.below(m)] = 0;
      if (ltimes(0, with_zero) != 0) fail("pair: absorbing zero", t);
    }
  }
  return failures;
}

}  // namespace opk

#endif  // OPK_OPERADS_HPP
