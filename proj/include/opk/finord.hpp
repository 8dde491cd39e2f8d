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

#ifndef OPK_FINORD_HPP
#define OPK_FINORD_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opk/rng.hpp"

namespace opk {

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Ordered finite sets are identified with their cardinality p, standing for
// <1 < 2 < ... < p>.  Elements are 1-based ranks throughout.  p = 0 is the
// empty set.

/// A total function between ordered finite sets, stored as its value table.
class FinMap {
 public:
  FinMap() : dom_(0), cod_(0) {}

  FinMap(int dom, int cod, std::vector<int> table)
      : dom_(dom), cod_(cod), tab_(std::move(table)) {
    if (dom_ < 0 || cod_ < 0 || static_cast<int>(tab_.size()) != dom_)
      throw ShapeError("FinMap: table length must equal domain size");
    for (int v : tab_)
      if (v < 1 || v > cod_) throw ShapeError("FinMap: value out of codomain");
  }

  static FinMap identity(int n) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 1);
    return FinMap(n, n, std::move(t));
  }

  // The transposition (i j) on <1..n>.
  static FinMap transposition(int n, int i, int j) {
    FinMap f = identity(n);
    std::swap(f.tab_[i - 1], f.tab_[j - 1]);
    return f;
  }

  int dom() const { return dom_; }
  int cod() const { return cod_; }

  int operator()(int x) const { return tab_[x - 1]; }
  const std::vector<int>& table() const { return tab_; }

  bool is_injective() const {
    std::vector<char> seen(cod_ + 1, 0);
    for (int v : tab_) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  bool is_bijective() const { return dom_ == cod_ && is_injective(); }

  bool is_monotone() const {
    for (int i = 1; i < dom_; ++i)
      if (tab_[i - 1] > tab_[i]) return false;
    return true;
  }

  bool in_image(int y) const {
    return std::find(tab_.begin(), tab_.end(), y) != tab_.end();
  }

  // Ascending list of preimages of y.
  std::vector<int> preimage(int y) const {
    std::vector<int> pre;
    for (int x = 1; x <= dom_; ++x)
      if (tab_[x - 1] == y) pre.push_back(x);
    return pre;
  }

  FinMap inverse() const {
    if (!is_bijective()) throw ShapeError("FinMap::inverse: not a bijection");
    std::vector<int> t(dom_);
    for (int x = 1; x <= dom_; ++x) t[tab_[x - 1] - 1] = x;
    return FinMap(cod_, dom_, std::move(t));
  }

  friend bool operator==(const FinMap& a, const FinMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.tab_ == b.tab_;
  }

 private:
  int dom_, cod_;
  std::vector<int> tab_;
};

// g after f.
inline FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod() != g.dom()) throw ShapeError("compose: codomain/domain mismatch");
  std::vector<int> t(f.dom());
  for (int x = 1; x <= f.dom(); ++x) t[x - 1] = g(f(x));
  return FinMap(f.dom(), g.cod(), std::move(t));
}

inline FinMap operator*(const FinMap& g, const FinMap& f) { return compose(g, f); }

inline FinMap random_bijection(Rng& rng, int n) {
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(t[i], t[rng.below(i + 1)]);
  return FinMap(n, n, std::move(t));
}

inline FinMap random_injection(Rng& rng, int m0, int m1) {
  if (m0 > m1) throw ShapeError("random_injection: no injection exists");
  std::vector<int> pool(m1);
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = m1 - 1; i > 0; --i) std::swap(pool[i], pool[rng.below(i + 1)]);
  pool.resize(m0);
  return FinMap(m0, m1, std::move(pool));
}

inline FinMap random_finmap(Rng& rng, int m0, int m1) {
  if (m1 == 0 && m0 > 0) throw ShapeError("random_finmap: empty codomain");
  std::vector<int> t(m0);
  for (int& v : t) v = rng.range(1, m1);
  return FinMap(m0, m1, std::move(t));
}

// ---------------------------------------------------------------------------
// Dependent sums and products with the lexicographic order.
// ---------------------------------------------------------------------------

/// Sum_{a} p^x: pairs (x, mu) ordered lexicographically, ranked 1..total.
class DepSum {
 public:
  DepSum(int a, std::vector<int> parts) : a_(a), parts_(std::move(parts)) {
    if (static_cast<int>(parts_.size()) != a_)
      throw ShapeError("DepSum: parts length must equal index size");
    off_.resize(a_ + 1, 0);
    for (int x = 0; x < a_; ++x) {
      if (parts_[x] < 0) throw ShapeError("DepSum: negative part");
      off_[x + 1] = off_[x] + parts_[x];
    }
  }

  int index_size() const { return a_; }
  const std::vector<int>& parts() const { return parts_; }
  int total() const { return off_[a_]; }

  int rank(int x, int mu) const {
    if (x < 1 || x > a_ || mu < 1 || mu > parts_[x - 1])
      throw ShapeError("DepSum::rank: element out of range");
    return off_[x - 1] + mu;
  }

  std::pair<int, int> unrank(int r) const {
    if (r < 1 || r > total()) throw ShapeError("DepSum::unrank: out of range");
    int x = static_cast<int>(std::upper_bound(off_.begin(), off_.end(), r - 1) - off_.begin());
    return {x, r - off_[x - 1]};
  }

 private:
  int a_;
  std::vector<int> parts_;
  std::vector<int> off_;
};

/// Prod_{m} p^i: tuples <mu^i>, lexicographic with the last coordinate
/// fastest (the Kronecker entry convention).
class DepProd {
 public:
  DepProd(int m, std::vector<int> parts) : m_(m), parts_(std::move(parts)) {
    if (static_cast<int>(parts_.size()) != m_)
      throw ShapeError("DepProd: parts length must equal index size");
    strides_.assign(m_, 1);
    long long tot = 1;
    for (int i = m_ - 1; i >= 0; --i) {
      if (parts_[i] < 0) throw ShapeError("DepProd: negative part");
      strides_[i] = tot;
      tot *= parts_[i];
      if (tot > kMaxTotal) throw ShapeError("DepProd: total too large");
    }
    total_ = static_cast<int>(tot);
  }

  int index_size() const { return m_; }
  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }

  int rank(const std::vector<int>& mu) const {
    if (static_cast<int>(mu.size()) != m_) throw ShapeError("DepProd::rank: arity mismatch");
    long long r = 0;
    for (int i = 0; i < m_; ++i) {
      if (mu[i] < 1 || mu[i] > parts_[i]) throw ShapeError("DepProd::rank: out of range");
      r += static_cast<long long>(mu[i] - 1) * strides_[i];
    }
    return static_cast<int>(r) + 1;
  }

  std::vector<int> unrank(int r) const {
    if (r < 1 || r > total_) throw ShapeError("DepProd::unrank: out of range");
    std::vector<int> mu(m_);
    long long rem = r - 1;
    for (int i = 0; i < m_; ++i) {
      mu[i] = static_cast<int>(rem / strides_[i]) + 1;
      rem %= strides_[i];
    }
    return mu;
  }

  static constexpr long long kMaxTotal = 1 << 24;

 private:
  int m_;
  std::vector<int> parts_;
  std::vector<long long> strides_;
  int total_;
};

// ---------------------------------------------------------------------------
// Reindexing morphisms.
// ---------------------------------------------------------------------------

// Parts transported along sigma: part at x1 is p^{sigma^-1 x1}, and 0 when x1
// has no preimage.  All preimages must carry equal parts.
inline std::vector<int> transported_sum_parts(const FinMap& sigma,
                                              const std::vector<int>& parts0) {
  if (static_cast<int>(parts0.size()) != sigma.dom())
    throw ShapeError("transported_sum_parts: parts length mismatch");
  std::vector<int> parts1(sigma.cod(), 0);
  std::vector<char> set(sigma.cod(), 0);
  for (int x = 1; x <= sigma.dom(); ++x) {
    int y = sigma(x);
    if (set[y - 1] && parts1[y - 1] != parts0[x - 1])
      throw ShapeError("transported_sum_parts: colliding preimages with unequal parts");
    parts1[y - 1] = parts0[x - 1];
    set[y - 1] = 1;
  }
  return parts1;
}

// Same, with the empty product convention: missing targets get part 1.
inline std::vector<int> transported_prod_parts(const FinMap& sigma,
                                               const std::vector<int>& parts0) {
  if (static_cast<int>(parts0.size()) != sigma.dom())
    throw ShapeError("transported_prod_parts: parts length mismatch");
  std::vector<int> parts1(sigma.cod(), 1);
  std::vector<char> set(sigma.cod(), 0);
  for (int i = 1; i <= sigma.dom(); ++i) {
    int y = sigma(i);
    if (set[y - 1] && parts1[y - 1] != parts0[i - 1])
      throw ShapeError("transported_prod_parts: colliding preimages with unequal parts");
    parts1[y - 1] = parts0[i - 1];
    set[y - 1] = 1;
  }
  return parts1;
}

/// sigma(p^x): Sum_{a0} p^x -> Sum_{a1} p^{sigma^-1 x}, (x, mu) |-> (sigma x, mu).
inline FinMap reindex_sum_map(const FinMap& sigma, const std::vector<int>& parts0) {
  DepSum dom(sigma.dom(), parts0);
  DepSum cod(sigma.cod(), transported_sum_parts(sigma, parts0));
  std::vector<int> t(dom.total());
  for (int r = 1; r <= dom.total(); ++r) {
    auto [x, mu] = dom.unrank(r);
    t[r - 1] = cod.rank(sigma(x), mu);
  }
  return FinMap(dom.total(), cod.total(), std::move(t));
}

/// sigma<p^i>: Prod_{m0} p^i -> Prod_{m1} p^{sigma^-1 i}, <mu^i> |-> <mu^{sigma^-1 i}>.
inline FinMap reindex_prod_map(const FinMap& sigma, const std::vector<int>& parts0) {
  DepProd dom(sigma.dom(), parts0);
  DepProd cod(sigma.cod(), transported_prod_parts(sigma, parts0));
  std::vector<int> t(dom.total());
  for (int r = 1; r <= dom.total(); ++r) {
    std::vector<int> mu = dom.unrank(r);
    std::vector<int> nu(sigma.cod(), 1);
    for (int i = 1; i <= sigma.dom(); ++i) nu[sigma(i) - 1] = mu[i - 1];
    t[r - 1] = cod.rank(nu);
  }
  return FinMap(dom.total(), cod.total(), std::move(t));
}

/// Sum_{a} sigma^x: acts as sigma^{x} on the x-th summand.
inline FinMap sum_of_maps(const std::vector<FinMap>& sigmas) {
  int a = static_cast<int>(sigmas.size());
  std::vector<int> parts0(a), parts1(a);
  for (int x = 0; x < a; ++x) {
    parts0[x] = sigmas[x].dom();
    parts1[x] = sigmas[x].cod();
  }
  DepSum dom(a, parts0), cod(a, parts1);
  std::vector<int> t(dom.total());
  for (int r = 1; r <= dom.total(); ++r) {
    auto [x, mu] = dom.unrank(r);
    t[r - 1] = cod.rank(x, sigmas[x - 1](mu));
  }
  return FinMap(dom.total(), cod.total(), std::move(t));
}

/// Prod_{m} sigma^i: acts coordinatewise.
inline FinMap prod_of_maps(const std::vector<FinMap>& sigmas) {
  int m = static_cast<int>(sigmas.size());
  std::vector<int> parts0(m), parts1(m);
  for (int i = 0; i < m; ++i) {
    parts0[i] = sigmas[i].dom();
    parts1[i] = sigmas[i].cod();
  }
  DepProd dom(m, parts0), cod(m, parts1);
  std::vector<int> t(dom.total());
  for (int r = 1; r <= dom.total(); ++r) {
    std::vector<int> mu = dom.unrank(r);
    std::vector<int> nu(m);
    for (int i = 0; i < m; ++i) nu[i] = sigmas[i](mu[i]);
    t[r - 1] = cod.rank(nu);
  }
  return FinMap(dom.total(), cod.total(), std::move(t));
}

/// The canonical bijection Prod_m Sum_{a^i} p^{ix} -> Sum_{Prod_m a^i} Prod_m p^{i x^i},
/// <(x^i, mu^i)> |-> (<x^i>, <mu^i>).  Not monotone in general.
///
/// ps[i][x] is the part at (i+1, x+1); ps[i] has length as[i].
inline FinMap delta_bijection(int m, const std::vector<int>& as,
                              const std::vector<std::vector<int>>& ps) {
  if (static_cast<int>(as.size()) != m || static_cast<int>(ps.size()) != m)
    throw ShapeError("delta_bijection: shape mismatch");
  std::vector<DepSum> inner;
  inner.reserve(m);
  std::vector<int> factor_sizes(m);
  for (int i = 0; i < m; ++i) {
    inner.emplace_back(as[i], ps[i]);
    factor_sizes[i] = inner[i].total();
  }
  DepProd dom(m, factor_sizes);

  DepProd outer(m, as);
  std::vector<int> cod_parts(outer.total());
  for (int X = 1; X <= outer.total(); ++X) {
    std::vector<int> xs = outer.unrank(X);
    long long prod = 1;
    for (int i = 0; i < m; ++i) prod *= ps[i][xs[i] - 1];
    if (prod > DepProd::kMaxTotal) throw ShapeError("delta_bijection: total too large");
    cod_parts[X - 1] = static_cast<int>(prod);
  }
  DepSum cod(outer.total(), cod_parts);

  std::vector<int> t(dom.total());
  for (int r = 1; r <= dom.total(); ++r) {
    std::vector<int> cs = dom.unrank(r);
    std::vector<int> xs(m), mus(m);
    for (int i = 0; i < m; ++i) {
      auto [x, mu] = inner[i].unrank(cs[i]);
      xs[i] = x;
      mus[i] = mu;
    }
    int X = outer.rank(xs);
    std::vector<int> inner_parts(m);
    for (int i = 0; i < m; ++i) inner_parts[i] = ps[i][xs[i] - 1];
    int inner_rank = DepProd(m, inner_parts).rank(mus);
    t[r - 1] = cod.rank(X, inner_rank);
  }
  return FinMap(dom.total(), cod.total(), std::move(t));
}

// ---------------------------------------------------------------------------
// Based sets <0 < 1 < ... < m> with basepoint 0.
// ---------------------------------------------------------------------------

/// A basepoint-preserving map of based sets.  size() counts the non-base
/// elements; values range over 0..cod_size.
class BasedMap {
 public:
  BasedMap() : dom_(0), cod_(0), tab_{} {}

  BasedMap(int dom, int cod, std::vector<int> table)
      : dom_(dom), cod_(cod), tab_(std::move(table)) {
    if (dom_ < 0 || cod_ < 0 || static_cast<int>(tab_.size()) != dom_)
      throw ShapeError("BasedMap: table length must equal domain size");
    for (int v : tab_)
      if (v < 0 || v > cod_) throw ShapeError("BasedMap: value out of codomain");
  }

  static BasedMap identity(int m) {
    std::vector<int> t(m);
    std::iota(t.begin(), t.end(), 1);
    return BasedMap(m, m, std::move(t));
  }

  // phi_{m*}: every non-base element to 1.
  static BasedMap phi(int m) { return BasedMap(m, 1, std::vector<int>(m, 1)); }

  // delta_{m*,i}: i to 1, everything else to the basepoint.
  static BasedMap delta(int m, int i) {
    std::vector<int> t(m, 0);
    t[i - 1] = 1;
    return BasedMap(m, 1, std::move(t));
  }

  static BasedMap from_unbased(const FinMap& f) {
    return BasedMap(f.dom(), f.cod(), f.table());
  }

  int dom() const { return dom_; }
  int cod() const { return cod_; }

  int operator()(int x) const { return x == 0 ? 0 : tab_[x - 1]; }

  // Fibers over non-base elements have at most one element.
  bool in_Pi() const {
    std::vector<char> seen(cod_ + 1, 0);
    for (int v : tab_) {
      if (v == 0) continue;
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  // Fibers over non-base elements have exactly one element.
  bool in_Upsilon() const {
    if (!in_Pi()) return false;
    std::vector<char> seen(cod_ + 1, 0);
    for (int v : tab_)
      if (v > 0) seen[v] = 1;
    for (int y = 1; y <= cod_; ++y)
      if (!seen[y]) return false;
    return true;
  }

  bool in_image(int y) const {
    if (y == 0) return true;
    return std::find(tab_.begin(), tab_.end(), y) != tab_.end();
  }

  // Ascending non-base preimages of a non-base element.
  std::vector<int> preimage(int y) const {
    std::vector<int> pre;
    for (int x = 1; x <= dom_; ++x)
      if (tab_[x - 1] == y) pre.push_back(x);
    return pre;
  }

  friend bool operator==(const BasedMap& a, const BasedMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.tab_ == b.tab_;
  }

 private:
  int dom_, cod_;
  std::vector<int> tab_;
};

inline BasedMap compose(const BasedMap& g, const BasedMap& f) {
  if (f.cod() != g.dom()) throw ShapeError("compose: codomain/domain mismatch");
  std::vector<int> t(f.dom());
  for (int x = 1; x <= f.dom(); ++x) t[x - 1] = g(f(x));
  return BasedMap(f.dom(), g.cod(), std::move(t));
}

inline BasedMap operator*(const BasedMap& g, const BasedMap& f) { return compose(g, f); }

// Wedge of based maps: acts as kappa^x on the x-th summand.
inline BasedMap wedge_of_maps(const std::vector<BasedMap>& ks) {
  int a = static_cast<int>(ks.size());
  std::vector<int> p0(a), p1(a);
  for (int x = 0; x < a; ++x) {
    p0[x] = ks[x].dom();
    p1[x] = ks[x].cod();
  }
  DepSum dom(a, p0), cod(a, p1);
  std::vector<int> t(dom.total());
  for (int r = 1; r <= dom.total(); ++r) {
    auto [x, mu] = dom.unrank(r);
    int v = ks[x - 1](mu);
    t[r - 1] = v == 0 ? 0 : cod.rank(x, v);
  }
  return BasedMap(dom.total(), cod.total(), std::move(t));
}

// Smash of based maps: coordinatewise, with the basepoint absorbing.
inline BasedMap smash_of_maps(const std::vector<BasedMap>& ks) {
  int m = static_cast<int>(ks.size());
  std::vector<int> p0(m), p1(m);
  for (int i = 0; i < m; ++i) {
    p0[i] = ks[i].dom();
    p1[i] = ks[i].cod();
  }
  DepProd dom(m, p0), cod(m, p1);
  std::vector<int> t(dom.total());
  for (int r = 1; r <= dom.total(); ++r) {
    std::vector<int> mu = dom.unrank(r);
    std::vector<int> nu(m);
    bool dead = false;
    for (int i = 0; i < m && !dead; ++i) {
      nu[i] = ks[i](mu[i]);
      dead = nu[i] == 0;
    }
    t[r - 1] = dead ? 0 : cod.rank(nu);
  }
  return BasedMap(dom.total(), cod.total(), std::move(t));
}

// Smash-level reindexing along sigma (based version of sigma<p^i>), with the
// missing-target convention part = 1.
inline BasedMap smash_reindex(const FinMap& sigma, const std::vector<int>& parts0) {
  FinMap f = reindex_prod_map(sigma, parts0);
  return BasedMap(f.dom(), f.cod(), f.table());
}

/// sigma_{i2}(psi2, psi1): the fiber of psi2 psi1 over i2, in inherited order,
/// to Sum over the psi2-fiber of the psi1-fibers, i0 |-> (psi1 i0, i0).
/// When i2 has no preimage under psi2 psi1 both sides are the convention <1>
/// and the map is the identity on 1.
inline FinMap fiber_bijection(const BasedMap& psi2, const BasedMap& psi1, int i2) {
  if (psi1.cod() != psi2.dom()) throw ShapeError("fiber_bijection: not composable");
  if (i2 < 1 || i2 > psi2.cod()) throw ShapeError("fiber_bijection: target out of range");
  BasedMap comp = psi2 * psi1;
  std::vector<int> fib = comp.preimage(i2);
  if (fib.empty()) return FinMap::identity(1);

  std::vector<int> mid = psi2.preimage(i2);  // psi2-fiber, ascending
  std::vector<int> mid_pos(psi2.dom() + 1, 0);
  for (int k = 0; k < static_cast<int>(mid.size()); ++k) mid_pos[mid[k]] = k + 1;
  std::vector<int> parts(mid.size());
  std::vector<std::vector<int>> inner_pos(mid.size());
  for (int k = 0; k < static_cast<int>(mid.size()); ++k) {
    std::vector<int> pre = psi1.preimage(mid[k]);
    parts[k] = static_cast<int>(pre.size());
    inner_pos[k].assign(psi1.dom() + 1, 0);
    for (int l = 0; l < static_cast<int>(pre.size()); ++l) inner_pos[k][pre[l]] = l + 1;
  }
  DepSum cod(static_cast<int>(mid.size()), parts);
  std::vector<int> t(fib.size());
  for (int j = 0; j < static_cast<int>(fib.size()); ++j) {
    int i0 = fib[j];
    int i1 = psi1(i0);
    int k = mid_pos[i1];
    t[j] = cod.rank(k, inner_pos[k - 1][i0]);
  }
  return FinMap(static_cast<int>(fib.size()), cod.total(), std::move(t));
}

// ---------------------------------------------------------------------------
// The three function equations relating the reindexings and delta.  Each
// returns both sides so callers can report a discrepancy.
// ---------------------------------------------------------------------------

// delta' o Prod_m sigma^i(p^{ix})  =  (Prod_m sigma^i)(p^{i x^i}) o delta,
// for sigma^i a bijection of a^i.
inline std::pair<FinMap, FinMap> function_equation_sum_reindex(
    int m, const std::vector<int>& as, const std::vector<std::vector<int>>& ps,
    const std::vector<FinMap>& sigmas) {
  std::vector<FinMap> inner(m);
  std::vector<std::vector<int>> ps1(m);
  for (int i = 0; i < m; ++i) {
    inner[i] = reindex_sum_map(sigmas[i], ps[i]);
    ps1[i] = transported_sum_parts(sigmas[i], ps[i]);
  }
  FinMap lhs = compose(delta_bijection(m, as, ps1), prod_of_maps(inner));

  FinMap delta0 = delta_bijection(m, as, ps);
  DepProd outer(m, as);
  std::vector<int> outer_parts(outer.total());
  for (int X = 1; X <= outer.total(); ++X) {
    std::vector<int> xs = outer.unrank(X);
    long long prod = 1;
    for (int i = 0; i < m; ++i) prod *= ps[i][xs[i] - 1];
    outer_parts[X - 1] = static_cast<int>(prod);
  }
  FinMap rhs = compose(reindex_sum_map(prod_of_maps(sigmas), outer_parts), delta0);
  return {lhs, rhs};
}

// delta' o sigma<Sum_{a^i} p^{ix}>  =
//   (sigma<a^i>)(...) o Sum_{Prod a^i} sigma<p^{i x^i}> o delta,
// for sigma a bijection of m.
inline std::pair<FinMap, FinMap> function_equation_prod_reindex(
    int m, const std::vector<int>& as, const std::vector<std::vector<int>>& ps,
    const FinMap& sigma) {
  std::vector<int> sum_totals(m);
  for (int i = 0; i < m; ++i) sum_totals[i] = DepSum(as[i], ps[i]).total();

  std::vector<int> as1(m);
  std::vector<std::vector<int>> ps1(m);
  {
    FinMap sinv = sigma.inverse();
    for (int i = 0; i < m; ++i) {
      as1[i] = as[sinv(i + 1) - 1];
      ps1[i] = ps[sinv(i + 1) - 1];
    }
  }
  FinMap lhs = compose(delta_bijection(m, as1, ps1), reindex_prod_map(sigma, sum_totals));

  FinMap delta0 = delta_bijection(m, as, ps);
  DepProd outer(m, as);
  std::vector<FinMap> per_tuple(outer.total(), FinMap());
  for (int X = 1; X <= outer.total(); ++X) {
    std::vector<int> xs = outer.unrank(X);
    std::vector<int> inner_parts(m);
    for (int i = 0; i < m; ++i) inner_parts[i] = ps[i][xs[i] - 1];
    per_tuple[X - 1] = reindex_prod_map(sigma, inner_parts);
  }
  FinMap mid = sum_of_maps(per_tuple);
  std::vector<int> mid_parts(outer.total());
  for (int X = 1; X <= outer.total(); ++X) mid_parts[X - 1] = per_tuple[X - 1].cod();
  FinMap outer_reindex = reindex_sum_map(reindex_prod_map(sigma, as), mid_parts);
  FinMap rhs = compose(outer_reindex, compose(mid, delta0));
  return {lhs, rhs};
}

// (delta_{m,<a^i>,<b^ix>}(...)) o delta_{m,<Sum b>,<p>}  =
//   (Sum_{Prod a} delta_{m,<b^{ix^i}>,<p>}) o delta_{m,<a>,<Sum_b p>}.
// ps[i][x][y] with y ranging over bs[i][x].
inline std::pair<FinMap, FinMap> function_equation_double_delta(
    int m, const std::vector<int>& as, const std::vector<std::vector<int>>& bs,
    const std::vector<std::vector<std::vector<int>>>& ps) {
  // Left side: flatten each i to the sum over (x, y), apply delta, then
  // reindex the outer sum along the delta bijection of the b-shapes.
  std::vector<int> flat_index(m);
  std::vector<std::vector<int>> flat_parts(m);
  for (int i = 0; i < m; ++i) {
    for (int x = 0; x < as[i]; ++x)
      for (int y = 0; y < bs[i][x]; ++y) flat_parts[i].push_back(ps[i][x][y]);
    flat_index[i] = static_cast<int>(flat_parts[i].size());
  }
  FinMap delta_flat = delta_bijection(m, flat_index, flat_parts);

  FinMap delta_b = delta_bijection(m, as, bs);  // Prod_i Sum_x b^{ix} -> Sum_{Prod a} Prod b
  // Parts over the domain of delta_b: at <(x^i, y^i)> the part Prod_i p^{i x^i y^i}.
  std::vector<DepSum> bsums;
  bsums.reserve(m);
  for (int i = 0; i < m; ++i) bsums.emplace_back(as[i], bs[i]);
  std::vector<int> bprod_sizes(m);
  for (int i = 0; i < m; ++i) bprod_sizes[i] = bsums[i].total();
  DepProd bdom(m, bprod_sizes);
  std::vector<int> left_parts(bdom.total());
  for (int W = 1; W <= bdom.total(); ++W) {
    std::vector<int> ws = bdom.unrank(W);
    long long prod = 1;
    for (int i = 0; i < m; ++i) {
      auto [x, y] = bsums[i].unrank(ws[i]);
      prod *= ps[i][x - 1][y - 1];
    }
    left_parts[W - 1] = static_cast<int>(prod);
  }
  FinMap lhs = compose(reindex_sum_map(delta_b, left_parts), delta_flat);

  // Right side.
  std::vector<std::vector<int>> qs(m);  // Q^{ix} = Sum_y p^{ixy}
  for (int i = 0; i < m; ++i) {
    qs[i].resize(as[i]);
    for (int x = 0; x < as[i]; ++x)
      qs[i][x] = std::accumulate(ps[i][x].begin(), ps[i][x].end(), 0);
  }
  FinMap delta_q = delta_bijection(m, as, qs);
  DepProd outer(m, as);
  std::vector<FinMap> inner_deltas(outer.total(), FinMap());
  for (int X = 1; X <= outer.total(); ++X) {
    std::vector<int> xs = outer.unrank(X);
    std::vector<int> bx(m);
    std::vector<std::vector<int>> px(m);
    for (int i = 0; i < m; ++i) {
      bx[i] = bs[i][xs[i] - 1];
      px[i] = ps[i][xs[i] - 1];
    }
    inner_deltas[X - 1] = delta_bijection(m, bx, px);
  }
  FinMap rhs = compose(sum_of_maps(inner_deltas), delta_q);
  return {lhs, rhs};
}

}  // namespace opk

#endif  // OPK_FINORD_HPP
