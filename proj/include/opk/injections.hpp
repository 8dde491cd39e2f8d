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

#ifndef OPK_INJECTIONS_HPP
#define OPK_INJECTIONS_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "opk/finord.hpp"
#include "opk/rng.hpp"

namespace opk {

// An eventually-arithmetic injection h: N -> N (1-based): finitely many
// explicit values h(1..N), then h(n) = slope*n + offset for n > N.
// Injectivity and disjointness of images are decidable from this data, which
// is what makes the whole operad model exact.
class EAInjection {
 public:
  EAInjection() : slope_(1), offset_(0) {}  // the identity

  EAInjection(std::vector<long long> prefix, long long slope, long long offset)
      : prefix_(std::move(prefix)), slope_(slope), offset_(offset) {
    if (slope_ < 1) throw ShapeError("EAInjection: slope must be >= 1");
    normalize();
    validate();
  }

  static EAInjection identity() { return EAInjection(); }

  // The i-th component of the standard m-interleaving: n |-> m(n-1) + i.
  static EAInjection interleave(int m, int i) {
    return EAInjection({}, m, i - m);
  }

  long long operator()(long long n) const {
    if (n < 1) throw ShapeError("EAInjection: argument must be >= 1");
    if (n <= static_cast<long long>(prefix_.size())) return prefix_[n - 1];
    return slope_ * n + offset_;
  }

  const std::vector<long long>& prefix() const { return prefix_; }
  long long slope() const { return slope_; }
  long long offset() const { return offset_; }

  bool contains(long long v) const {
    if (std::find(prefix_.begin(), prefix_.end(), v) != prefix_.end()) return true;
    long long start = slope_ * (static_cast<long long>(prefix_.size()) + 1) + offset_;
    return v >= start && (v - offset_) % slope_ == 0;
  }

  friend EAInjection compose(const EAInjection& h, const EAInjection& g) {
    // h(g(n)) is affine once n is past g's prefix and g's tail values are past
    // h's prefix.
    long long ng = static_cast<long long>(g.prefix_.size());
    long long nh = static_cast<long long>(h.prefix_.size());
    long long cut = ng;
    // smallest M with g(n) > nh for all n > M along the tail
    if (nh > g.offset_) {
      long long m = (nh - g.offset_) / g.slope_;  // g(m) <= nh possible
      cut = std::max(cut, m);
    }
    std::vector<long long> pre(static_cast<std::size_t>(cut));
    for (long long n = 1; n <= cut; ++n) pre[n - 1] = h(g(n));
    return EAInjection(std::move(pre), h.slope_ * g.slope_,
                       h.slope_ * g.offset_ + h.offset_);
  }

  friend bool images_disjoint(const EAInjection& a, const EAInjection& b) {
    for (long long v : a.prefix_)
      if (b.contains(v)) return false;
    for (long long v : b.prefix_)
      if (a.contains(v)) return false;
    long long g = std::gcd(a.slope_, b.slope_);
    return (a.offset_ - b.offset_) % g != 0;
  }

  friend bool operator==(const EAInjection& x, const EAInjection& y) {
    return x.prefix_ == y.prefix_ && x.slope_ == y.slope_ && x.offset_ == y.offset_;
  }

 private:
  void normalize() {
    while (!prefix_.empty()) {
      long long n = static_cast<long long>(prefix_.size());
      if (prefix_.back() == slope_ * n + offset_)
        prefix_.pop_back();
      else
        break;
    }
  }

  void validate() const {
    std::set<long long> seen;
    for (long long v : prefix_) {
      if (v < 1) throw ShapeError("EAInjection: values must be >= 1");
      if (!seen.insert(v).second) throw ShapeError("EAInjection: prefix not injective");
    }
    long long start = slope_ * (static_cast<long long>(prefix_.size()) + 1) + offset_;
    if (start < 1) throw ShapeError("EAInjection: tail leaves N");
    for (long long v : prefix_) {
      if (v >= start && (v - offset_) % slope_ == 0)
        throw ShapeError("EAInjection: prefix meets tail");
    }
  }

  std::vector<long long> prefix_;
  long long slope_, offset_;
};

// An m-tuple of eventually-arithmetic injections with pairwise disjoint
// images.  Arity 0 is the unique empty tuple.
class InjTuple {
 public:
  InjTuple() = default;  // arity 0

  explicit InjTuple(std::vector<EAInjection> comps) : comps_(std::move(comps)) {
    for (std::size_t i = 0; i < comps_.size(); ++i)
      for (std::size_t j = i + 1; j < comps_.size(); ++j)
        if (!images_disjoint(comps_[i], comps_[j]))
          throw ShapeError("InjTuple: component images not pairwise disjoint");
  }

  static InjTuple identity() { return InjTuple({EAInjection::identity()}); }

  static InjTuple interleaving(int m) {
    std::vector<EAInjection> cs;
    cs.reserve(m);
    for (int i = 1; i <= m; ++i) cs.push_back(EAInjection::interleave(m, i));
    return InjTuple(std::move(cs));
  }

  int arity() const { return static_cast<int>(comps_.size()); }
  const EAInjection& component(int i) const { return comps_[i - 1]; }

  friend bool operator==(const InjTuple& a, const InjTuple& b) {
    return a.comps_ == b.comps_;
  }

 private:
  std::vector<EAInjection> comps_;
};

/// f<g^i>: components f_i g^i_j in lexicographic (i, j) order.
inline InjTuple inj_compose(const InjTuple& f, const std::vector<InjTuple>& gs) {
  if (static_cast<int>(gs.size()) != f.arity())
    throw ShapeError("inj_compose: tuple count must equal arity");
  std::vector<EAInjection> cs;
  for (int i = 1; i <= f.arity(); ++i)
    for (int j = 1; j <= gs[i - 1].arity(); ++j)
      cs.push_back(compose(f.component(i), gs[i - 1].component(j)));
  return InjTuple(std::move(cs));  // disjointness re-checked on construction
}

/// f . sigma := <f_{sigma i}> for injective sigma.
inline InjTuple inj_right_action(const InjTuple& f, const FinMap& sigma) {
  if (sigma.cod() != f.arity())
    throw ShapeError("inj_right_action: codomain must equal arity");
  if (!sigma.is_injective()) throw ShapeError("inj_right_action: sigma not injective");
  std::vector<EAInjection> cs;
  cs.reserve(sigma.dom());
  for (int i = 1; i <= sigma.dom(); ++i) cs.push_back(f.component(sigma(i)));
  return InjTuple(std::move(cs));
}

inline EAInjection random_ea_injection(Rng& rng) {
  long long a = rng.range(1, 3);
  long long b = rng.range(0, 2);
  int k = rng.range(0, 3);
  std::vector<long long> pre(k);
  for (int n = 1; n <= k; ++n) pre[n - 1] = a * n + b;
  for (int i = k - 1; i > 0; --i) std::swap(pre[i], pre[rng.below(i + 1)]);
  return EAInjection(std::move(pre), a, b);
}

inline InjTuple random_inj_tuple(Rng& rng, int arity) {
  if (arity == 0) return InjTuple();
  InjTuple base = InjTuple::interleaving(arity);
  std::vector<EAInjection> cs;
  cs.reserve(arity);
  for (int i = 1; i <= arity; ++i)
    cs.push_back(compose(base.component(i), random_ea_injection(rng)));
  return InjTuple(std::move(cs));
}

}  // namespace opk

#endif  // OPK_INJECTIONS_HPP
