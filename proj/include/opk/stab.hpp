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

#ifndef OPK_STAB_HPP
#define OPK_STAB_HPP

#include <map>
#include <utility>
#include <vector>

#include "opk/algebra.hpp"
#include "opk/injections.hpp"

namespace opk {

/// A finitely supported N x N matrix over a finite-dimensional C*-algebra:
/// the dense part of the stabilization.  Zero entries are absent from the
/// map.  Indices are 1-based.
template <class S>
class Stab {
 public:
  using Key = std::pair<long long, long long>;

  Stab() = default;
  explicit Stab(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static Stab zero(AlgebraPtr alg) { return Stab(std::move(alg)); }

  // e_{nn} tensor a: the single entry a at (n, n), or (r, c) generally.
  static Stab single(AlgebraPtr alg, long long r, long long c, AlgElem<S> a) {
    Stab s(std::move(alg));
    s.set(r, c, std::move(a));
    return s;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Key, AlgElem<S>>& entries() const { return ent_; }

  void set(long long r, long long c, AlgElem<S> a) {
    if (r < 1 || c < 1) throw std::invalid_argument("Stab: indices are 1-based");
    if (a.is_zero())
      ent_.erase({r, c});
    else
      ent_.insert_or_assign({r, c}, std::move(a));
  }

  AlgElem<S> get(long long r, long long c) const {
    auto it = ent_.find({r, c});
    if (it != ent_.end()) return it->second;
    return AlgElem<S>::zero(alg_);
  }

  bool is_zero() const { return ent_.empty(); }

  long long support_bound() const {
    long long n = 0;
    for (const auto& [k, v] : ent_) n = std::max({n, k.first, k.second});
    return n;
  }

  Stab operator-() const {
    Stab r(alg_);
    for (const auto& [k, v] : ent_) r.ent_.emplace(k, -v);
    return r;
  }

  friend Stab operator+(const Stab& a, const Stab& b) {
    Stab r = a;
    for (const auto& [k, v] : b.ent_) r.set(k.first, k.second, r.get(k.first, k.second) + v);
    return r;
  }

  friend Stab operator-(const Stab& a, const Stab& b) { return a + (-b); }

  friend Stab operator*(const Stab& a, const Stab& b) {
    // Group b's entries by row for the sparse product.
    std::map<long long, std::vector<std::pair<long long, const AlgElem<S>*>>> rows;
    for (const auto& [k, v] : b.ent_) rows[k.first].emplace_back(k.second, &v);
    Stab r(a.alg_);
    for (const auto& [k, v] : a.ent_) {
      auto it = rows.find(k.second);
      if (it == rows.end()) continue;
      for (const auto& [c, pv] : it->second)
        r.set(k.first, c, r.get(k.first, c) + v * (*pv));
    }
    return r;
  }

  friend Stab operator*(const S& s, const Stab& a) {
    Stab r(a.alg_);
    for (const auto& [k, v] : a.ent_) r.set(k.first, k.second, s * v);
    return r;
  }

  friend Stab star(const Stab& a) {
    Stab r(a.alg_);
    for (const auto& [k, v] : a.ent_) r.ent_.emplace(Key{k.second, k.first}, star(v));
    return r;
  }

  friend bool operator==(const Stab& a, const Stab& b) { return a.ent_ == b.ent_; }

  // Sum over the diagonal of the block-j traces.
  S diag_block_trace(int j) const {
    S t{};
    for (const auto& [k, v] : ent_)
      if (k.first == k.second) t = t + v.block_trace(j);
    return t;
  }

 private:
  AlgebraPtr alg_;
  std::map<Key, AlgElem<S>> ent_;
};

/// Conjugation by a single eventually-arithmetic injection: relabels entry
/// (i, j) to (h(i), h(j)).  This is the matrix f A f^* of the isometry f
/// permuting basis vectors.
template <class S>
inline Stab<S> conj_by_injection(const EAInjection& h, const Stab<S>& a) {
  Stab<S> r(a.algebra());
  for (const auto& [k, v] : a.entries()) r.set(h(k.first), h(k.second), v);
  return r;
}

/// alpha 1~ + A: an element of the unitization of the stabilization.
template <class S>
class Unitized {
 public:
  Unitized() = default;
  Unitized(S scalar, Stab<S> hat) : scalar_(std::move(scalar)), hat_(std::move(hat)) {}

  static Unitized zero(AlgebraPtr alg) { return Unitized(S{}, Stab<S>::zero(std::move(alg))); }
  static Unitized unit(AlgebraPtr alg) {
    return Unitized(one_like(S{}), Stab<S>::zero(std::move(alg)));
  }
  // lambda: the ground field section.
  static Unitized embed_scalar(AlgebraPtr alg, S s) {
    return Unitized(std::move(s), Stab<S>::zero(std::move(alg)));
  }
  // iota: the stabilization as the kernel of pi.
  static Unitized embed_stab(Stab<S> a) { return Unitized(S{}, std::move(a)); }

  const S& scalar() const { return scalar_; }
  const Stab<S>& hat() const { return hat_; }
  const AlgebraPtr& algebra() const { return hat_.algebra(); }

  bool is_zero() const { return opk::is_zero(scalar_) && hat_.is_zero(); }

  Unitized operator-() const { return Unitized(-scalar_, -hat_); }

  friend Unitized operator+(const Unitized& a, const Unitized& b) {
    return Unitized(a.scalar_ + b.scalar_, a.hat_ + b.hat_);
  }
  friend Unitized operator-(const Unitized& a, const Unitized& b) { return a + (-b); }

  friend Unitized operator*(const Unitized& a, const Unitized& b) {
    return Unitized(a.scalar_ * b.scalar_,
                    b.scalar_ * a.hat_ + a.scalar_ * b.hat_ + a.hat_ * b.hat_);
  }

  friend Unitized star(const Unitized& a) {
    return Unitized(star(a.scalar_), star(a.hat_));
  }

  friend bool operator==(const Unitized& a, const Unitized& b) {
    return a.scalar_ == b.scalar_ && a.hat_ == b.hat_;
  }

 private:
  S scalar_{};
  Stab<S> hat_;
};

// The split exact structure: pi extracts the scalar, s = lambda pi.
template <class S>
inline S pi(const Unitized<S>& u) {
  return u.scalar();
}
template <class S>
inline Unitized<S> scalar_part(const Unitized<S>& u) {
  return Unitized<S>::embed_scalar(u.algebra(), u.scalar());
}

template <class S>
inline bool is_zero(const Unitized<S>& u) {
  return u.is_zero();
}
template <class S>
inline Unitized<S> zero_like(const Unitized<S>& u) {
  return Unitized<S>::zero(u.algebra());
}
template <class S>
inline Unitized<S> one_like(const Unitized<S>& u) {
  return Unitized<S>::unit(u.algebra());
}

template <class S>
inline Unitized<S> conj_by_injection(const EAInjection& h, const Unitized<S>& u) {
  return Unitized<S>(u.scalar(), conj_by_injection(h, u.hat()));
}

}  // namespace opk

#endif  // OPK_STAB_HPP
