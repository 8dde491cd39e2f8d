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

#ifndef OPK_ALGEBRA_HPP
#define OPK_ALGEBRA_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "opk/scalar.hpp"

namespace opk {

enum class Field { Real, Complex };

/// A finite-dimensional C*-algebra over R or C: a direct sum of matrix
/// blocks M_{k_1} + ... + M_{k_J}.  blocks = {} is the zero algebra.
struct AlgebraDesc {
  Field field = Field::Complex;
  std::vector<int> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool commutative() const {
    for (int k : blocks)
      if (k > 1) return false;
    return true;
  }
  bool is_zero_algebra() const { return blocks.empty(); }

  friend bool operator==(const AlgebraDesc& a, const AlgebraDesc& b) {
    return a.field == b.field && a.blocks == b.blocks;
  }
};

using AlgebraPtr = std::shared_ptr<const AlgebraDesc>;

inline AlgebraPtr make_algebra(Field f, std::vector<int> blocks) {
  for (int k : blocks)
    if (k < 1) throw std::invalid_argument("algebra blocks must be positive");
  return std::make_shared<const AlgebraDesc>(AlgebraDesc{f, std::move(blocks)});
}

inline AlgebraPtr complex_field() { return make_algebra(Field::Complex, {1}); }

/// An element of a finite-dimensional C*-algebra: one dense k_j x k_j scalar
/// matrix per block.  Self-describing so that generic matrix code can derive
/// zeros and units from any sample element.
template <class S>
class AlgElem {
 public:
  AlgElem() = default;

  explicit AlgElem(AlgebraPtr alg) : alg_(std::move(alg)) {
    blk_.resize(alg_->block_count());
    for (int j = 0; j < alg_->block_count(); ++j)
      blk_[j].assign(static_cast<std::size_t>(alg_->blocks[j]) * alg_->blocks[j], S());
  }

  static AlgElem zero(AlgebraPtr alg) { return AlgElem(std::move(alg)); }

  static AlgElem unit(AlgebraPtr alg) {
    AlgElem e(std::move(alg));
    for (int j = 0; j < e.alg_->block_count(); ++j) {
      int k = e.alg_->blocks[j];
      for (int d = 0; d < k; ++d) e.at(j, d, d) = one_like(S());
    }
    return e;
  }

  // Diagonal idempotent with the leading `rank[j]` ones in block j.
  static AlgElem leading_idempotent(AlgebraPtr alg, const std::vector<int>& rank) {
    AlgElem e(alg);
    for (int j = 0; j < e.alg_->block_count(); ++j)
      for (int d = 0; d < rank[j]; ++d) e.at(j, d, d) = one_like(S());
    return e;
  }

  const AlgebraPtr& algebra() const { return alg_; }

  S& at(int j, int r, int c) { return blk_[j][static_cast<std::size_t>(r) * alg_->blocks[j] + c]; }
  const S& at(int j, int r, int c) const {
    return blk_[j][static_cast<std::size_t>(r) * alg_->blocks[j] + c];
  }

  bool is_zero() const {
    for (const auto& b : blk_)
      for (const auto& v : b)
        if (!opk::is_zero(v)) return false;
    return true;
  }

  AlgElem operator-() const {
    AlgElem r = *this;
    for (auto& b : r.blk_)
      for (auto& v : b) v = -v;
    return r;
  }

  friend AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    a.check_same(b);
    AlgElem r = a;
    for (std::size_t j = 0; j < r.blk_.size(); ++j)
      for (std::size_t t = 0; t < r.blk_[j].size(); ++t) r.blk_[j][t] = r.blk_[j][t] + b.blk_[j][t];
    return r;
  }

  friend AlgElem operator-(const AlgElem& a, const AlgElem& b) { return a + (-b); }

  friend AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    a.check_same(b);
    AlgElem r(a.alg_);
    for (int j = 0; j < a.alg_->block_count(); ++j) {
      int k = a.alg_->blocks[j];
      for (int x = 0; x < k; ++x)
        for (int z = 0; z < k; ++z) {
          if (opk::is_zero(a.at(j, x, z))) continue;
          for (int y = 0; y < k; ++y)
            r.at(j, x, y) = r.at(j, x, y) + a.at(j, x, z) * b.at(j, z, y);
        }
    }
    return r;
  }

  // Scalar action of the ground field.
  friend AlgElem operator*(const S& s, const AlgElem& a) {
    AlgElem r = a;
    for (auto& b : r.blk_)
      for (auto& v : b) v = s * v;
    return r;
  }

  friend AlgElem star(const AlgElem& a) {
    AlgElem r(a.alg_);
    for (int j = 0; j < a.alg_->block_count(); ++j) {
      int k = a.alg_->blocks[j];
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) r.at(j, x, y) = opk::star(a.at(j, y, x));
    }
    return r;
  }

  friend bool operator==(const AlgElem& a, const AlgElem& b) {
    a.check_same(b);
    return a.blk_ == b.blk_;
  }

  // Trace of block j.
  S block_trace(int j) const {
    S t{};
    for (int d = 0; d < alg_->blocks[j]; ++d) t = t + at(j, d, d);
    return t;
  }

 private:
  void check_same(const AlgElem& b) const {
    if (!alg_ || !b.alg_ || !(*alg_ == *b.alg_))
      throw std::invalid_argument("AlgElem: mixed algebras");
  }

  AlgebraPtr alg_;
  std::vector<std::vector<S>> blk_;
};

template <class S>
inline bool is_zero(const AlgElem<S>& a) {
  return a.is_zero();
}
template <class S>
inline AlgElem<S> zero_like(const AlgElem<S>& a) {
  return AlgElem<S>::zero(a.algebra());
}
template <class S>
inline AlgElem<S> one_like(const AlgElem<S>& a) {
  return AlgElem<S>::unit(a.algebra());
}

template <class S>
inline AlgElem<S> random_alg_elem(Rng& rng, const AlgebraPtr& alg) {
  AlgElem<S> e(alg);
  bool real_only = alg->field == Field::Real;
  for (int j = 0; j < alg->block_count(); ++j)
    for (int r = 0; r < alg->blocks[j]; ++r)
      for (int c = 0; c < alg->blocks[j]; ++c) e.at(j, r, c) = random_grat(rng, real_only);
  return e;
}

}  // namespace opk

#endif  // OPK_ALGEBRA_HPP
