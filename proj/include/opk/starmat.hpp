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

#ifndef OPK_STARMAT_HPP
#define OPK_STARMAT_HPP

#include <vector>

#include "opk/finord.hpp"
#include "opk/stab.hpp"

namespace opk {

struct BackendError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ring-context compatibility.  Scalar backends are always compatible; the
// block-algebra entry rings must agree on the algebra description.
inline bool same_ring(const GRat&, const GRat&) { return true; }
inline bool same_ring(const std::complex<double>&, const std::complex<double>&) { return true; }
template <class S>
inline bool same_ring(const AlgElem<S>& a, const AlgElem<S>& b) {
  return *a.algebra() == *b.algebra();
}
template <class S>
inline bool same_ring(const Unitized<S>& a, const Unitized<S>& b) {
  return *a.algebra() == *b.algebra();
}

/// A rectangular matrix over a *-ring, rows and columns indexed by ordered
/// finite sets.  Every matrix with a zero dimension is the single formal
/// empty matrix 0_0.
template <class R>
class StarMatrix {
 public:
  StarMatrix() : rows_(0), cols_(0) {}

  StarMatrix(int rows, int cols, const R& fill) : rows_(rows), cols_(cols) {
    if (rows_ < 0 || cols_ < 0) throw ShapeError("StarMatrix: negative dimension");
    if (rows_ == 0 || cols_ == 0) {
      rows_ = cols_ = 0;
      return;
    }
    e_.assign(static_cast<std::size_t>(rows_) * cols_, fill);
  }

  static StarMatrix empty() { return StarMatrix(); }

  static StarMatrix zero(int rows, int cols, const R& sample) {
    return StarMatrix(rows, cols, zero_like(sample));
  }

  static StarMatrix identity(int n, const R& sample) {
    StarMatrix m = zero(n, n, sample);
    for (int i = 1; i <= n; ++i) m.at(i, i) = one_like(sample);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_empty() const { return rows_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  R& at(int r, int c) { return e_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)]; }
  const R& at(int r, int c) const {
    return e_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)];
  }

  // A sample entry for deriving ring constants; only valid on nonempty matrices.
  const R& sample() const {
    if (is_empty()) throw ShapeError("StarMatrix: empty matrix has no entries");
    return e_[0];
  }

  StarMatrix operator-() const {
    StarMatrix r = *this;
    for (auto& v : r.e_) v = -v;
    return r;
  }

  friend StarMatrix operator+(const StarMatrix& a, const StarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ShapeError("StarMatrix: addition shape mismatch");
    StarMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
  }

  friend StarMatrix operator-(const StarMatrix& a, const StarMatrix& b) { return a + (-b); }

  friend StarMatrix operator*(const StarMatrix& a, const StarMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("StarMatrix: product shape mismatch");
    if (a.is_empty() || b.is_empty()) return StarMatrix();
    StarMatrix r = zero(a.rows_, b.cols_, a.sample());
    for (int i = 1; i <= a.rows_; ++i)
      for (int k = 1; k <= a.cols_; ++k) {
        const R& aik = a.at(i, k);
        if (is_zero(aik)) continue;
        for (int j = 1; j <= b.cols_; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
      }
    return r;
  }

  // Entrywise action of the entry ring on the left.
  friend StarMatrix operator*(const R& s, const StarMatrix& a) {
    StarMatrix r = a;
    for (auto& v : r.e_) v = s * v;
    return r;
  }

  friend StarMatrix adjoint(const StarMatrix& a) {
    if (a.is_empty()) return a;
    StarMatrix r = zero(a.cols_, a.rows_, a.sample());
    for (int i = 1; i <= a.rows_; ++i)
      for (int j = 1; j <= a.cols_; ++j) r.at(j, i) = star(a.at(i, j));
    return r;
  }

  friend bool operator==(const StarMatrix& a, const StarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  R trace() const {
    if (!is_square()) throw ShapeError("StarMatrix: trace of a rectangular matrix");
    if (is_empty()) throw ShapeError("StarMatrix: trace of the empty matrix");
    R t = zero_like(sample());
    for (int i = 1; i <= rows_; ++i) t = t + at(i, i);
    return t;
  }

 private:
  int rows_, cols_;
  std::vector<R> e_;
};

/// Block-diagonal direct sum.  The sum over the empty list is the empty
/// matrix.
template <class R>
StarMatrix<R> direct_sum(const std::vector<StarMatrix<R>>& ms) {
  long long rows = 0, cols = 0;
  const StarMatrix<R>* sample = nullptr;
  for (const auto& m : ms) {
    rows += m.rows();
    cols += m.cols();
    if (!m.is_empty()) {
      if (sample && !same_ring(sample->sample(), m.sample()))
        throw ShapeError("direct_sum: mixed entry rings");
      if (!sample) sample = &m;
    }
  }
  if (!sample) return StarMatrix<R>();
  StarMatrix<R> r = StarMatrix<R>::zero(static_cast<int>(rows), static_cast<int>(cols),
                                        sample->sample());
  long long ro = 0, co = 0;
  for (const auto& m : ms) {
    for (int i = 1; i <= m.rows(); ++i)
      for (int j = 1; j <= m.cols(); ++j)
        r.at(static_cast<int>(ro + i), static_cast<int>(co + j)) = m.at(i, j);
    ro += m.rows();
    co += m.cols();
  }
  return r;
}

/// Kronecker product with entries in dependent-product order (last index
/// fastest).  The product over the empty list is the 1 x 1 identity, which
/// needs a ring sample; the empty matrix is absorbing.
template <class R>
StarMatrix<R> kron(const std::vector<StarMatrix<R>>& ms, const R& one_sample) {
  int m = static_cast<int>(ms.size());
  std::vector<int> rparts(m), cparts(m);
  for (int i = 0; i < m; ++i) {
    rparts[i] = ms[i].rows();
    cparts[i] = ms[i].cols();
    if (!ms[i].is_empty() && !same_ring(ms[i].sample(), one_sample))
      throw ShapeError("kron: mixed entry rings");
  }
  DepProd rp(m, rparts), cp(m, cparts);
  if (rp.total() == 0 || cp.total() == 0) return StarMatrix<R>();
  StarMatrix<R> r(rp.total(), cp.total(), one_like(one_sample));
  for (int i = 1; i <= rp.total(); ++i) {
    std::vector<int> mu = rp.unrank(i);
    for (int j = 1; j <= cp.total(); ++j) {
      std::vector<int> nu = cp.unrank(j);
      R v = one_like(one_sample);
      for (int t = 0; t < m; ++t) v = v * ms[t].at(mu[t], nu[t]);
      r.at(i, j) = v;
    }
  }
  return r;
}

template <class R>
StarMatrix<R> kron(const std::vector<StarMatrix<R>>& ms) {
  if (ms.empty()) throw ShapeError("kron: empty list needs a ring sample");
  for (const auto& m : ms)
    if (!m.is_empty()) return kron(ms, m.sample());
  return StarMatrix<R>();  // all factors empty: absorbed
}

/// The 0/1 matrix of an injection: entry one at (sigma nu, nu).  Satisfies
/// adjoint(m) * m = identity; m * adjoint(m) = identity iff sigma is a
/// bijection.
template <class R>
StarMatrix<R> perm_matrix(const FinMap& sigma, const R& one_sample) {
  if (!sigma.is_injective()) throw ShapeError("perm_matrix: map must be injective");
  StarMatrix<R> m = StarMatrix<R>::zero(sigma.cod(), sigma.dom(), one_sample);
  for (int nu = 1; nu <= sigma.dom(); ++nu) m.at(sigma(nu), nu) = one_like(one_sample);
  return m;
}

template <class R>
bool is_zero_matrix(const StarMatrix<R>& m) {
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (!is_zero(m.at(i, j))) return false;
  return true;
}

template <class R>
bool is_projection_matrix(const StarMatrix<R>& p) {
  if (!p.is_square()) return false;
  if (p.is_empty()) return true;  // the empty matrix is its own projection
  return p == adjoint(p) && p * p == p;
}

template <class R>
bool is_partial_isometry_matrix(const StarMatrix<R>& u, const StarMatrix<R>& source,
                                const StarMatrix<R>& target) {
  if (u.cols() != source.rows() || u.rows() != target.rows())
    throw ShapeError("is_partial_isometry: dimension mismatch");
  return adjoint(u) * u == source && u * adjoint(u) == target;
}

// ---------------------------------------------------------------------------
// Expansions to scalar matrices.
// ---------------------------------------------------------------------------

/// Block j of a matrix over a block algebra, as a scalar matrix of size
/// p * k_j x q * k_j.
template <class S>
StarMatrix<S> expand_block(const StarMatrix<AlgElem<S>>& m, const AlgebraPtr& alg, int j) {
  int k = alg->blocks[j];
  StarMatrix<S> r = StarMatrix<S>::zero(m.rows() * k, m.cols() * k, S{});
  for (int i = 1; i <= m.rows(); ++i)
    for (int c = 1; c <= m.cols(); ++c)
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
          r.at((i - 1) * k + x + 1, (c - 1) * k + y + 1) = m.at(i, c).at(j, x, y);
  return r;
}

/// Compression of a matrix over the unitized stabilization to the corner of
/// stabilization indices <= bound: a matrix over the base algebra of size
/// p * bound, with the scalar part contributing on the diagonal.
template <class S>
StarMatrix<AlgElem<S>> unitized_corner(const StarMatrix<Unitized<S>>& m,
                                       const AlgebraPtr& alg, long long bound) {
  int n = static_cast<int>(bound);
  AlgElem<S> az = AlgElem<S>::zero(alg);
  StarMatrix<AlgElem<S>> r = StarMatrix<AlgElem<S>>::zero(m.rows() * n, m.cols() * n, az);
  AlgElem<S> unit = AlgElem<S>::unit(alg);
  for (int i = 1; i <= m.rows(); ++i)
    for (int c = 1; c <= m.cols(); ++c) {
      const Unitized<S>& u = m.at(i, c);
      for (const auto& [key, val] : u.hat().entries()) {
        if (key.first > bound || key.second > bound)
          throw ShapeError("unitized_corner: bound below the support");
        r.at((i - 1) * n + static_cast<int>(key.first),
             (c - 1) * n + static_cast<int>(key.second)) =
            r.at((i - 1) * n + static_cast<int>(key.first),
                 (c - 1) * n + static_cast<int>(key.second)) +
            val;
      }
      if (!is_zero(u.scalar()))
        for (int d = 1; d <= n; ++d)
          r.at((i - 1) * n + d, (c - 1) * n + d) =
              r.at((i - 1) * n + d, (c - 1) * n + d) + u.scalar() * unit;
    }
  return r;
}

/// Largest stabilization index used anywhere in the matrix.
template <class S>
long long support_bound(const StarMatrix<Unitized<S>>& m) {
  long long b = 0;
  for (int i = 1; i <= m.rows(); ++i)
    for (int c = 1; c <= m.cols(); ++c) b = std::max(b, m.at(i, c).hat().support_bound());
  return b;
}

/// The scalar part pi(m), entrywise.
template <class S>
StarMatrix<S> scalar_matrix(const StarMatrix<Unitized<S>>& m) {
  if (m.is_empty()) return StarMatrix<S>();
  StarMatrix<S> r = StarMatrix<S>::zero(m.rows(), m.cols(), S{});
  for (int i = 1; i <= m.rows(); ++i)
    for (int c = 1; c <= m.cols(); ++c) r.at(i, c) = m.at(i, c).scalar();
  return r;
}

/// Entrywise scalar-part projection s = lambda pi.
template <class S>
StarMatrix<Unitized<S>> scalar_part_matrix(const StarMatrix<Unitized<S>>& m) {
  StarMatrix<Unitized<S>> r = m;
  for (int i = 1; i <= m.rows(); ++i)
    for (int c = 1; c <= m.cols(); ++c) r.at(i, c) = scalar_part(m.at(i, c));
  return r;
}

template <class S>
StarMatrix<Unitized<S>> embed_scalar_matrix(const StarMatrix<S>& m, const AlgebraPtr& alg) {
  if (m.is_empty()) return StarMatrix<Unitized<S>>();
  StarMatrix<Unitized<S>> r(m.rows(), m.cols(), Unitized<S>::zero(alg));
  for (int i = 1; i <= m.rows(); ++i)
    for (int c = 1; c <= m.cols(); ++c) r.at(i, c) = Unitized<S>::embed_scalar(alg, m.at(i, c));
  return r;
}

/// iota on matrices: a matrix over the base algebra placed at stabilization
/// index (1, 1).
template <class S>
StarMatrix<Unitized<S>> embed_alg_matrix(const StarMatrix<AlgElem<S>>& m, const AlgebraPtr& alg) {
  if (m.is_empty()) return StarMatrix<Unitized<S>>();
  StarMatrix<Unitized<S>> r(m.rows(), m.cols(), Unitized<S>::zero(alg));
  for (int i = 1; i <= m.rows(); ++i)
    for (int c = 1; c <= m.cols(); ++c)
      r.at(i, c) = Unitized<S>::embed_stab(Stab<S>::single(alg, 1, 1, m.at(i, c)));
  return r;
}

}  // namespace opk

#endif  // OPK_STARMAT_HPP
