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

#ifndef OPK_NUMERIC_HPP
#define OPK_NUMERIC_HPP

#include <cmath>
#include <complex>

#include "opk/starmat.hpp"

namespace opk {

using CD = std::complex<double>;

inline StarMatrix<CD> to_float(const StarMatrix<GRat>& m) {
  if (m.is_empty()) return StarMatrix<CD>();
  StarMatrix<CD> r(m.rows(), m.cols(), CD{});
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) r.at(i, j) = to_complex(m.at(i, j));
  return r;
}

/// Largest eigenvalue of a Hermitian matrix by cyclic Jacobi rotations.
inline double hermitian_max_eig(StarMatrix<CD> a) {
  int n = a.rows();
  if (n == 0) return 0.0;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) off += std::norm(a.at(p, q));
    if (off < 1e-28) break;
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) {
        CD apq = a.at(p, q);
        double b = std::abs(apq);
        if (b < 1e-300) continue;
        CD phase = apq / b;
        double app = a.at(p, p).real(), aqq = a.at(q, q).real();
        double tau = (aqq - app) / (2.0 * b);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        // Columns: [p q] <- [p q] * [[c, s*phase], [-s*conj(phase), c]] and the
        // conjugate action on rows.
        for (int r = 1; r <= n; ++r) {
          CD arp = a.at(r, p), arq = a.at(r, q);
          a.at(r, p) = c * arp - s * std::conj(phase) * arq;
          a.at(r, q) = s * phase * arp + c * arq;
        }
        for (int r = 1; r <= n; ++r) {
          CD apr = a.at(p, r), aqr = a.at(q, r);
          a.at(p, r) = c * apr - s * phase * aqr;
          a.at(q, r) = s * std::conj(phase) * apr + c * aqr;
        }
      }
  }
  double mx = a.at(1, 1).real();
  for (int i = 2; i <= n; ++i) mx = std::max(mx, a.at(i, i).real());
  return mx;
}

/// Operator norm (largest singular value) of a float matrix.
inline double op_norm(const StarMatrix<CD>& m) {
  if (m.is_empty()) return 0.0;
  StarMatrix<CD> g = adjoint(m) * m;
  double lam = hermitian_max_eig(g);
  return std::sqrt(std::max(0.0, lam));
}

/// The exact backend has no norms; equality there is symbolic.
inline double op_norm(const StarMatrix<GRat>&) {
  throw BackendError("op_norm: unsupported on the exact backend");
}

inline StarMatrix<CD> float_block(const StarMatrix<AlgElem<GRat>>& m, const AlgebraPtr& alg,
                                  int j) {
  return to_float(expand_block(m, alg, j));
}

/// Operator norm of an element of the unitized stabilization (float data):
/// the scalar acts on the complement of the finite support, the corner block
/// contributes its largest singular value.
inline double op_norm_unitized(const Unitized<CD>& u) {
  double best = std::abs(u.scalar());
  long long n = u.hat().support_bound();
  if (n == 0) return best;
  const AlgebraPtr& alg = u.algebra();
  StarMatrix<Unitized<CD>> wrap(1, 1, u);
  StarMatrix<AlgElem<CD>> corner = unitized_corner(wrap, alg, n);
  for (int j = 0; j < alg->block_count(); ++j) {
    StarMatrix<CD> blk = expand_block(corner, alg, j);
    best = std::max(best, op_norm(blk));
  }
  if (alg->is_zero_algebra()) return std::abs(u.scalar());
  return best;
}

template <class S>
inline double op_norm_unitized(const Unitized<S>&) {
  throw BackendError("op_norm: unsupported on the exact backend");
}

inline bool is_projection_tol(const StarMatrix<CD>& p, double tol) {
  if (!p.is_square()) return false;
  if (p.is_empty()) return true;
  return op_norm(p - adjoint(p)) <= tol && op_norm(p * p - p) <= tol;
}

inline bool is_partial_isometry_tol(const StarMatrix<CD>& u, const StarMatrix<CD>& src,
                                    const StarMatrix<CD>& tgt, double tol) {
  return op_norm(adjoint(u) * u - src) <= tol && op_norm(u * adjoint(u) - tgt) <= tol;
}

}  // namespace opk

#endif  // OPK_NUMERIC_HPP
