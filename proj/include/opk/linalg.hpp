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

#ifndef OPK_LINALG_HPP
#define OPK_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "opk/numeric.hpp"
#include "opk/starmat.hpp"

namespace opk {

using GM = StarMatrix<GRat>;

/// Exact inverse by Gauss-Jordan elimination.
inline GM matrix_inverse(const GM& m) {
  if (!m.is_square()) throw ShapeError("matrix_inverse: not square");
  int n = m.rows();
  if (n == 0) return m;
  GM a = m;
  GM inv = GM::identity(n, GRat());
  for (int col = 1; col <= n; ++col) {
    int pivot = 0;
    for (int r = col; r <= n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == 0) throw std::domain_error("matrix_inverse: singular matrix");
    if (pivot != col)
      for (int c = 1; c <= n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    GRat d = a.at(col, col);
    for (int c = 1; c <= n; ++c) {
      a.at(col, c) = a.at(col, c) / d;
      inv.at(col, c) = inv.at(col, c) / d;
    }
    for (int r = 1; r <= n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      GRat f = a.at(r, col);
      for (int c = 1; c <= n; ++c) {
        a.at(r, c) = a.at(r, c) - f * a.at(col, c);
        inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
      }
    }
  }
  return inv;
}

/// Columns of m forming a basis of its column space (the pivot columns of the
/// original matrix, found by exact elimination).
inline GM column_space_basis(const GM& m) {
  if (m.is_empty()) return GM();
  GM a = m;
  int n = a.rows(), w = a.cols();
  std::vector<int> pivots;
  int row = 1;
  for (int col = 1; col <= w && row <= n; ++col) {
    int pr = 0;
    for (int r = row; r <= n; ++r)
      if (!a.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr == 0) continue;
    if (pr != row)
      for (int c = 1; c <= w; ++c) std::swap(a.at(pr, c), a.at(row, c));
    GRat d = a.at(row, col);
    for (int c = 1; c <= w; ++c) a.at(row, c) = a.at(row, c) / d;
    for (int r = 1; r <= n; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      GRat f = a.at(r, col);
      for (int c = 1; c <= w; ++c) a.at(r, c) = a.at(r, c) - f * a.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivots.empty()) return GM();
  GM basis = GM::zero(n, static_cast<int>(pivots.size()), GRat());
  for (int j = 0; j < static_cast<int>(pivots.size()); ++j)
    for (int r = 1; r <= n; ++r) basis.at(r, j + 1) = m.at(r, pivots[j]);
  return basis;
}

/// G = L D L* for Hermitian positive-definite G: L unit lower triangular,
/// D a positive rational diagonal (returned as the diagonal vector).
inline std::pair<GM, std::vector<Rat>> ldl_decompose(const GM& g) {
  if (!g.is_square()) throw ShapeError("ldl_decompose: not square");
  int n = g.rows();
  GM l = GM::identity(n, GRat());
  std::vector<Rat> d(n);
  for (int k = 1; k <= n; ++k) {
    GRat acc = g.at(k, k);
    for (int j = 1; j < k; ++j) acc = acc - l.at(k, j) * GRat(d[j - 1]) * star(l.at(k, j));
    if (!acc.is_real() || acc.re <= 0)
      throw std::domain_error("ldl_decompose: matrix not positive definite");
    d[k - 1] = acc.re;
    for (int i = k + 1; i <= n; ++i) {
      GRat s = g.at(i, k);
      for (int j = 1; j < k; ++j) s = s - l.at(i, j) * GRat(d[j - 1]) * star(l.at(k, j));
      l.at(i, k) = s / GRat(d[k - 1]);
    }
  }
  return {l, d};
}

/// Inverse of a unit upper triangular matrix by back substitution.
inline GM unit_upper_inverse(const GM& u) {
  int n = u.rows();
  GM inv = GM::identity(n, GRat());
  for (int c = 1; c <= n; ++c)
    for (int r = c - 1; r >= 1; --r) {
      GRat s;
      for (int k = r + 1; k <= c; ++k) s = s + u.at(r, k) * inv.at(k, c);
      inv.at(r, c) = -s;
    }
  return inv;
}

// ---------------------------------------------------------------------------
// Norms from Q(i): positive rationals of the form x^2 + y^2 with x, y in Q.
// ---------------------------------------------------------------------------

/// Trial-division factorization, bounded.  Returns empty on failure (a prime
/// factor beyond the bound), in which case callers fall back to the float
/// certification path.
inline std::optional<std::vector<std::pair<unsigned long, int>>> factor_bounded(
    mpz_class n, unsigned long bound = 1000000) {
  std::vector<std::pair<unsigned long, int>> fs;
  for (unsigned long p = 2; p <= bound && n > 1; p == 2 ? p = 3 : p += 2) {
    if (mpz_class(n % p) != 0) {
      if (mpz_class(p) * p > n) break;  // remaining n is prime and <= bound^2
      continue;
    }
    int e = 0;
    while (mpz_class(n % p) == 0) {
      n /= p;
      ++e;
    }
    fs.emplace_back(p, e);
  }
  if (n > 1) {
    // The remaining cofactor must be a genuine prime we can still handle.
    if (!n.fits_ulong_p() || n.get_ui() > 10000000000UL) return std::nullopt;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return std::nullopt;
    fs.emplace_back(n.get_ui(), 1);
  }
  return fs;
}

/// x + yi with x^2 + y^2 = p, for a prime p = 2 or p = 1 (mod 4).
inline std::pair<mpz_class, mpz_class> two_square_prime(unsigned long p) {
  for (unsigned long x = 1;; ++x) {
    unsigned long long xx = static_cast<unsigned long long>(x) * x;
    if (xx > p) break;
    unsigned long long rest = p - xx;
    unsigned long long y = static_cast<unsigned long long>(std::sqrt(static_cast<double>(rest)));
    for (unsigned long long yy = (y > 0 ? y - 1 : 0); yy <= y + 1; ++yy)
      if (yy * yy == rest) return {mpz_class(static_cast<unsigned long>(x)),
                                   mpz_class(static_cast<unsigned long>(yy))};
  }
  throw std::domain_error("two_square_prime: not a sum of two squares");
}

/// Some a in Q(i) with |a|^2 = q (q a positive rational), when q is a norm
/// from Q(i); nullopt when it is not or the factorization is out of reach.
inline std::optional<GRat> gaussian_norm_sqrt(const Rat& q) {
  if (q <= 0) return std::nullopt;
  mpz_class m = q.get_num() * q.get_den();
  auto fs = factor_bounded(m);
  if (!fs) return std::nullopt;
  mpz_class zx = 1, zy = 0;
  for (const auto& [p, e] : *fs) {
    if (p % 4 == 3) {
      if (e % 2 != 0) return std::nullopt;  // genuinely not a norm
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), p, e / 2);
      zx *= pw;
      zy *= pw;
    } else {
      auto [a, b] = two_square_prime(p);
      for (int i = 0; i < e; ++i) {
        mpz_class nx = zx * a - zy * b;
        mpz_class ny = zx * b + zy * a;
        zx = nx;
        zy = ny;
      }
    }
  }
  GRat res(Rat(zx) / Rat(q.get_den()), Rat(zy) / Rat(q.get_den()));
  return res;
}

/// Rational square root (for real algebras, where the scaling must stay real).
inline std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rat(sn) / Rat(sd);
}

/// Random rational unitary by the Cayley transform of a random skew-adjoint
/// matrix: (1 - S)(1 + S)^{-1}.  A nonnegative `offdiag_budget` caps the
/// number of nonzero off-diagonal skew entries, which keeps the rational
/// complexity of the result small.
inline GM random_unitary(Rng& rng, int n, bool real_only = false, int offdiag_budget = -1) {
  if (n == 0) return GM();
  GM s = GM::zero(n, n, GRat());
  if (offdiag_budget < 0) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        GRat v = random_grat(rng, real_only, 2, 2);
        s.at(i, j) = v;
        s.at(j, i) = -star(v);
      }
      if (!real_only) s.at(i, i) = GRat(Rat(0), random_rat(rng, 2, 2));
    }
  } else {
    for (int t = 0; t < offdiag_budget && n > 1; ++t) {
      int i = rng.range(1, n - 1);
      int j = rng.range(i + 1, n);
      GRat v = random_grat(rng, real_only, 1, 2);
      s.at(i, j) = v;
      s.at(j, i) = -star(v);
    }
    if (!real_only) {
      int d = rng.range(1, n);
      s.at(d, d) = GRat(Rat(0), random_rat(rng, 1, 2));
    }
  }
  GM one = GM::identity(n, GRat());
  return (one - s) * matrix_inverse(one + s);
}

}  // namespace opk

#endif  // OPK_LINALG_HPP
