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

#ifndef OPK_SCALAR_HPP
#define OPK_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <string>

#include "opk/rng.hpp"

namespace opk {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Exact element of Q(i).  Conjugation is the star involution; over a real
/// algebra the imaginary part stays identically zero.
struct GRat {
  Rat re, im;

  GRat() : re(0), im(0) {}
  GRat(long n) : re(n), im(0) {}  // NOLINT: implicit from integers is wanted
  GRat(Rat r) : re(std::move(r)), im(0) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GRat operator-() const { return GRat(-re, -im); }

  friend GRat operator+(const GRat& a, const GRat& b) {
    return GRat(a.re + b.re, a.im + b.im);
  }
  friend GRat operator-(const GRat& a, const GRat& b) {
    return GRat(a.re - b.re, a.im - b.im);
  }
  friend GRat operator*(const GRat& a, const GRat& b) {
    return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GRat operator/(const GRat& a, const GRat& b) {
    Rat n2 = b.re * b.re + b.im * b.im;
    if (n2 == 0) throw std::domain_error("GRat: division by zero");
    return GRat((a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2);
  }
  friend bool operator==(const GRat& a, const GRat& b) {
    return a.re == b.re && a.im == b.im;
  }

  // |z|^2, exact.
  Rat norm2() const { return re * re + im * im; }
};

inline GRat star(const GRat& z) { return GRat(z.re, -z.im); }
inline bool is_zero(const GRat& z) { return z.is_zero(); }
inline GRat zero_like(const GRat&) { return GRat(); }
inline GRat one_like(const GRat&) { return GRat(1); }
inline std::complex<double> to_complex(const GRat& z) {
  return {z.re.get_d(), z.im.get_d()};
}

inline std::complex<double> star(const std::complex<double>& z) { return std::conj(z); }
inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }
inline std::complex<double> zero_like(const std::complex<double>&) { return 0.0; }
inline std::complex<double> one_like(const std::complex<double>&) { return 1.0; }
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }

inline std::string to_string(const GRat& z) {
  return z.re.get_str() + (z.im >= 0 ? "+" : "") + z.im.get_str() + "i";
}

inline Rat random_rat(Rng& rng, int max_num = 3, int max_den = 2) {
  return rat(rng.range(-max_num, max_num), rng.range(1, max_den));
}

inline GRat random_grat(Rng& rng, bool real_only = false, int max_num = 2,
                        int max_den = 2) {
  if (real_only) return GRat(random_rat(rng, max_num, max_den));
  return GRat(random_rat(rng, max_num, max_den), random_rat(rng, max_num, max_den));
}

}  // namespace opk

#endif  // OPK_SCALAR_HPP
