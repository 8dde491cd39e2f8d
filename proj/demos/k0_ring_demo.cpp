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

// A quick tour: decide an equivalence of projections with a certified
// witness, multiply two K0 classes, and evaluate a Bott projection.

#include <iostream>

#include "opk/kring.hpp"

using namespace opk;

int main() {
  AlgebraPtr c2 = make_algebra(Field::Complex, {1, 1});

  // Two diagonal projections over C + C with the same blockwise ranks.
  StarMatrix<AlgElem<GRat>> p(2, 2, AlgElem<GRat>::zero(c2));
  p.at(1, 1) = AlgElem<GRat>::leading_idempotent(c2, {1, 0});
  p.at(2, 2) = AlgElem<GRat>::leading_idempotent(c2, {0, 1});
  StarMatrix<AlgElem<GRat>> q(2, 2, AlgElem<GRat>::zero(c2));
  q.at(1, 1) = AlgElem<GRat>::leading_idempotent(c2, {1, 1});

  std::cout << "equivalent: " << mvn_equivalent(p, q, c2) << "\n";
  auto w = witness(p, q, c2);
  std::cout << "witness constructed and verified: " << (w && w->exact) << "\n";

  // The K0 ring of C + C is Z^2 with the componentwise product.
  K0RingElem x = k0_elem(c2, {2, -1});
  K0RingElem y = k0_elem(c2, {1, 3});
  K0RingElem xy = cup(x, y, InjTuple::interleaving(2));
  std::cout << "cup: (" << xy.cls.rel[0] << ", " << xy.cls.rel[1] << ")\n";

  // A Bott projection away from the origin.
  GM b = bott_projection(rat(1, 2), rat(-1, 3));
  std::cout << "bott trace is one: " << (b.trace() == GRat(1)) << "\n";
  std::cout << "bott is a projection: " << (b == adjoint(b) && b * b == b) << "\n";
  return 0;
}
