/*
 * Copyright 2026 The wittkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>

#include "wittkit/matrix.hpp"

namespace wittkit {

/// An alternating matrix: M^t = -M with every diagonal entry exactly zero.
/// The diagonal condition is checked independently (it does not follow from
/// skew-symmetry in characteristic 2). Invertibility is not part of the
/// type; it is certified through a unit Pfaffian where needed.
class AlternatingMatrix {
 public:
  /// Validates; throws NotAlternating (or NotSquare / ShapeMismatch for odd
  /// or non-square input).
  explicit AlternatingMatrix(Matrix m);

  /// The 0x0 form, neutral for perp.
  static AlternatingMatrix empty(const RingHandle& ring);

  const Matrix& matrix() const { return mat_; }
  const RingHandle& ring() const { return mat_.ring(); }
  std::size_t size() const { return mat_.rows(); }
  std::size_t size_half() const { return mat_.rows() / 2; }

  friend bool operator==(const AlternatingMatrix& a, const AlternatingMatrix& b) { return a.mat_ == b.mat_; }

 private:
  Matrix mat_;
};

bool is_alternating(const Matrix& m);

/// psi_2 = [[0, 1], [-1, 0]] and psi_{2n+2} = psi_{2n} perp psi_2.
AlternatingMatrix psi(const RingHandle& ring, std::size_t n);

/// sigma_2 = [[0, 1], [1, 0]] and sigma_{2n+2} = sigma_{2n} perp sigma_2.
Matrix sigma(const RingHandle& ring, std::size_t n);

/// Pfaffian, normalized so that pfaffian(psi(n)) = 1. Expansion along the
/// first row, memoized over the set of remaining indices.
Element pfaffian(const AlternatingMatrix& m);

AlternatingMatrix perp(const AlternatingMatrix& m, const AlternatingMatrix& n);

/// G^t M G. G need not be invertible.
AlternatingMatrix congruence(const Matrix& g, const AlternatingMatrix& m);

/// M perp psi_{2s}.
AlternatingMatrix stabilize(const AlternatingMatrix& m, std::size_t s);

}  // namespace wittkit
