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

#include "wittkit/alt_form.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "wittkit/error.hpp"

namespace wittkit {

bool is_alternating(const Matrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) + m(j, i)).is_zero()) return false;
    }
  }
  return true;
}

AlternatingMatrix::AlternatingMatrix(Matrix m) : mat_(std::move(m)) {
  if (!mat_.is_square()) throw Error(ErrorCode::NotSquare, "alternating matrix must be square");
  if (mat_.rows() % 2 != 0) throw Error(ErrorCode::ShapeMismatch, "alternating matrix must have even size");
  for (std::size_t i = 0; i < mat_.rows(); ++i) {
    if (!mat_(i, i).is_zero()) {
      throw Error(ErrorCode::NotAlternating, "nonzero diagonal entry at (" + std::to_string(i + 1) + "," +
                                                 std::to_string(i + 1) + ")");
    }
    for (std::size_t j = i + 1; j < mat_.cols(); ++j) {
      if (!(mat_(i, j) + mat_(j, i)).is_zero()) {
        throw Error(ErrorCode::NotAlternating, "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                   ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                                   ") are not negatives");
      }
    }
  }
}

AlternatingMatrix AlternatingMatrix::empty(const RingHandle& ring) { return AlternatingMatrix(Matrix(ring, 0, 0)); }

AlternatingMatrix psi(const RingHandle& ring, std::size_t n) {
  Matrix m(ring, 2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    m.set(2 * k, 2 * k + 1, Element::one(ring));
    m.set(2 * k + 1, 2 * k, -Element::one(ring));
  }
  return AlternatingMatrix(std::move(m));
}

Matrix sigma(const RingHandle& ring, std::size_t n) {
  Matrix m(ring, 2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    m.set(2 * k, 2 * k + 1, Element::one(ring));
    m.set(2 * k + 1, 2 * k, Element::one(ring));
  }
  return m;
}

namespace {

class PfaffianExpansion {
 public:
  explicit PfaffianExpansion(const Matrix& m) : m_(m) {}

  // Pf of the principal submatrix on `mask`:
  //   Pf = sum_{j > first} (-1)^{pos(j)+1} m(first, j) Pf(mask \ {first, j})
  // where pos(j) is j's 0-based position among the remaining indices.
  Element eval(std::uint64_t mask) {
    if (mask == 0) return Element::one(m_.ring());
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const auto first = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
    Element acc = Element::zero(m_.ring());
    std::size_t pos = 1;
    for (std::uint64_t scan = rest; scan != 0; scan &= scan - 1, ++pos) {
      const auto j = static_cast<std::size_t>(std::countr_zero(scan));
      const Element& entry = m_(first, j);
      if (entry.is_zero()) continue;
      Element term = entry * eval(rest & ~(std::uint64_t{1} << j));
      acc = pos % 2 == 1 ? acc + term : acc - term;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

 private:
  const Matrix& m_;
  std::unordered_map<std::uint64_t, Element> memo_;
};

}  // namespace

Element pfaffian(const AlternatingMatrix& m) {
  if (m.size() > 62) throw Error(ErrorCode::SizeCap, "pfaffian supports sizes up to 62");
  const std::uint64_t all = m.size() == 0 ? 0 : ((std::uint64_t{1} << m.size()) - 1);
  return PfaffianExpansion(m.matrix()).eval(all);
}

AlternatingMatrix perp(const AlternatingMatrix& m, const AlternatingMatrix& n) {
  return AlternatingMatrix(direct_sum(m.matrix(), n.matrix()));
}

AlternatingMatrix congruence(const Matrix& g, const AlternatingMatrix& m) {
  if (!g.is_square() || g.rows() != m.size()) {
    throw Error(ErrorCode::ShapeMismatch, "congruence needs a square matrix of size " + std::to_string(m.size()));
  }
  return AlternatingMatrix(transpose(g) * m.matrix() * g);
}

AlternatingMatrix stabilize(const AlternatingMatrix& m, std::size_t s) {
  if (s == 0) return m;
  return perp(m, psi(m.ring(), s));
}

}  // namespace wittkit
