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

#include "wittkit/vaserstein.hpp"

#include <string>

#include "wittkit/error.hpp"

namespace wittkit {

UnimodularRow UnimodularRow::make(const RingHandle& ring, std::vector<Element> a, std::vector<Element> b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::WrongLength, "row and section lengths differ (" + std::to_string(a.size()) + " vs " +
                                            std::to_string(b.size()) + ")");
  }
  for (const auto& x : a) {
    if (!same_ring(x.ring(), ring)) throw Error(ErrorCode::MixedRings, "row entry from a different ring");
  }
  for (const auto& x : b) {
    if (!same_ring(x.ring(), ring)) throw Error(ErrorCode::MixedRings, "section entry from a different ring");
  }
  const Element ab = dot(a, b);
  if (!ab.is_one()) throw Error(ErrorCode::NotUnimodular, "a . b = " + ab.to_string() + ", expected 1");
  UnimodularRow r;
  r.ring_ = ring;
  r.a_ = std::move(a);
  r.b_ = std::move(b);
  return r;
}

Element dot(const std::vector<Element>& a, const std::vector<Element>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::WrongLength, "dot product of vectors of different length");
  if (a.empty()) throw Error(ErrorCode::WrongLength, "dot product of empty vectors");
  Element acc = Element::zero(a.front().ring());
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

std::vector<Element> row_times(const std::vector<Element>& a, const Matrix& m) {
  if (a.size() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "row length does not match matrix");
  return (Matrix::row_vector(m.ring(), a) * m).entries();
}

std::vector<Element> times_column(const Matrix& m, const std::vector<Element>& b) {
  if (b.size() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "column length does not match matrix");
  return (m * Matrix::column_vector(m.ring(), b)).entries();
}

namespace {

Matrix suslin_rec(const RingHandle& ring, const std::vector<Element>& a, const std::vector<Element>& b,
                  std::size_t offset) {
  const std::size_t n = a.size() - offset;
  if (n == 1) return Matrix(ring, 1, 1, {a[offset]});
  const std::size_t half = std::size_t{1} << (n - 2);
  const Matrix upper_right = suslin_rec(ring, a, b, offset + 1);
  const Matrix lower_left = -transpose(suslin_rec(ring, b, a, offset + 1));
  Matrix out(ring, 2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    out.set(i, i, a[offset]);
    out.set(half + i, half + i, b[offset]);
    for (std::size_t j = 0; j < half; ++j) {
      out.set(i, half + j, upper_right(i, j));
      out.set(half + i, j, lower_left(i, j));
    }
  }
  return out;
}

// eps * det[p | q | b] for column vectors of length 3.
Element det3(const std::vector<Element>& p, const std::vector<Element>& q, const std::vector<Element>& b) {
  return p[0] * (q[1] * b[2] - q[2] * b[1]) - p[1] * (q[0] * b[2] - q[2] * b[0]) + p[2] * (q[0] * b[1] - q[1] * b[0]);
}

Matrix with_one(const Matrix& phi) { return direct_sum(phi, Matrix::identity(phi.ring(), 1)); }

void require_det_one(const Matrix& phi, std::size_t n) {
  if (phi.rows() != n || phi.cols() != n) {
    throw Error(ErrorCode::ShapeMismatch, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  const Element d = det(phi);
  if (!d.is_one()) throw Error(ErrorCode::BadCertificate, "determinant is " + d.to_string() + ", expected 1");
}

}  // namespace

Matrix suslin_matrix(const std::vector<Element>& a, const std::vector<Element>& b, std::size_t cap) {
  if (a.empty() || a.size() != b.size()) throw Error(ErrorCode::WrongLength, "Suslin matrix needs equal nonempty rows");
  if (a.size() > cap) {
    throw Error(ErrorCode::SizeCap, "row length " + std::to_string(a.size()) + " exceeds cap " + std::to_string(cap));
  }
  return suslin_rec(a.front().ring(), a, b, 0);
}

Matrix kernel_idempotent(const UnimodularRow& row) {
  const auto& ring = row.ring();
  const std::size_t n = row.length();
  return Matrix::identity(ring, n) - Matrix::column_vector(ring, row.b()) * Matrix::row_vector(ring, row.a());
}

AlternatingMatrix vaserstein_symbol(const SymbolInput& in) {
  const auto& row = in.row;
  if (row.length() != 3) {
    throw Error(ErrorCode::WrongLength, "the symbol is defined for rows of length 3, got " + std::to_string(row.length()));
  }
  if (in.orientation != 1 && in.orientation != -1) throw Error(ErrorCode::BadSpec, "orientation must be +1 or -1");
  const auto& ring = row.ring();
  const Matrix q = kernel_idempotent(row);  // column i is r(e_i)
  std::vector<std::vector<Element>> retracted;
  for (std::size_t i = 0; i < 3; ++i) retracted.push_back(q.column(i));

  Matrix v(ring, 4, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      Element d = det3(retracted[i], retracted[j], row.b());
      if (in.orientation < 0) d = -d;
      v.set(i, j, d);
      v.set(j, i, -d);
    }
    v.set(i, 3, row.a()[i]);
    v.set(3, i, -row.a()[i]);
  }
  return AlternatingMatrix(std::move(v));
}

bool symbol_transform_check(const SymbolInput& in, const Matrix& phi) {
  require_det_one(phi, 3);
  const Matrix phi_inv = adjugate(phi);  // det = 1
  const Matrix lifted = with_one(phi);
  const AlternatingMatrix lhs = congruence(lifted, vaserstein_symbol(in));
  const auto& row = in.row;
  const UnimodularRow moved =
      UnimodularRow::make(row.ring(), row_times(row.a(), phi), times_column(phi_inv, row.b()));
  return lhs == vaserstein_symbol(SymbolInput{moved, in.orientation});
}

UnimodularRow sl4_act(const SymbolInput& in, const Matrix& phi) {
  require_det_one(phi, 4);
  const AlternatingMatrix x = congruence(phi, vaserstein_symbol(in));
  const Matrix x_inv = inverse(x.matrix());
  std::vector<Element> a, b;
  for (std::size_t i = 0; i < 3; ++i) {
    a.push_back(x.matrix()(i, 3));
    b.push_back(x_inv(3, i));
  }
  return UnimodularRow::make(in.row.ring(), std::move(a), std::move(b));
}

}  // namespace wittkit
