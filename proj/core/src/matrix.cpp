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

#include "wittkit/matrix.hpp"

#include <string>
#include <utility>

#include "wittkit/error.hpp"

namespace wittkit {

namespace {

void require_ring(const Matrix& a, const Matrix& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorCode::MixedRings, "matrices belong to different rings");
}

std::string shape(const Matrix& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

bool is_alternating(const Matrix& f) {
  if (!f.is_square()) return false;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    if (!f(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < f.cols(); ++j) {
      if (!(f(i, j) + f(j, i)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

Matrix::Matrix(RingHandle ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (!ring_) throw Error(ErrorCode::InvalidRing, "matrix needs a ring");
  entries_.assign(rows * cols, Element::zero(ring_));
}

Matrix::Matrix(RingHandle ring, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (!ring_) throw Error(ErrorCode::InvalidRing, "matrix needs a ring");
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::ShapeMismatch, "entry count " + std::to_string(entries_.size()) +
                                              " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (const auto& e : entries_) {
    if (!same_ring(e.ring(), ring_)) throw Error(ErrorCode::MixedRings, "matrix entry from a different ring");
  }
}

Matrix Matrix::identity(const RingHandle& ring, std::size_t n) {
  Matrix m(ring, n, n);
  const Element one = Element::one(ring);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = one;
  return m;
}

Matrix Matrix::from_rows(const RingHandle& ring, const std::vector<std::vector<Element>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Element> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(ring, r, c, std::move(entries));
}

Matrix Matrix::from_ints(const RingHandle& ring, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Element>> conv;
  conv.reserve(rows.size());
  for (const auto& row : rows) {
    auto& out = conv.emplace_back();
    for (long v : row) out.push_back(Element::from_int(ring, v));
  }
  return from_rows(ring, conv);
}

Matrix Matrix::row_vector(const RingHandle& ring, const std::vector<Element>& v) {
  return Matrix(ring, 1, v.size(), v);
}

Matrix Matrix::column_vector(const RingHandle& ring, const std::vector<Element>& v) {
  return Matrix(ring, v.size(), 1, v);
}

void Matrix::set(std::size_t i, std::size_t j, Element value) {
  if (!same_ring(value.ring(), ring_)) throw Error(ErrorCode::MixedRings, "matrix entry from a different ring");
  entries_[i * cols_ + j] = std::move(value);
}

std::vector<Element> Matrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<long>(i * cols_), entries_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<Element> Matrix::column(std::size_t j) const {
  std::vector<Element> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw Error(ErrorCode::ShapeMismatch, "submatrix out of range");
  std::vector<Element> out;
  out.reserve(nrows * ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) out.push_back((*this)(row0 + i, col0 + j));
  }
  return Matrix(ring_, nrows, ncols, std::move(out));
}

bool operator==(const Matrix& a, const Matrix& b) {
  return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_ring(a, b);
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
  Matrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element acc = Element::zero(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc = acc + a(i, k) * b(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot add " + shape(a) + " and " + shape(b));
  }
  std::vector<Element> out;
  out.reserve(a.entries().size());
  for (std::size_t k = 0; k < a.entries().size(); ++k) out.push_back(a.entries()[k] + b.entries()[k]);
  return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix operator-(const Matrix& a) {
  std::vector<Element> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(-e);
  return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix transpose(const Matrix& a) {
  Matrix out(a.ring(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a(i, j));
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  require_ring(a, b);
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  }
  return out;
}

Matrix scalar_mul(const Element& lambda, const Matrix& a) {
  if (!same_ring(lambda.ring(), a.ring())) throw Error(ErrorCode::MixedRings, "scalar from a different ring");
  std::vector<Element> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(lambda * e);
  return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix mat_compose(MatOp op, const Matrix& a, const std::optional<Matrix>& b) {
  if (op == MatOp::Transpose) return transpose(a);
  if (!b) throw Error(ErrorCode::BadSpec, "matrix operation needs a second operand");
  switch (op) {
    case MatOp::Mul: return a * *b;
    case MatOp::Add: return a + *b;
    case MatOp::DirectSum: return direct_sum(a, *b);
    case MatOp::ScalarMul:
      if (b->rows() != 1 || b->cols() != 1) throw Error(ErrorCode::ShapeMismatch, "scalar must be 1x1");
      return scalar_mul((*b)(0, 0), a);
    case MatOp::Transpose: break;
  }
  return transpose(a);
}

std::vector<Element> characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "characteristic polynomial of " + shape(a));
  const auto& ring = a.ring();
  const std::size_t n = a.rows();
  std::vector<Element> vect{Element::one(ring)};
  if (n == 0) return vect;
  vect.push_back(-a(0, 0));
  // Berkowitz: extend the characteristic polynomial of the leading r x r
  // block to the (r+1) x (r+1) block with a Toeplitz matrix product.
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Element> c{Element::one(ring), -a(r, r)};
    std::vector<Element> v = a.submatrix(0, r, r, 1).entries();  // column above the diagonal
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Element dot = Element::zero(ring);
      for (std::size_t t = 0; t < r; ++t) dot = dot + a(r, t) * v[t];
      c.push_back(-dot);
      if (k == r + 1) break;
      std::vector<Element> next(r, Element::zero(ring));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t t = 0; t < r; ++t) next[i] = next[i] + a(i, t) * v[t];
      }
      v = std::move(next);
    }
    std::vector<Element> updated(r + 2, Element::zero(ring));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] = updated[i] + c[i - j] * vect[j];
    }
    vect = std::move(updated);
  }
  return vect;
}

Element det(const Matrix& a) {
  auto cp = characteristic_polynomial(a);
  return a.rows() % 2 == 0 ? cp.back() : -cp.back();
}

Matrix adjugate(const Matrix& a) {
  auto cp = characteristic_polynomial(a);
  const std::size_t n = a.rows();
  if (n == 0) return a;
  // Cayley-Hamilton: adj(A) = (-1)^{n+1} (A^{n-1} + c_1 A^{n-2} + ... + c_{n-1} I).
  Matrix b = Matrix::identity(a.ring(), n);
  for (std::size_t k = 1; k < n; ++k) b = b * a + scalar_mul(cp[k], Matrix::identity(a.ring(), n));
  return n % 2 == 1 ? b : -b;
}

Matrix inverse(const Matrix& a, const std::optional<Element>& det_inverse) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "inverse of " + shape(a));
  const Element d = det(a);
  Element dinv;
  if (det_inverse) {
    if (!same_ring(det_inverse->ring(), a.ring()) || !(d * *det_inverse).is_one()) {
      throw Error(ErrorCode::BadCertificate,
                  "det * certificate != 1 (det = " + d.to_string() + ", certificate = " + det_inverse->to_string() + ")");
    }
    dinv = *det_inverse;
  } else {
    auto u = is_unit(d);
    if (u.status != UnitStatus::Yes) {
      throw Error(ErrorCode::NotInvertible, "determinant " + d.to_string() +
                                                (u.status == UnitStatus::No ? " is not a unit" : " is not certified a unit"));
    }
    dinv = *u.inverse;
  }
  Matrix inv = scalar_mul(dinv, adjugate(a));
  if (!is_identity(a * inv)) throw Error(ErrorCode::NotInvertible, "adjugate inverse failed to verify");
  return inv;
}

bool is_identity(const Matrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j ? !a(i, j).is_one() : !a(i, j).is_zero()) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- generators

Matrix build_generator(const GeneratorSpec& g, std::size_t n, const RingHandle& ring) {
  return std::visit(
      [&](const auto& spec) -> Matrix {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, Elementary>) {
          if (spec.row == spec.col) throw Error(ErrorCode::BadSpec, "elementary generator needs i != j");
          if (spec.row >= n || spec.col >= n) throw Error(ErrorCode::BadSpec, "elementary index outside size " + std::to_string(n));
          if (!same_ring(spec.lambda.ring(), ring)) throw Error(ErrorCode::MixedRings, "elementary parameter from a different ring");
          Matrix m = Matrix::identity(ring, n);
          m.set(spec.row, spec.col, spec.lambda);
          return m;
        } else if constexpr (std::is_same_v<T, Permutation>) {
          if (spec.images.size() != n) throw Error(ErrorCode::BadSpec, "permutation length does not match size");
          std::vector<bool> hit(n, false);
          for (auto k : spec.images) {
            if (k >= n || hit[k]) throw Error(ErrorCode::BadSpec, "not a permutation");
            hit[k] = true;
          }
          Matrix m(ring, n, n);
          for (std::size_t j = 0; j < n; ++j) m.set(spec.images[j], j, Element::one(ring));
          if (spec.sign_corrected && n > 0) {
            // parity from cycle decomposition
            std::vector<bool> seen(n, false);
            std::size_t transpositions = 0;
            for (std::size_t s = 0; s < n; ++s) {
              std::size_t len = 0;
              for (std::size_t k = s; !seen[k]; k = spec.images[k], ++len) seen[k] = true;
              if (len > 0) transpositions += len - 1;
            }
            if (transpositions % 2 == 1) m.set(spec.images[0], 0, -Element::one(ring));
          }
          return m;
        } else {
          const Matrix& f = spec.form;
          if (f.rows() != n || spec.v.size() != n) throw Error(ErrorCode::BadSpec, "transvection vector/form size mismatch");
          if (!same_ring(f.ring(), ring) || !same_ring(spec.lambda.ring(), ring)) {
            throw Error(ErrorCode::MixedRings, "transvection data from a different ring");
          }
          if (!is_alternating(f)) throw Error(ErrorCode::BadSpec, "transvection form is not alternating");
          const Matrix v = Matrix::column_vector(ring, spec.v);
          const Matrix fv = f * v;
          Matrix t = Matrix::identity(ring, n) + scalar_mul(spec.lambda, v * transpose(fv));
          if (!(transpose(t) * f * t == f)) throw Error(ErrorCode::BadSpec, "transvection does not preserve its form");
          return t;
        }
      },
      g);
}

Permutation block_swap(std::size_t r, std::size_t s) {
  // [[0, I_s], [I_r, 0]]: column j < r carries e_{s+j}; column r+k carries e_k.
  Permutation p;
  p.images.resize(r + s);
  for (std::size_t j = 0; j < r; ++j) p.images[j] = s + j;
  for (std::size_t k = 0; k < s; ++k) p.images[r + k] = k;
  return p;
}

std::vector<Elementary> elementary_factorization(const Permutation& p, const RingHandle& ring) {
  const std::size_t n = p.images.size();
  const Matrix target = build_generator(Permutation{p.images, false}, n, ring);
  if (!det(target).is_one()) throw Error(ErrorCode::BadSpec, "permutation has determinant -1");

  const Element one = Element::one(ring);
  const Element minus_one = -one;
  auto signed_swap = [&](std::size_t i, std::size_t j, std::vector<Elementary>& out) {
    // e_ij(1) e_ji(-1) e_ij(1) sends e_i -> -e_j and e_j -> e_i.
    out.push_back({i, j, one});
    out.push_back({j, i, minus_one});
    out.push_back({i, j, one});
  };

  // Reduce P to the identity by column swaps: P t_1 ... t_k = I, so
  // P = t_k ... t_1.
  std::vector<std::size_t> cur = p.images;
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  for (std::size_t j = 0; j < n; ++j) {
    if (cur[j] == j) continue;
    std::size_t l = j + 1;
    while (cur[l] != j) ++l;
    std::swap(cur[j], cur[l]);
    swaps.emplace_back(j, l);
  }
  std::vector<Elementary> word;
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) signed_swap(it->first, it->second, word);

  // The signed swaps leave a diagonal sign matrix D with P = W D; D has an
  // even number of -1 entries, and each pair is the square of a signed swap.
  Matrix w = Matrix::identity(ring, n);
  for (const auto& e : word) w = w * build_generator(e, n, ring);
  const Matrix d = transpose(target) * w;
  std::vector<std::size_t> negatives;
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) == minus_one && !d(i, i).is_one()) negatives.push_back(i);
  }
  for (std::size_t k = 0; k + 1 < negatives.size(); k += 2) {
    signed_swap(negatives[k], negatives[k + 1], word);
    signed_swap(negatives[k], negatives[k + 1], word);
  }
  return word;
}

}  // namespace wittkit
