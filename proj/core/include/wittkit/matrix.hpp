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
#include <optional>
#include <variant>
#include <vector>

#include "wittkit/ring.hpp"

namespace wittkit {

/// Dense row-major matrix with exact entries over one ring. Zero-sized
/// matrices are allowed and act as the neutral element of direct_sum.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(RingHandle ring, std::size_t rows, std::size_t cols);
  Matrix(RingHandle ring, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(const RingHandle& ring, std::size_t n);
  static Matrix from_rows(const RingHandle& ring, const std::vector<std::vector<Element>>& rows);
  static Matrix from_ints(const RingHandle& ring, const std::vector<std::vector<long>>& rows);
  static Matrix row_vector(const RingHandle& ring, const std::vector<Element>& v);
  static Matrix column_vector(const RingHandle& ring, const std::vector<Element>& v);

  const RingHandle& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Element value);
  const std::vector<Element>& entries() const { return entries_; }

  std::vector<Element> row(std::size_t i) const;
  std::vector<Element> column(std::size_t j) const;
  Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  RingHandle ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix transpose(const Matrix& a);
/// Block diagonal diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Element& lambda, const Matrix& a);

enum class MatOp { Mul, Add, Transpose, DirectSum, ScalarMul };
/// Dispatching form of the composition operations. ScalarMul takes the
/// scalar from the 1x1 matrix `b`.
Matrix mat_compose(MatOp op, const Matrix& a, const std::optional<Matrix>& b = std::nullopt);

/// Coefficients of det(tI - a), highest degree first (leading 1), computed
/// by Berkowitz's division-free algorithm.
std::vector<Element> characteristic_polynomial(const Matrix& a);

/// Division-free determinant, valid over every commutative ring.
Element det(const Matrix& a);

/// Classical adjugate via Cayley-Hamilton; no divisions.
Matrix adjugate(const Matrix& a);

/// det(a)^{-1} * adj(a). The determinant must be certified a unit, either
/// by `det_inverse` (checked: det * det_inverse == 1, else BadCertificate)
/// or by is_unit (else NotInvertible).
Matrix inverse(const Matrix& a, const std::optional<Element>& det_inverse = std::nullopt);

bool is_identity(const Matrix& a);

// ------------------------------------------------------------- generators

/// I + lambda * E_{row,col} (0-based indices, row != col).
struct Elementary {
  std::size_t row = 0;
  std::size_t col = 0;
  Element lambda;
};

/// Permutation matrix P with P e_j = e_{images[j]}. With sign_corrected set
/// and an odd permutation, the first column is negated so that det = 1.
struct Permutation {
  std::vector<std::size_t> images;
  bool sign_corrected = false;
};

/// Symplectic transvection x -> x + lambda * form(x, v) * v, where
/// form(x, y) = x^t F y for the alternating matrix F.
struct Transvection {
  std::vector<Element> v;
  Element lambda;
  Matrix form;
};

using GeneratorSpec = std::variant<Elementary, Permutation, Transvection>;

/// Materializes a generator at size n over `ring`. Throws BadSpec when the
/// spec does not fit n. Transvections are checked to preserve their form.
Matrix build_generator(const GeneratorSpec& g, std::size_t n, const RingHandle& ring);

/// The block swap [[0, I_s], [I_r, 0]] of size r + s as a permutation spec.
Permutation block_swap(std::size_t r, std::size_t s);

/// Writes a determinant-one permutation matrix as a product of elementary
/// matrices (product taken left to right). Throws BadSpec for odd
/// permutations.
std::vector<Elementary> elementary_factorization(const Permutation& p, const RingHandle& ring);

}  // namespace wittkit
