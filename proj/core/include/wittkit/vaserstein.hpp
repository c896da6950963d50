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
#include <vector>

#include "wittkit/alt_form.hpp"

namespace wittkit {

/// A row a together with a section b certifying a . b = 1.
class UnimodularRow {
 public:
  /// Throws WrongLength for length mismatch and NotUnimodular when
  /// a . b != 1 (a bad certificate, not a proof that a is not unimodular).
  static UnimodularRow make(const RingHandle& ring, std::vector<Element> a, std::vector<Element> b);

  const RingHandle& ring() const { return ring_; }
  std::size_t length() const { return a_.size(); }
  const std::vector<Element>& a() const { return a_; }
  const std::vector<Element>& b() const { return b_; }

  friend bool operator==(const UnimodularRow&, const UnimodularRow&) = default;

 private:
  UnimodularRow() = default;

  RingHandle ring_;
  std::vector<Element> a_;
  std::vector<Element> b_;
};

Element dot(const std::vector<Element>& a, const std::vector<Element>& b);

/// Row vector times matrix.
std::vector<Element> row_times(const std::vector<Element>& a, const Matrix& m);
/// Matrix times column vector.
std::vector<Element> times_column(const Matrix& m, const std::vector<Element>& b);

inline constexpr std::size_t kDefaultSuslinCap = 5;

/// Suslin's matrix of size 2^{n-1}:
///   alpha_1(a, b) = (a_1),
///   alpha_n(a, b) = [[a_1 I, alpha_{n-1}(a', b')], [-alpha_{n-1}(b', a')^t, b_1 I]].
/// No unimodularity is assumed. Throws SizeCap when n > cap.
Matrix suslin_matrix(const std::vector<Element>& a, const std::vector<Element>& b,
                     std::size_t cap = kDefaultSuslinCap);

/// Q = I - b a: the idempotent projecting onto ker(a) along b.
Matrix kernel_idempotent(const UnimodularRow& row);

/// Row of length 3 with an orientation: +1 uses theta_0 : 1 -> e1 ^ e2,
/// -1 uses -theta_0.
struct SymbolInput {
  UnimodularRow row;
  int orientation = 1;
};

/// The 4x4 alternating form attached to a length-3 unimodular row with
/// section b. For eps = orientation and r(x) = x - b a(x):
///   V_ij = eps * det[r(e_i) | r(e_j) | b]  (1 <= i < j <= 3),
///   V_i4 = a_i,
/// filled skew-symmetrically. The basepoint a = (0,0,1), b = e_3 gives psi_4.
AlternatingMatrix vaserstein_symbol(const SymbolInput& in);

/// Checks (phi + 1)^t V(a, b) (phi + 1) == V(a phi, phi^{-1} b) exactly.
/// phi must be 3x3 with determinant 1 (BadCertificate otherwise).
bool symbol_transform_check(const SymbolInput& in, const Matrix& phi);

/// Right action of a determinant-one 4x4 matrix on rows: with
/// X = phi^t V(a, b) phi, the new row is (X_14, X_24, X_34) and its section
/// is read off the fourth row of X^{-1}. The section is verified.
UnimodularRow sl4_act(const SymbolInput& in, const Matrix& phi);

}  // namespace wittkit
