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
#include <string>
#include <variant>
#include <vector>

#include "wittkit/alt_form.hpp"

namespace wittkit {

/// Which subgroup certifies equivalences: products of elementary matrices
/// (E) or determinant-one matrices (SL).
enum class GroupFlag { E, SL };

std::string_view to_string(GroupFlag g) noexcept;

/// A representative of a class in W'_G(R). Classes are never decided in
/// general; equality is certified by WitnessWord or by a finite census.
struct WittRep {
  AlternatingMatrix rep;
  GroupFlag group = GroupFlag::E;
  /// Inverse of pfaffian(rep) when known.
  std::optional<Element> pf_unit_cert;

  /// Validates the certificate if present (throws BadCertificate).
  static WittRep make(AlternatingMatrix rep, GroupFlag group, std::optional<Element> pf_unit_cert = std::nullopt);

  /// True when pfaffian(rep) == 1, i.e. the representative lies in the
  /// Pfaffian kernel W_G(R).
  bool in_pfaffian_kernel() const;
};

/// One factor of a witness product: an elementary generator, or (for SL
/// witnesses) an explicit matrix whose determinant must be 1.
using WitnessFactor = std::variant<Elementary, Matrix>;

/// E = factors[0] * factors[1] * ... at stabilization level s. For forms M
/// of size 2m and N of size 2n the certified identity is
///   M perp psi_{2n+2s} = E^t (N perp psi_{2m+2s}) E.
struct WitnessWord {
  std::size_t stabilization = 0;
  std::vector<WitnessFactor> factors;
};

/// Multiplies the factors out at size `size`. Throws BadWitness when a
/// factor does not fit.
Matrix assemble_witness(const WitnessWord& w, const RingHandle& ring, std::size_t size);

/// Word for E^{-1}: factors reversed, elementary parameters negated,
/// explicit matrices inverted (they have determinant 1).
WitnessWord inverse_word(const WitnessWord& w);

struct WitnessCheck {
  bool ok = false;
  /// Failure locus: first differing entry (1-based), with both sides' values.
  std::optional<std::pair<std::size_t, std::size_t>> entry;
  std::string lhs_value;
  std::string rhs_value;
};

/// Verifies the stabilized congruence identity exactly. Shape violations and
/// group violations (a non-elementary factor under E, a det != 1 factor
/// under SL) throw BadWitness; a well-formed word for which the identity
/// fails returns ok = false with the failure locus.
WitnessCheck check_equiv_witness(const AlternatingMatrix& m, const AlternatingMatrix& n, const WitnessWord& w,
                                 GroupFlag group);

/// Orthogonal sum.
WittRep witt_add(const WittRep& x, const WittRep& y);

/// sigma (x.rep)^{-1} sigma. Requires a unit Pfaffian (NotInvertible otherwise).
WittRep witt_neg(const WittRep& x);

/// Witness that witt_add(x, y) and witt_add(y, x) are E-equivalent, built
/// from the block swap [[0, I], [I, 0]] (determinant 1 since both block
/// sizes are even), factored into elementary matrices.
WitnessWord commutativity_witness(const WittRep& x, const WittRep& y);

/// M^t psi_{2n} M. A determinant certificate becomes the Pfaffian
/// certificate of the result.
WittRep hyperbolic(const Matrix& m, const std::optional<Element>& det_inverse = std::nullopt);

/// The formal difference [R^{2n}, M] - [R^{2n}, psi_{2n}], as data.
struct EtaValue {
  AlternatingMatrix plus;
  AlternatingMatrix minus;
  /// Set only when plus is literally psi_{2n}.
  bool zero = false;
};

EtaValue eta(const AlternatingMatrix& m, const std::optional<Element>& pf_inverse = std::nullopt);

/// A triple (R^{2n}, g, f) with an optional change of basis alpha.
struct FreeTriple {
  AlternatingMatrix g;
  AlternatingMatrix f;
  std::optional<Matrix> alpha;
};

/// (alpha^t f alpha) perp sigma (alpha^t g alpha)^{-1} sigma^t, of size 4n.
WittRep xi_triple(const FreeTriple& t);

}  // namespace wittkit
