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

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wittkit/polynomial.hpp"

namespace wittkit {

class Ring;
class Element;

using RingHandle = std::shared_ptr<const Ring>;

enum class RingKind { Integers, Modular, Polynomial, Quotient };

/// A presented commutative ring with canonical-form arithmetic.
///
/// Four presentations are supported: Z, Z/m, polynomial rings over Z or
/// Z/m, and quotients of a polynomial ring by one relation with leading
/// coefficient 1. A single monic relation is a Groebner basis of the ideal
/// it generates, so one-relation division yields canonical normal forms.
///
/// Handles are immutable and compared structurally: two handles built from
/// the same descriptor denote the same ring.
class Ring {
 public:
  static RingHandle integers();
  static RingHandle modular(const mpz_class& m);
  static RingHandle polynomial(const RingHandle& base, std::vector<std::string> vars,
                               MonomialOrder order = MonomialOrder::Grlex);
  /// `relation` must be an element of `poly_ring` with leading coefficient 1.
  static RingHandle quotient(const RingHandle& poly_ring, const Element& relation);

  RingKind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  /// Coefficient ring of a polynomial ring; the polynomial ring of a quotient.
  const RingHandle& base() const { return base_; }
  const std::vector<std::string>& variables() const { return vars_; }
  MonomialOrder order() const { return order_; }
  const Poly& relation() const { return relation_; }
  const CoeffDomain& coeffs() const { return coeffs_; }

  bool has_polynomial_payload() const {
    return kind_ == RingKind::Polynomial || kind_ == RingKind::Quotient;
  }

  /// Canonical JSON text of the ring descriptor; equal keys mean equal rings.
  const std::string& key() const { return key_; }

  bool is_integral_domain() const;

  /// Number of elements when the ring is finite and enumerable (Z/m, or a
  /// univariate quotient over Z/m); nullopt otherwise.
  std::optional<mpz_class> cardinality() const;

 private:
  Ring() = default;
  void finish();

  RingKind kind_ = RingKind::Integers;
  mpz_class modulus_ = 0;
  RingHandle base_;
  std::vector<std::string> vars_;
  MonomialOrder order_ = MonomialOrder::Grlex;
  Poly relation_;
  CoeffDomain coeffs_;
  std::string key_;
};

bool same_ring(const RingHandle& a, const RingHandle& b);

/// An element in canonical form: residues in [0, m), polynomials sorted
/// descending with nonzero coefficients, quotient payloads fully reduced.
/// Equality is equality of canonical payloads.
class Element {
 public:
  Element() = default;

  static Element from_int(const RingHandle& ring, const mpz_class& value);
  static Element from_int(const RingHandle& ring, long value) { return from_int(ring, mpz_class(value)); }
  /// Builds an element of a polynomial or quotient ring from a raw
  /// polynomial; the payload is canonicalized (and reduced, for quotients).
  static Element from_poly(const RingHandle& ring, Poly p);
  static Element variable(const RingHandle& ring, std::string_view name);
  static Element zero(const RingHandle& ring) { return from_int(ring, 0L); }
  static Element one(const RingHandle& ring) { return from_int(ring, 1L); }
  /// Parses the canonical string grammar (decimal integers, or signed sums
  /// of monomials). Non-canonical but well-formed input is accepted and
  /// canonicalized.
  static Element parse(const RingHandle& ring, std::string_view text);

  const RingHandle& ring() const { return ring_; }
  const mpz_class& scalar() const { return scalar_; }
  const Poly& poly() const { return poly_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element is the image of an integer (a constant).
  bool is_constant() const;
  /// The constant value; meaningful only when is_constant().
  mpz_class constant_value() const;

  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  RingHandle ring_;
  mpz_class scalar_ = 0;
  Poly poly_;
};

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator*(const Element& x, const Element& y);
Element operator-(const Element& x);
Element pow(const Element& x, unsigned long e);

enum class ArithOp { Add, Sub, Mul, Neg };
/// Dispatching form of the four ring operations; `y` is ignored for Neg.
Element ring_arith(ArithOp op, const Element& x, const std::optional<Element>& y = std::nullopt);

/// Normal form of an element of a quotient ring (identity on already
/// canonical payloads). Throws InvalidRing for non-quotient owners.
Element normal_form(const Element& x);

/// Image in the quotient ring `quot` of an element of its polynomial ring.
Element to_quotient(const RingHandle& quot, const Element& p);

bool is_canonical(const Element& x);

enum class UnitStatus { Yes, No, Unknown };

struct UnitResult {
  UnitStatus status = UnitStatus::Unknown;
  std::optional<Element> inverse;
};

/// Decides unit-ness where a procedure exists. `Yes` always carries an
/// inverse that has been multiplied back to 1; `No` is only returned with a
/// proof (Z, Z/m, polynomial rings over Z/m via nilpotent coefficients,
/// finite quotients by exhaustive search).
UnitResult is_unit(const Element& x);

/// All elements of a finite ring, in a fixed order (residues ascending;
/// quotient polynomials in base-m digit order). Throws
/// NotFinite when the ring is infinite or not enumerable, BudgetExceeded
/// when it has more than `budget` elements.
std::vector<Element> enumerate_elements(const RingHandle& ring, std::size_t budget = 1'000'000);

}  // namespace wittkit
