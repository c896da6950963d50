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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wittkit {

enum class MonomialOrder { Grlex, Lex };

std::string_view to_string(MonomialOrder order) noexcept;

/// Exponent vector, one slot per declared variable.
using Monomial = std::vector<std::uint32_t>;

/// Three-way comparison of monomials under `order`; positive when a > b.
int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order);

bool divides(const Monomial& d, const Monomial& m);

struct Term {
  Monomial mono;
  mpz_class coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms sorted strictly descending in the
/// ring's monomial order.
using Poly = std::vector<Term>;

/// Coefficient arithmetic for polynomial rings: Z, or Z/m with residues in
/// [0, m).
class CoeffDomain {
 public:
  CoeffDomain() = default;
  explicit CoeffDomain(mpz_class modulus) : modulus_(std::move(modulus)) {}

  bool is_modular() const { return modulus_ != 0; }
  const mpz_class& modulus() const { return modulus_; }
  void reduce(mpz_class& c) const;

 private:
  mpz_class modulus_ = 0;
};

namespace poly {

Poly add(const Poly& p, const Poly& q, const CoeffDomain& dom, MonomialOrder order);
Poly neg(const Poly& p, const CoeffDomain& dom);
Poly sub(const Poly& p, const Poly& q, const CoeffDomain& dom, MonomialOrder order);
Poly mul(const Poly& p, const Poly& q, const CoeffDomain& dom, MonomialOrder order);
Poly scale(const Poly& p, const mpz_class& c, const Monomial& shift, const CoeffDomain& dom);

/// Sorts, merges and drops zero coefficients.
Poly normalize(std::vector<Term> terms, const CoeffDomain& dom, MonomialOrder order);

/// Remainder of `p` under division by a relation whose leading
/// coefficient is 1. No monomial of the result is divisible by the
/// relation's leading monomial.
Poly reduce(const Poly& p, const Poly& relation, const CoeffDomain& dom, MonomialOrder order);

bool is_canonical(const Poly& p, const CoeffDomain& dom, MonomialOrder order);

std::string format(const Poly& p, const std::vector<std::string>& vars);

/// Parses a signed sum of terms such as "3*x1^2*y1-x2+1". Throws
/// Error(ParseError) on malformed input or unknown variables.
Poly parse(std::string_view text, const std::vector<std::string>& vars,
           const CoeffDomain& dom, MonomialOrder order);

}  // namespace poly
}  // namespace wittkit
