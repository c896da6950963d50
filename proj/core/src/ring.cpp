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

#include "wittkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <nlohmann/json.hpp>

#include "wittkit/error.hpp"

namespace wittkit {

namespace {

// Upper bound on exhaustive inverse search in finite quotient rings.
constexpr std::size_t kUnitSearchLimit = 1u << 16;

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

nlohmann::ordered_json descriptor_of(const Ring& r) {
  nlohmann::ordered_json j;
  switch (r.kind()) {
    case RingKind::Integers:
      j["kind"] = "int";
      break;
    case RingKind::Modular:
      j["kind"] = "mod";
      if (r.modulus().fits_slong_p()) j["m"] = r.modulus().get_si();
      else j["m"] = r.modulus().get_str();
      break;
    case RingKind::Polynomial:
      j["kind"] = "poly";
      j["base"] = nlohmann::ordered_json::parse(r.base()->key());
      j["vars"] = r.variables();
      j["order"] = std::string(to_string(r.order()));
      break;
    case RingKind::Quotient:
      j["kind"] = "quot";
      j["base"] = nlohmann::ordered_json::parse(r.base()->key());
      j["relation"] = poly::format(r.relation(), r.variables());
      break;
  }
  return j;
}

void require_same(const Element& x, const Element& y) {
  if (!x.ring() || !y.ring()) throw Error(ErrorCode::InvalidRing, "element has no ring");
  if (!same_ring(x.ring(), y.ring())) {
    throw Error(ErrorCode::MixedRings, "operands belong to different rings: " + x.ring()->key() +
                                           " vs " + y.ring()->key());
  }
}

bool is_nilpotent_mod(const mpz_class& c, const mpz_class& m) {
  // Every prime factor of m divides c  <=>  c^k == 0 (mod m) for k = log2(m) + 1.
  mpz_class r;
  const unsigned long k = mpz_sizeinbase(m.get_mpz_t(), 2);
  mpz_powm_ui(r.get_mpz_t(), c.get_mpz_t(), k, m.get_mpz_t());
  return r == 0;
}

UnitResult verified(const Element& x, Element inv) {
  if (!(x * inv).is_one()) return {UnitStatus::Unknown, std::nullopt};
  return {UnitStatus::Yes, std::move(inv)};
}

}  // namespace

// ---------------------------------------------------------------- Ring

void Ring::finish() { key_ = descriptor_of(*this).dump(); }

RingHandle Ring::integers() {
  static const RingHandle z = [] {
    std::shared_ptr<Ring> r(new Ring());
    r->kind_ = RingKind::Integers;
    r->finish();
    return r;
  }();
  return z;
}

RingHandle Ring::modular(const mpz_class& m) {
  if (m < 2) throw Error(ErrorCode::InvalidRing, "modulus must be at least 2, got " + m.get_str());
  std::shared_ptr<Ring> r(new Ring());
  r->kind_ = RingKind::Modular;
  r->modulus_ = m;
  r->coeffs_ = CoeffDomain(m);
  r->finish();
  return r;
}

RingHandle Ring::polynomial(const RingHandle& base, std::vector<std::string> vars, MonomialOrder order) {
  if (!base || (base->kind() != RingKind::Integers && base->kind() != RingKind::Modular)) {
    throw Error(ErrorCode::InvalidRing, "polynomial coefficients must be Z or Z/m");
  }
  if (vars.empty()) throw Error(ErrorCode::InvalidRing, "polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) throw Error(ErrorCode::InvalidRing, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorCode::InvalidRing, "duplicate variable '" + v + "'");
  }
  std::shared_ptr<Ring> r(new Ring());
  r->kind_ = RingKind::Polynomial;
  r->base_ = base;
  r->vars_ = std::move(vars);
  r->order_ = order;
  r->coeffs_ = base->kind() == RingKind::Modular ? CoeffDomain(base->modulus()) : CoeffDomain();
  r->finish();
  return r;
}

RingHandle Ring::quotient(const RingHandle& poly_ring, const Element& relation) {
  if (!poly_ring || poly_ring->kind() != RingKind::Polynomial) {
    throw Error(ErrorCode::InvalidRing, "quotient base must be a polynomial ring");
  }
  if (!same_ring(relation.ring(), poly_ring)) {
    throw Error(ErrorCode::MixedRings, "relation is not an element of the quotient's base ring");
  }
  if (relation.poly().empty() || relation.poly().front().coeff != 1) {
    throw Error(ErrorCode::InvalidRing,
                "relation must have leading coefficient 1, got " + relation.to_string());
  }
  std::shared_ptr<Ring> r(new Ring());
  r->kind_ = RingKind::Quotient;
  r->base_ = poly_ring;
  r->vars_ = poly_ring->variables();
  r->order_ = poly_ring->order();
  r->coeffs_ = poly_ring->coeffs();
  r->relation_ = relation.poly();
  r->finish();
  return r;
}

bool Ring::is_integral_domain() const {
  switch (kind_) {
    case RingKind::Integers: return true;
    case RingKind::Modular: return mpz_probab_prime_p(modulus_.get_mpz_t(), 30) > 0;
    case RingKind::Polynomial: return base_->is_integral_domain();
    case RingKind::Quotient: return false;  // undecided; callers treat as "not known"
  }
  return false;
}

std::optional<mpz_class> Ring::cardinality() const {
  if (kind_ == RingKind::Modular) return modulus_;
  if (kind_ == RingKind::Quotient && vars_.size() == 1 && coeffs_.is_modular()) {
    mpz_class n;
    mpz_pow_ui(n.get_mpz_t(), coeffs_.modulus().get_mpz_t(), relation_.front().mono[0]);
    return n;
  }
  return std::nullopt;
}

bool same_ring(const RingHandle& a, const RingHandle& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->key() == b->key();
}

// ---------------------------------------------------------------- Element

Element Element::from_int(const RingHandle& ring, const mpz_class& value) {
  if (!ring) throw Error(ErrorCode::InvalidRing, "null ring");
  if (ring->has_polynomial_payload()) {
    Poly p;
    if (value != 0) p.push_back(Term{Monomial(ring->variables().size(), 0), value});
    return from_poly(ring, std::move(p));
  }
  Element e;
  e.ring_ = ring;
  e.scalar_ = value;
  if (ring->kind() == RingKind::Modular) ring->coeffs().reduce(e.scalar_);
  return e;
}

Element Element::from_poly(const RingHandle& ring, Poly p) {
  if (!ring || !ring->has_polynomial_payload()) {
    throw Error(ErrorCode::InvalidRing, "from_poly needs a polynomial or quotient ring");
  }
  Element e;
  e.ring_ = ring;
  e.poly_ = poly::normalize(std::move(p), ring->coeffs(), ring->order());
  if (ring->kind() == RingKind::Quotient) {
    e.poly_ = poly::reduce(e.poly_, ring->relation(), ring->coeffs(), ring->order());
  }
  return e;
}

Element Element::variable(const RingHandle& ring, std::string_view name) {
  if (!ring || !ring->has_polynomial_payload()) {
    throw Error(ErrorCode::InvalidRing, "ring has no variables");
  }
  const auto& vars = ring->variables();
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw Error(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "'");
  Monomial m(vars.size(), 0);
  m[static_cast<std::size_t>(it - vars.begin())] = 1;
  return from_poly(ring, Poly{Term{std::move(m), 1}});
}

Element Element::parse(const RingHandle& ring, std::string_view text) {
  if (!ring) throw Error(ErrorCode::InvalidRing, "null ring");
  if (ring->has_polynomial_payload()) {
    return from_poly(ring, poly::parse(text, ring->variables(), ring->coeffs(), ring->order()));
  }
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  std::size_t digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits ||
      !std::all_of(s.begin() + static_cast<long>(digits), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorCode::ParseError, "not an integer: \"" + std::string(text) + "\"");
  }
  if (s[0] == '+') s.erase(0, 1);
  return from_int(ring, mpz_class(s, 10));
}

bool Element::is_zero() const {
  return ring_ && (ring_->has_polynomial_payload() ? poly_.empty() : scalar_ == 0);
}

bool Element::is_constant() const {
  if (!ring_) return false;
  if (!ring_->has_polynomial_payload()) return true;
  if (poly_.empty()) return true;
  if (poly_.size() != 1) return false;
  const auto& m = poly_.front().mono;
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

mpz_class Element::constant_value() const {
  if (!ring_ || !ring_->has_polynomial_payload()) return scalar_;
  return poly_.empty() ? mpz_class(0) : poly_.front().coeff;
}

bool Element::is_one() const { return is_constant() && constant_value() == 1 && ring_; }

std::string Element::to_string() const {
  if (!ring_) return "<null>";
  if (ring_->has_polynomial_payload()) return poly::format(poly_, ring_->variables());
  return scalar_.get_str();
}

bool operator==(const Element& a, const Element& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (!a.ring_) return true;
  return a.ring_->has_polynomial_payload() ? a.poly_ == b.poly_ : a.scalar_ == b.scalar_;
}

Element operator+(const Element& x, const Element& y) {
  require_same(x, y);
  const auto& r = *x.ring();
  if (r.has_polynomial_payload()) {
    return Element::from_poly(x.ring(), poly::add(x.poly(), y.poly(), r.coeffs(), r.order()));
  }
  return Element::from_int(x.ring(), x.scalar() + y.scalar());
}

Element operator-(const Element& x) {
  if (!x.ring()) throw Error(ErrorCode::InvalidRing, "element has no ring");
  const auto& r = *x.ring();
  if (r.has_polynomial_payload()) return Element::from_poly(x.ring(), poly::neg(x.poly(), r.coeffs()));
  return Element::from_int(x.ring(), -x.scalar());
}

Element operator-(const Element& x, const Element& y) {
  require_same(x, y);
  return x + (-y);
}

Element operator*(const Element& x, const Element& y) {
  require_same(x, y);
  const auto& r = *x.ring();
  if (r.has_polynomial_payload()) {
    return Element::from_poly(x.ring(), poly::mul(x.poly(), y.poly(), r.coeffs(), r.order()));
  }
  return Element::from_int(x.ring(), x.scalar() * y.scalar());
}

Element pow(const Element& x, unsigned long e) {
  Element result = Element::one(x.ring());
  Element base = x;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Element ring_arith(ArithOp op, const Element& x, const std::optional<Element>& y) {
  if (op == ArithOp::Neg) return -x;
  if (!y) throw Error(ErrorCode::BadSpec, "binary ring operation needs two operands");
  switch (op) {
    case ArithOp::Add: return x + *y;
    case ArithOp::Sub: return x - *y;
    case ArithOp::Mul: return x * *y;
    case ArithOp::Neg: break;
  }
  return -x;
}

Element normal_form(const Element& x) {
  if (!x.ring() || x.ring()->kind() != RingKind::Quotient) {
    throw Error(ErrorCode::InvalidRing, "normal_form needs a quotient-ring element");
  }
  return Element::from_poly(x.ring(), x.poly());
}

Element to_quotient(const RingHandle& quot, const Element& p) {
  if (!quot || quot->kind() != RingKind::Quotient) throw Error(ErrorCode::InvalidRing, "not a quotient ring");
  if (!same_ring(quot->base(), p.ring())) {
    throw Error(ErrorCode::MixedRings, "element is not in the quotient's polynomial ring");
  }
  return Element::from_poly(quot, p.poly());
}

bool is_canonical(const Element& x) {
  if (!x.ring()) return false;
  const auto& r = *x.ring();
  switch (r.kind()) {
    case RingKind::Integers:
      return true;
    case RingKind::Modular:
      return x.scalar() >= 0 && x.scalar() < r.modulus();
    case RingKind::Polynomial:
      return poly::is_canonical(x.poly(), r.coeffs(), r.order());
    case RingKind::Quotient: {
      if (!poly::is_canonical(x.poly(), r.coeffs(), r.order())) return false;
      const auto& lead = r.relation().front().mono;
      return std::none_of(x.poly().begin(), x.poly().end(),
                          [&](const Term& t) { return divides(lead, t.mono); });
    }
  }
  return false;
}

UnitResult is_unit(const Element& x) {
  if (!x.ring()) throw Error(ErrorCode::InvalidRing, "element has no ring");
  const auto& r = *x.ring();
  switch (r.kind()) {
    case RingKind::Integers:
      if (x.scalar() == 1 || x.scalar() == -1) return verified(x, x);
      return {UnitStatus::No, std::nullopt};
    case RingKind::Modular: {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), x.scalar().get_mpz_t(), r.modulus().get_mpz_t()) == 0) {
        return {UnitStatus::No, std::nullopt};
      }
      return verified(x, Element::from_int(x.ring(), inv));
    }
    case RingKind::Polynomial: {
      // f is a unit iff its constant term is a unit of the coefficient ring
      // and every other coefficient is nilpotent.
      const Monomial zero(r.variables().size(), 0);
      mpz_class c0 = 0;
      Poly rest;
      for (const auto& t : x.poly()) {
        if (t.mono == zero) c0 = t.coeff;
        else rest.push_back(t);
      }
      auto u = is_unit(Element::from_int(r.base(), c0));
      if (u.status != UnitStatus::Yes) return {UnitStatus::No, std::nullopt};
      if (rest.empty()) return verified(x, Element::from_int(x.ring(), u.inverse->scalar()));
      if (!r.coeffs().is_modular()) return {UnitStatus::No, std::nullopt};
      for (const auto& t : rest) {
        if (!is_nilpotent_mod(t.coeff, r.coeffs().modulus())) return {UnitStatus::No, std::nullopt};
      }
      // f = u + n with n nilpotent: f^{-1} = u^{-1} * sum_k (-n u^{-1})^k.
      const Element uinv = Element::from_int(x.ring(), u.inverse->scalar());
      const Element step = -(Element::from_poly(x.ring(), rest) * uinv);
      Element term = Element::one(x.ring());
      Element sum = Element::zero(x.ring());
      for (int k = 0; k < 4096 && !term.is_zero(); ++k) {
        sum = sum + term;
        term = term * step;
      }
      if (!term.is_zero()) return {UnitStatus::Unknown, std::nullopt};
      return verified(x, uinv * sum);
    }
    case RingKind::Quotient: {
      if (x.is_constant()) {
        auto u = is_unit(Element::from_int(r.base()->base(), x.constant_value()));
        if (u.status == UnitStatus::Yes) {
          return verified(x, Element::from_int(x.ring(), u.inverse->constant_value()));
        }
      }
      auto card = r.cardinality();
      if (card && *card <= kUnitSearchLimit) {
        for (const auto& y : enumerate_elements(x.ring(), kUnitSearchLimit)) {
          if ((x * y).is_one()) return {UnitStatus::Yes, y};
        }
        return {UnitStatus::No, std::nullopt};
      }
      return {UnitStatus::Unknown, std::nullopt};
    }
  }
  return {UnitStatus::Unknown, std::nullopt};
}

std::vector<Element> enumerate_elements(const RingHandle& ring, std::size_t budget) {
  auto card = ring ? ring->cardinality() : std::nullopt;
  if (!card) throw Error(ErrorCode::NotFinite, "ring is not finite or not enumerable: " + (ring ? ring->key() : "null"));
  if (*card > budget) {
    throw Error(ErrorCode::BudgetExceeded, "ring has " + card->get_str() + " elements, budget " + std::to_string(budget));
  }
  const std::size_t n = card->get_ui();
  std::vector<Element> out;
  out.reserve(n);
  if (ring->kind() == RingKind::Modular) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(Element::from_int(ring, static_cast<long>(i)));
    return out;
  }
  // Univariate quotient over Z/m: all polynomials of degree below the
  // relation's degree, in base-m digit order (constant term least significant).
  const unsigned long m = ring->coeffs().modulus().get_ui();
  const std::uint32_t degree = ring->relation().front().mono[0];
  for (std::size_t idx = 0; idx < n; ++idx) {
    Poly p;
    std::size_t rest = idx;
    for (std::uint32_t d = 0; d < degree; ++d) {
      auto c = static_cast<long>(rest % m);
      rest /= m;
      if (c != 0) p.push_back(Term{Monomial{d}, mpz_class(c)});
    }
    out.push_back(Element::from_poly(ring, std::move(p)));
  }
  return out;
}

}  // namespace wittkit
