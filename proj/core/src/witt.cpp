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

#include "wittkit/witt.hpp"

#include <string>

#include "wittkit/error.hpp"

namespace wittkit {

namespace {

std::optional<Element> unit_inverse(const Element& x) {
  auto u = is_unit(x);
  if (u.status == UnitStatus::Yes) return u.inverse;
  return std::nullopt;
}

Element require_pf_inverse(const WittRep& x) {
  if (x.pf_unit_cert) return *x.pf_unit_cert;
  const Element pf = pfaffian(x.rep);
  if (auto inv = unit_inverse(pf)) return *inv;
  throw Error(ErrorCode::NotInvertible, "Pfaffian " + pf.to_string() + " is not certified a unit");
}

}  // namespace

std::string_view to_string(GroupFlag g) noexcept { return g == GroupFlag::E ? "E" : "SL"; }

WittRep WittRep::make(AlternatingMatrix rep, GroupFlag group, std::optional<Element> pf_unit_cert) {
  if (pf_unit_cert && !(pfaffian(rep) * *pf_unit_cert).is_one()) {
    throw Error(ErrorCode::BadCertificate, "Pfaffian certificate does not invert the Pfaffian");
  }
  return WittRep{std::move(rep), group, std::move(pf_unit_cert)};
}

bool WittRep::in_pfaffian_kernel() const { return pfaffian(rep).is_one(); }

Matrix assemble_witness(const WitnessWord& w, const RingHandle& ring, std::size_t size) {
  Matrix e = Matrix::identity(ring, size);
  for (std::size_t k = 0; k < w.factors.size(); ++k) {
    const auto& f = w.factors[k];
    if (const auto* el = std::get_if<Elementary>(&f)) {
      if (el->row == el->col || el->row >= size || el->col >= size) {
        throw Error(ErrorCode::BadWitness, "factor " + std::to_string(k + 1) + ": elementary index outside size " +
                                               std::to_string(size));
      }
      if (!same_ring(el->lambda.ring(), ring)) {
        throw Error(ErrorCode::BadWitness, "factor " + std::to_string(k + 1) + ": parameter from a different ring");
      }
      e = e * build_generator(*el, size, ring);
    } else {
      const auto& m = std::get<Matrix>(f);
      if (m.rows() != size || m.cols() != size || !same_ring(m.ring(), ring)) {
        throw Error(ErrorCode::BadWitness, "factor " + std::to_string(k + 1) + ": explicit matrix must be " +
                                               std::to_string(size) + "x" + std::to_string(size));
      }
      e = e * m;
    }
  }
  return e;
}

WitnessWord inverse_word(const WitnessWord& w) {
  WitnessWord out;
  out.stabilization = w.stabilization;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    if (const auto* el = std::get_if<Elementary>(&*it)) {
      out.factors.emplace_back(Elementary{el->row, el->col, -el->lambda});
    } else {
      const auto& m = std::get<Matrix>(*it);
      out.factors.emplace_back(inverse(m, Element::one(m.ring())));
    }
  }
  return out;
}

WitnessCheck check_equiv_witness(const AlternatingMatrix& m, const AlternatingMatrix& n, const WitnessWord& w,
                                 GroupFlag group) {
  if (!same_ring(m.ring(), n.ring())) throw Error(ErrorCode::MixedRings, "forms belong to different rings");
  const auto& ring = m.ring();
  for (std::size_t k = 0; k < w.factors.size(); ++k) {
    const auto& f = w.factors[k];
    if (std::holds_alternative<Matrix>(f)) {
      if (group == GroupFlag::E) {
        throw Error(ErrorCode::BadWitness,
                    "factor " + std::to_string(k + 1) + ": E-witnesses may only contain elementary factors");
      }
      const auto& mat = std::get<Matrix>(f);
      if (mat.is_square() && !det(mat).is_one()) {
        throw Error(ErrorCode::BadWitness, "factor " + std::to_string(k + 1) + ": determinant is not 1");
      }
    }
  }
  const std::size_t a = m.size_half();
  const std::size_t b = n.size_half();
  const std::size_t s = w.stabilization;
  const std::size_t total = 2 * (a + b + s);
  const Matrix e = assemble_witness(w, ring, total);

  const Matrix lhs = stabilize(m, b + s).matrix();
  const Matrix rhs = transpose(e) * stabilize(n, a + s).matrix() * e;
  WitnessCheck out;
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (!(lhs(i, j) == rhs(i, j))) {
        out.entry = std::make_pair(i + 1, j + 1);
        out.lhs_value = lhs(i, j).to_string();
        out.rhs_value = rhs(i, j).to_string();
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

WittRep witt_add(const WittRep& x, const WittRep& y) {
  if (!same_ring(x.rep.ring(), y.rep.ring())) throw Error(ErrorCode::MixedRings, "Witt summands from different rings");
  if (x.group != y.group) throw Error(ErrorCode::MixedRings, "Witt summands carry different group flags");
  std::optional<Element> cert;
  if (x.pf_unit_cert && y.pf_unit_cert) cert = *x.pf_unit_cert * *y.pf_unit_cert;
  return WittRep{perp(x.rep, y.rep), x.group, std::move(cert)};
}

WittRep witt_neg(const WittRep& x) {
  const Element pf_inv = require_pf_inverse(x);
  const auto& ring = x.rep.ring();
  const Matrix inv = inverse(x.rep.matrix(), pf_inv * pf_inv);
  const Matrix s = sigma(ring, x.rep.size_half());
  AlternatingMatrix neg(s * inv * s);
  // Pf(sigma N^{-1} sigma) = Pf(N)^{-1}, so Pf(N) certifies the result.
  return WittRep::make(std::move(neg), x.group, pfaffian(x.rep));
}

WitnessWord commutativity_witness(const WittRep& x, const WittRep& y) {
  const auto& ring = x.rep.ring();
  const std::size_t r = x.rep.size();
  const std::size_t s = y.rep.size();
  WitnessWord w;
  w.stabilization = 0;
  for (auto& e : elementary_factorization(block_swap(r, s), ring)) w.factors.emplace_back(std::move(e));
  return w;
}

WittRep hyperbolic(const Matrix& m, const std::optional<Element>& det_inverse) {
  if (!m.is_square() || m.rows() % 2 != 0) {
    throw Error(ErrorCode::ShapeMismatch, "hyperbolic map needs a square matrix of even size");
  }
  AlternatingMatrix rep = congruence(m, psi(m.ring(), m.rows() / 2));
  std::optional<Element> cert;
  if (det_inverse) {
    if (!(det(m) * *det_inverse).is_one()) throw Error(ErrorCode::BadCertificate, "det * certificate != 1");
    cert = *det_inverse;
  } else {
    cert = unit_inverse(det(m));
  }
  return WittRep{std::move(rep), GroupFlag::E, std::move(cert)};
}

EtaValue eta(const AlternatingMatrix& m, const std::optional<Element>& pf_inverse) {
  const Element pf = pfaffian(m);
  if (pf_inverse) {
    if (!(pf * *pf_inverse).is_one()) throw Error(ErrorCode::BadCertificate, "Pf * certificate != 1");
  } else if (!unit_inverse(pf)) {
    throw Error(ErrorCode::NotInvertible, "Pfaffian " + pf.to_string() + " is not certified a unit");
  }
  AlternatingMatrix base = psi(m.ring(), m.size_half());
  const bool zero = m == base;
  return EtaValue{m, std::move(base), zero};
}

WittRep xi_triple(const FreeTriple& t) {
  if (t.g.size() != t.f.size()) throw Error(ErrorCode::ShapeMismatch, "triple forms differ in size");
  if (!same_ring(t.g.ring(), t.f.ring())) throw Error(ErrorCode::MixedRings, "triple forms from different rings");
  const auto& ring = t.g.ring();
  const std::size_t n = t.g.size_half();
  const Matrix alpha = t.alpha ? *t.alpha : Matrix::identity(ring, 2 * n);
  const AlternatingMatrix f2 = congruence(alpha, t.f);
  const AlternatingMatrix g2 = congruence(alpha, t.g);
  const Matrix s = sigma(ring, n);
  // sigma is symmetric, so the dual sigma^t is sigma itself.
  AlternatingMatrix tail(s * inverse(g2.matrix()) * transpose(s));
  AlternatingMatrix rep = perp(f2, tail);
  return WittRep{rep, GroupFlag::E, unit_inverse(pfaffian(rep))};
}

}  // namespace wittkit
