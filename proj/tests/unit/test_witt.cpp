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

#include <doctest.h>

#include "support/oracles.hpp"
#include "wittkit/error.hpp"
#include "wittkit/witt.hpp"

using namespace wittkit;
using namespace wittkit::testing;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

/// Random alternating form with unit Pfaffian: a random congruence of psi by
/// an elementary product, times a unit on one block.
AlternatingMatrix random_invertible(Random& rnd, const RingHandle& r, std::size_t n) {
  AlternatingMatrix m = congruence(rnd.elementary_product(r, n, 6), psi(r, n / 2));
  if (r->kind() == RingKind::Modular && rnd.coin()) {
    const auto units = [&] {
      std::vector<Element> u;
      for (const auto& e : enumerate_elements(r))
        if (is_unit(e).status == UnitStatus::Yes) u.push_back(e);
      return u;
    }();
    Matrix d = Matrix::identity(r, n);
    d.set(0, 0, units[rnd.index(units.size())]);
    m = congruence(d, m);
  }
  return m;
}

}  // namespace

TEST_CASE("witt_neg worked example and Pfaffian law") {
  const auto f5 = zmod(5);
  const auto x = WittRep::make(AlternatingMatrix(Matrix::from_ints(f5, {{0, 2}, {-2, 0}})), GroupFlag::E);
  const auto y = witt_neg(x);
  CHECK(y.rep.matrix() == Matrix::from_ints(f5, {{0, 3}, {-3, 0}}));
  CHECK((pfaffian(y.rep) * pfaffian(x.rep)).is_one());

  Random rnd(77);
  for (const auto& r : {zmod(2), zmod(3), zmod(5), zmod(4), z()}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = random_invertible(rnd, r, 2 * (1 + rnd.index(3)));
      const auto neg = witt_neg(WittRep::make(m, GroupFlag::E));
      CHECK((pfaffian(neg.rep) * pfaffian(m)).is_one());
      REQUIRE(neg.pf_unit_cert);
      CHECK((*neg.pf_unit_cert * pfaffian(neg.rep)).is_one());
    }
  }
  expect_error(ErrorCode::NotInvertible, [] {
    witt_neg(WittRep::make(AlternatingMatrix(Matrix::from_ints(z(), {{0, 2}, {-2, 0}})), GroupFlag::E));
  });
}

TEST_CASE("double negation over F2 is the identity") {
  Random rnd(78);
  const auto f2 = zmod(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_invertible(rnd, f2, 4);
    CHECK(witt_neg(witt_neg(WittRep::make(m, GroupFlag::E))).rep == m);
  }
}

TEST_CASE("witt_add and certificates") {
  const auto f5 = zmod(5);
  const auto x = WittRep::make(AlternatingMatrix(Matrix::from_ints(f5, {{0, 2}, {-2, 0}})), GroupFlag::E,
                               el(f5, "3"));
  const auto y = WittRep::make(psi(f5, 1), GroupFlag::E);
  const auto s = witt_add(x, y);
  CHECK(s.rep == perp(x.rep, y.rep));
  CHECK(pfaffian(s.rep).to_string() == "2");
  CHECK_FALSE(s.in_pfaffian_kernel());
  CHECK(y.in_pfaffian_kernel());
  expect_error(ErrorCode::BadCertificate,
               [&] { WittRep::make(psi(f5, 1), GroupFlag::E, el(f5, "2")); });
  expect_error(ErrorCode::MixedRings, [&] { witt_add(x, WittRep::make(psi(f5, 1), GroupFlag::SL)); });
  expect_error(ErrorCode::MixedRings, [&] { witt_add(x, WittRep::make(psi(zmod(7), 1), GroupFlag::E)); });
}

TEST_CASE("commutativity witnesses verify") {
  Random rnd(79);
  for (const auto& r : {z(), zmod(2), zmod(3), polyring(z(), {"a", "b"})}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto x = WittRep::make(rnd.alternating(r, 2 * (1 + rnd.index(3))), GroupFlag::E);
      const auto y = WittRep::make(rnd.alternating(r, 2 * (1 + rnd.index(2))), GroupFlag::E);
      const auto w = commutativity_witness(x, y);
      const auto c = check_equiv_witness(witt_add(x, y).rep, witt_add(y, x).rep, w, GroupFlag::E);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("witness failures report a locus") {
  const auto r = z();
  const AlternatingMatrix m(Matrix::from_ints(r, {{0, 1}, {-1, 0}}));
  const AlternatingMatrix n(Matrix::from_ints(r, {{0, -1}, {1, 0}}));
  WitnessWord w;
  const auto c = check_equiv_witness(m, n, w, GroupFlag::E);
  CHECK_FALSE(c.ok);
  REQUIRE(c.entry);
  CHECK(c.entry->first == 1);
  CHECK(c.entry->second == 2);
  CHECK(c.lhs_value == "1");
  CHECK(c.rhs_value == "-1");

  // diag(1, -1) is not elementary-shaped but has determinant -1; diag(-1,-1)
  // is a valid SL factor carrying psi to itself.
  WitnessWord sl;
  sl.factors.emplace_back(Matrix::from_ints(r, {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(check_equiv_witness(m, m, sl, GroupFlag::SL).ok);
  expect_error(ErrorCode::BadWitness, [&] { check_equiv_witness(m, m, sl, GroupFlag::E); });
  WitnessWord bad_det;
  bad_det.factors.emplace_back(Matrix::from_ints(r, {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  expect_error(ErrorCode::BadWitness, [&] { check_equiv_witness(m, m, bad_det, GroupFlag::SL); });
  WitnessWord too_big;
  too_big.factors.emplace_back(Elementary{0, 7, el(r, "1")});
  expect_error(ErrorCode::BadWitness, [&] { check_equiv_witness(m, m, too_big, GroupFlag::E); });
}

TEST_CASE("inverse words undo the witness") {
  Random rnd(80);
  const auto r = zmod(3);
  WitnessWord w;
  w.stabilization = 1;
  for (int k = 0; k < 5; ++k) {
    const std::size_t i = rnd.index(6);
    std::size_t j = rnd.index(5);
    if (j >= i) ++j;
    w.factors.emplace_back(Elementary{i, j, el(r, std::to_string(1 + rnd.index(2)))});
  }
  w.factors.emplace_back(build_generator(Elementary{0, 1, el(r, "1")}, 6, r));
  const Matrix e = assemble_witness(w, r, 6);
  CHECK(is_identity(e * assemble_witness(inverse_word(w), r, 6)));

  // If m ~ n via w then n ~ m via the inverse word.
  WitnessWord ew{0, {Elementary{0, 1, el(r, "2")}, Elementary{1, 2, el(r, "1")}}};
  const AlternatingMatrix moved = congruence(assemble_witness(ew, r, 4), psi(r, 2));
  CHECK(check_equiv_witness(moved, psi(r, 2), ew, GroupFlag::E).ok);
  CHECK(check_equiv_witness(psi(r, 2), moved, inverse_word(ew), GroupFlag::E).ok);
}

TEST_CASE("hyperbolic, eta and xi") {
  const auto r = zmod(7);
  CHECK(hyperbolic(Matrix::identity(r, 4)).rep == psi(r, 2));
  Random rnd(81);
  const Matrix g = rnd.elementary_product(r, 4, 5);
  const auto h = hyperbolic(scalar_mul(el(r, "3"), g));
  CHECK(pfaffian(h.rep) == det(scalar_mul(el(r, "3"), g)));
  expect_error(ErrorCode::ShapeMismatch, [&] { hyperbolic(Matrix::identity(r, 3)); });
  expect_error(ErrorCode::BadCertificate, [&] { hyperbolic(Matrix::identity(r, 2), el(r, "2")); });

  CHECK(eta(psi(r, 2)).zero);
  const auto e = eta(h.rep);
  CHECK_FALSE(e.zero);
  CHECK(e.plus == h.rep);
  CHECK(e.minus == psi(r, 2));
  expect_error(ErrorCode::NotInvertible, [] {
    eta(AlternatingMatrix(Matrix::from_ints(z(), {{0, 2}, {-2, 0}})));
  });

  for (int trial = 0; trial < 10; ++trial) {
    const AlternatingMatrix f = congruence(rnd.elementary_product(r, 4, 6), psi(r, 2));
    const AlternatingMatrix gg = congruence(scalar_mul(el(r, "2"), rnd.elementary_product(r, 4, 6)), psi(r, 2));
    const auto xi = xi_triple(FreeTriple{gg, f, std::nullopt});
    CHECK(xi.rep.size() == 8);
    CHECK(pfaffian(xi.rep) * pfaffian(gg) == pfaffian(f));
    const Matrix alpha = rnd.elementary_product(r, 4, 4);
    const auto xa = xi_triple(FreeTriple{gg, f, alpha});
    CHECK(pfaffian(xa.rep) * pfaffian(congruence(alpha, gg)) == pfaffian(congruence(alpha, f)));
  }
  // The triple (psi, psi) maps to psi_2n perp sigma psi^{-1} sigma.
  const auto t = xi_triple(FreeTriple{psi(r, 1), psi(r, 1), std::nullopt});
  CHECK(t.rep.matrix() == Matrix::from_ints(r, {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
}
