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

}  // namespace

TEST_CASE("element strings round-trip") {
  const auto zx = polyring(z(), {"a", "b"});
  const auto q = s5();
  for (const auto& [ring, text] : std::vector<std::pair<RingHandle, std::string>>{
           {z(), "-123456789012345678901234567890"},
           {zmod(7), "6"},
           {zx, "-a^2*b+3*a-1"},
           {polyring(zmod(4), {"t"}), "3*t^2+2"},
           {q, "-x2*y2-x3*y3+1"}}) {
    CAPTURE(text);
    const Element e = Element::parse(ring, text);
    CHECK(e.to_string() == text);
    CHECK(Element::parse(ring, e.to_string()) == e);
  }
  CHECK(Element::parse(zmod(5), "-1").to_string() == "4");
  CHECK(Element::parse(zmod(5), "12").to_string() == "2");
}

TEST_CASE("quotient normal form") {
  const auto q = s5();
  CHECK(el(q, "x1*y1").to_string() == "-x2*y2-x3*y3+1");
  CHECK(el(q, "x1*y1+x2*y2+x3*y3").is_one());
  const auto base = q->base();
  CHECK(normal_form(to_quotient(q, el(base, "x1^2*y1^2"))).to_string() ==
        "x2^2*y2^2+2*x2*y2*x3*y3+x3^2*y3^2-2*x2*y2-2*x3*y3+1");
  CHECK(is_canonical(el(q, "x1*y1")));
  expect_error(ErrorCode::InvalidRing, [&] { normal_form(el(base, "x1")); });
}

TEST_CASE("ring axioms on random elements") {
  Random rnd(11);
  const std::vector<RingHandle> rings{z(), zmod(4), zmod(5), polyring(z(), {"a", "b", "c"}), polyring(zmod(6), {"t"}), s5()};
  for (const auto& r : rings) {
    CAPTURE(r->key());
    for (int trial = 0; trial < 40; ++trial) {
      Element x = rnd.element(r), y = rnd.element(r), w = rnd.element(r);
      if (r->kind() == RingKind::Quotient) {
        x = x * el(r, "x1") + el(r, "y2");
        y = y * el(r, "x1*y1");
      }
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + w == x + (y + w));
      CHECK((x * y) * w == x * (y * w));
      CHECK(x * (y + w) == x * y + x * w);
      CHECK(x - x == Element::zero(r));
      CHECK(x + (-x) == Element::zero(r));
      CHECK(x * Element::one(r) == x);
      CHECK(pow(x, 3) == x * x * x);
      CHECK(is_canonical(x * y));
    }
  }
}

TEST_CASE("ring_arith dispatch and mixed rings") {
  const auto r = zmod(6);
  CHECK(ring_arith(ArithOp::Add, el(r, "4"), el(r, "5")).to_string() == "3");
  CHECK(ring_arith(ArithOp::Mul, el(r, "4"), el(r, "5")).to_string() == "2");
  CHECK(ring_arith(ArithOp::Sub, el(r, "1"), el(r, "5")).to_string() == "2");
  CHECK(ring_arith(ArithOp::Neg, el(r, "1")).to_string() == "5");
  expect_error(ErrorCode::MixedRings, [&] { (void)(el(r, "1") + el(zmod(4), "1")); });
  expect_error(ErrorCode::BadSpec, [&] { ring_arith(ArithOp::Add, el(r, "1")); });
  // Equal descriptors describe the same ring even when built separately.
  CHECK(el(zmod(6), "1") + el(zmod(6), "1") == el(r, "2"));
}

TEST_CASE("invalid rings and parse failures") {
  expect_error(ErrorCode::InvalidRing, [] { Ring::modular(1); });
  expect_error(ErrorCode::InvalidRing, [] { Ring::polynomial(z(), {"x", "x"}); });
  expect_error(ErrorCode::InvalidRing, [] { Ring::polynomial(z(), {"1x"}); });
  const auto zx = polyring(z(), {"x"});
  expect_error(ErrorCode::InvalidRing, [&] { Ring::quotient(zx, el(zx, "2*x-1")); });
  expect_error(ErrorCode::ParseError, [&] { el(zx, "y"); });
  expect_error(ErrorCode::ParseError, [] { el(z(), "x"); });
}

TEST_CASE("unit decisions") {
  auto yes = [](const Element& e) {
    auto u = is_unit(e);
    return u.status == UnitStatus::Yes && u.inverse && (*u.inverse * e).is_one();
  };
  CHECK(yes(el(z(), "-1")));
  CHECK(is_unit(el(z(), "2")).status == UnitStatus::No);
  CHECK(yes(el(zmod(12), "5")));
  CHECK(is_unit(el(zmod(12), "4")).status == UnitStatus::No);
  const auto z4t = polyring(zmod(4), {"t"});
  CHECK(yes(el(z4t, "2*t+1")));
  CHECK(yes(el(z4t, "2*t^3+2*t+3")));
  CHECK(is_unit(el(z4t, "t+1")).status == UnitStatus::No);
  CHECK(is_unit(el(polyring(z(), {"x"}), "x")).status == UnitStatus::No);

  const auto f2t = polyring(zmod(2), {"t"});
  const auto f4 = Ring::quotient(f2t, el(f2t, "t^2+t+1"));
  CHECK(yes(el(f4, "t")));
  const auto f2e = Ring::quotient(f2t, el(f2t, "t^2"));
  CHECK(is_unit(el(f2e, "t")).status == UnitStatus::No);
  CHECK(yes(el(f2e, "t+1")));
  CHECK(is_unit(el(s5(), "x1")).status == UnitStatus::Unknown);
  CHECK(yes(el(s5(), "-1")));
}

TEST_CASE("finite enumeration") {
  CHECK(enumerate_elements(zmod(5)).size() == 5);
  const auto f2t = polyring(zmod(2), {"t"});
  const auto f4 = Ring::quotient(f2t, el(f2t, "t^2+t+1"));
  const auto all = enumerate_elements(f4);
  REQUIRE(all.size() == 4);
  CHECK(f4->cardinality() == mpz_class(4));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  expect_error(ErrorCode::NotFinite, [] { enumerate_elements(z()); });
  expect_error(ErrorCode::BudgetExceeded, [] { enumerate_elements(zmod(100), 10); });
  CHECK(zmod(7)->is_integral_domain());
  CHECK_FALSE(zmod(8)->is_integral_domain());
}
