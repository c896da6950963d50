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

TEST_CASE("determinant agrees with the Leibniz sum") {
  Random rnd(3);
  const std::vector<RingHandle> rings{z(), zmod(6), zmod(4), polyring(z(), {"a", "b"}), polyring(zmod(3), {"t"})};
  for (const auto& r : rings) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < (n <= 4 ? 6 : 2); ++trial) {
        const Matrix a = rnd.matrix(r, n, n);
        CAPTURE(r->key());
        CAPTURE(n);
        CHECK(det(a) == leibniz_det(a));
      }
    }
  }
  CHECK(det(Matrix(z(), 0, 0)).is_one());
}

TEST_CASE("characteristic polynomial coefficients") {
  const auto r = z();
  const Matrix a = Matrix::from_ints(r, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  const auto p = characteristic_polynomial(a);
  // det(tI - A) = t^3 - 9 t^2 + 24 t - 18
  REQUIRE(p.size() == 4);
  CHECK(p[0].is_one());
  CHECK(p[1].to_string() == "-9");
  CHECK(p[2].to_string() == "24");
  CHECK(p[3].to_string() == "-18");
}

TEST_CASE("adjugate and inverse") {
  Random rnd(5);
  for (const auto& r : {z(), zmod(9), polyring(z(), {"a", "b"})}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const Matrix a = rnd.matrix(r, n, n);
      const Matrix id = Matrix::identity(r, n);
      CHECK(a * adjugate(a) == scalar_mul(det(a), id));
      CHECK(adjugate(a) * a == scalar_mul(det(a), id));
    }
    const Matrix e = rnd.elementary_product(r, 4, 6);
    const Matrix inv = inverse(e);
    CHECK(is_identity(e * inv));
    CHECK(is_identity(inv * e));
  }

  const auto f5 = zmod(5);
  const Matrix m = Matrix::from_ints(f5, {{0, 2}, {-2, 0}});
  CHECK(inverse(m) == Matrix::from_ints(f5, {{0, 2}, {3, 0}}));
  CHECK(inverse(m, el(f5, "4")) == Matrix::from_ints(f5, {{0, 2}, {3, 0}}));
  expect_error(ErrorCode::BadCertificate, [&] { inverse(m, el(f5, "2")); });
  expect_error(ErrorCode::NotInvertible, [&] { inverse(Matrix::from_ints(z(), {{2, 0}, {0, 1}})); });
  expect_error(ErrorCode::NotSquare, [&] { det(Matrix(z(), 2, 3)); });
}

TEST_CASE("matrix composition and shape errors") {
  const auto r = z();
  const Matrix a = Matrix::from_ints(r, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_ints(r, {{0, 1}, {1, 0}});
  CHECK(mat_compose(MatOp::Mul, a, b) == Matrix::from_ints(r, {{2, 1}, {4, 3}}));
  CHECK(mat_compose(MatOp::Add, a, b) == Matrix::from_ints(r, {{1, 3}, {4, 4}}));
  CHECK(mat_compose(MatOp::Transpose, a) == Matrix::from_ints(r, {{1, 3}, {2, 4}}));
  CHECK(mat_compose(MatOp::ScalarMul, a, Matrix::from_ints(r, {{-1}})) == -a);
  const Matrix d = mat_compose(MatOp::DirectSum, a, Matrix::from_ints(r, {{5}}));
  CHECK(d == Matrix::from_ints(r, {{1, 2, 0}, {3, 4, 0}, {0, 0, 5}}));
  CHECK(det(d) == det(a) * el(r, "5"));
  expect_error(ErrorCode::ShapeMismatch, [&] { (void)(a * Matrix(r, 3, 1)); });
  expect_error(ErrorCode::ShapeMismatch, [&] { (void)(a + Matrix(r, 2, 1)); });
  expect_error(ErrorCode::MixedRings, [&] { (void)(a * Matrix::identity(zmod(3), 2)); });
  expect_error(ErrorCode::ShapeMismatch, [&] { Matrix::from_rows(r, {{el(r, "1")}, {}}); });
}

TEST_CASE("generators") {
  Random rnd(8);
  const auto r = zmod(7);
  const Matrix e = build_generator(Elementary{0, 2, el(r, "3")}, 3, r);
  CHECK(e == Matrix::from_ints(r, {{1, 0, 3}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(det(e).is_one());
  expect_error(ErrorCode::BadSpec, [&] { build_generator(Elementary{1, 1, el(r, "1")}, 3, r); });
  expect_error(ErrorCode::BadSpec, [&] { build_generator(Elementary{0, 3, el(r, "1")}, 3, r); });

  const Matrix p = build_generator(Permutation{{1, 2, 0}, false}, 3, r);
  CHECK(p * Matrix::column_vector(r, els(r, {"1", "0", "0"})) == Matrix::column_vector(r, els(r, {"0", "1", "0"})));
  const Matrix odd = build_generator(Permutation{{1, 0, 2}, true}, 3, r);
  CHECK(det(odd).is_one());

  // Symplectic transvections preserve their form.
  const Matrix form = psi(r, 2).matrix();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Element> v;
    for (int k = 0; k < 4; ++k) v.push_back(rnd.element(r));
    const Matrix t = build_generator(Transvection{v, rnd.element(r), form}, 4, r);
    CHECK(transpose(t) * form * t == form);
  }
}

TEST_CASE("block swaps factor into elementary matrices") {
  for (const auto& r : {z(), zmod(2), zmod(3), polyring(z(), {"a"})}) {
    for (std::size_t a = 0; a <= 6; a += 2) {
      for (std::size_t b = 0; b <= 6; b += 2) {
        const Permutation swap = block_swap(a, b);
        const Matrix target = build_generator(swap, a + b, r);
        Matrix product = Matrix::identity(r, a + b);
        for (const auto& f : elementary_factorization(swap, r)) product = product * build_generator(f, a + b, r);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(product == target);
      }
    }
  }
  // Any determinant-one permutation factors, including products of cycles.
  const auto r = z();
  const Permutation p{{2, 0, 1, 4, 3, 6, 5}, false};
  Matrix product = Matrix::identity(r, 7);
  for (const auto& f : elementary_factorization(p, r)) product = product * build_generator(f, 7, r);
  CHECK(product == build_generator(p, 7, r));
  expect_error(ErrorCode::BadSpec, [&] { elementary_factorization(Permutation{{1, 0}, false}, r); });
}
