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

#include <set>

#include "support/oracles.hpp"
#include "wittkit/census.hpp"
#include "wittkit/error.hpp"
#include "wittkit/io.hpp"

using namespace wittkit;
using namespace wittkit::testing;

namespace {

CensusJob job_for(const RingHandle& r, ObjectKind kind, std::size_t n, GeneratorSet gens) {
  CensusJob job;
  job.ring = r;
  job.kind = kind;
  job.n = n;
  job.generators = gens;
  return job;
}

void check_partition(const CensusResult& res) {
  std::set<std::string> seen;
  std::size_t total = 0;
  for (std::size_t o = 0; o < res.orbits.size(); ++o) {
    const auto& orbit = res.orbits[o];
    REQUIRE_FALSE(orbit.members.empty());
    CHECK(orbit.members.front().key == orbit.rep_key);
    for (std::size_t m = 0; m < orbit.members.size(); ++m) {
      CHECK(seen.insert(orbit.members[m].key).second);
      CHECK(orbit.rep_key <= orbit.members[m].key);
      CHECK(res.orbit_of(orbit.members[m].key) == o);
      if (m > 0) CHECK(orbit.members[m - 1].key < orbit.members[m].key);
    }
    if (o > 0) CHECK(res.orbits[o - 1].rep_key < orbit.rep_key);
    total += orbit.size();
  }
  CHECK(total == res.object_count);
  CHECK(count_witness_failures(res) == 0);
}

}  // namespace

TEST_CASE("unimodular row censuses") {
  const auto um3 = orbit_bfs(job_for(zmod(2), ObjectKind::UnimodularRows, 3, GeneratorSet::E));
  CHECK(um3.object_count == 7);
  REQUIRE(um3.orbits.size() == 1);
  CHECK(um3.orbits[0].size() == 7);
  CHECK(um3.stabilization == "n/a");
  check_partition(um3);

  const auto um2 = orbit_bfs(job_for(zmod(4), ObjectKind::UnimodularRows, 2, GeneratorSet::E));
  CHECK(um2.object_count == 12);
  REQUIRE(um2.orbits.size() == 1);
  check_partition(um2);

  // Length 1: the units, each alone (no elementary matrices in size 1).
  const auto um1 = orbit_bfs(job_for(zmod(5), ObjectKind::UnimodularRows, 1, GeneratorSet::E));
  CHECK(um1.object_count == 4);
  CHECK(um1.orbits.size() == 4);
  check_partition(um1);

  // Um_2(Z/6) = Um_2(F2) x Um_2(F3): 3 * 8 rows.
  const auto um26 = orbit_bfs(job_for(zmod(6), ObjectKind::UnimodularRows, 2, GeneratorSet::SL));
  CHECK(um26.object_count == 24);
  CHECK(um26.orbits.size() == 1);
  check_partition(um26);
}

TEST_CASE("alternating form censuses") {
  const auto f2 = orbit_bfs(job_for(zmod(2), ObjectKind::AlternatingInvertible, 4, GeneratorSet::E));
  CHECK(f2.object_count == 28);
  REQUIRE(f2.orbits.size() == 1);
  CHECK(f2.orbits[0].pf->is_one());
  CHECK(f2.stabilization == "pf-separated");
  check_partition(f2);

  const auto f3 = orbit_bfs(job_for(zmod(3), ObjectKind::AlternatingInvertible, 4, GeneratorSet::SL));
  CHECK(f3.object_count == 468);
  REQUIRE(f3.orbits.size() == 2);
  CHECK(f3.orbits[0].size() == 234);
  CHECK(f3.orbits[0].pf != f3.orbits[1].pf);
  check_partition(f3);

  // Pfaffian is constant on every class.
  for (const auto& orbit : f3.orbits) {
    for (const auto& m : orbit.members) {
      Matrix mat(f3.job.ring, 4, 4, m.object);
      CHECK(pfaffian(AlternatingMatrix(mat)) == *orbit.pf);
    }
  }
}

TEST_CASE("stabilization up to the cap") {
  auto job = job_for(zmod(2), ObjectKind::AlternatingInvertible, 2, GeneratorSet::E);
  job.pf_shortcut = false;
  job.stab_cap = 1;
  const auto res = orbit_bfs(job);
  CHECK(res.stab_level_reached == 1);
  CHECK(res.stabilization == "cap");
  CHECK(res.orbits.size() == 1);
  REQUIRE(res.generators.size() == 2);
  check_partition(res);

  auto f3 = job_for(zmod(3), ObjectKind::AlternatingInvertible, 2, GeneratorSet::E);
  f3.pf_shortcut = false;
  f3.stab_cap = 1;
  const auto r3 = orbit_bfs(f3);
  CHECK(r3.orbits.size() == 2);
  CHECK(r3.stabilization == "cap");
  check_partition(r3);
}

TEST_CASE("symplectic generator families") {
  const auto f2 = zmod(2);
  auto job = job_for(f2, ObjectKind::AlternatingInvertible, 4, GeneratorSet::SpTransvection);
  // Sp_4(F2) has order 720.
  CHECK(generated_group_order(job, GeneratorSet::SpTransvection, 4) == 720);
  for (const auto& g : make_generators(job, GeneratorSet::SpTransvection, 4)) {
    CHECK(transpose(g.matrix) * psi(f2, 2).matrix() * g.matrix == psi(f2, 2).matrix());
  }
  for (const auto& g : make_generators(job, GeneratorSet::ESpClosure, 4)) {
    CHECK(transpose(g.matrix) * psi(f2, 2).matrix() * g.matrix == psi(f2, 2).matrix());
  }
  // Symplectic congruence fixes psi, so psi is alone in its class.
  const auto res = orbit_bfs(job);
  CHECK(res.object_count == 28);
  const auto k = res.orbit_of(object_key(psi(f2, 2).matrix().entries(), ObjectKind::AlternatingInvertible, 4));
  REQUIRE(k);
  CHECK(res.orbits[*k].size() == 1);
  check_partition(res);

  auto esp = job;
  esp.generators = GeneratorSet::ESpClosure;
  check_partition(orbit_bfs(esp));
}

TEST_CASE("group orders and orbit sizes") {
  const auto f2 = zmod(2);
  auto job = job_for(f2, ObjectKind::UnimodularRows, 3, GeneratorSet::E);
  const std::size_t sl3 = generated_group_order(job, GeneratorSet::E, 3);
  CHECK(sl3 == 168);
  CHECK(generated_group_order(job, GeneratorSet::SL, 3) == 168);
  CHECK(generated_group_order(job_for(zmod(3), ObjectKind::UnimodularRows, 2, GeneratorSet::SL), GeneratorSet::SL,
                              2) == 24);
  for (const auto& o : orbit_bfs(job).orbits) CHECK(sl3 % o.size() == 0);

  auto small = job;
  small.budget = 100;
  CHECK_THROWS_AS(generated_group_order(small, GeneratorSet::E, 3), Error);

}

TEST_CASE("results do not depend on the seed") {
  for (auto kind : {ObjectKind::UnimodularRows, ObjectKind::AlternatingInvertible}) {
    auto job = job_for(zmod(3), kind, kind == ObjectKind::UnimodularRows ? 3 : 4, GeneratorSet::E);
    const std::string base = io::dump(io::census_report(orbit_bfs(job)));
    for (std::uint64_t seed : {1ULL, 99ULL, 123456789ULL}) {
      job.seed = seed;
      const auto res = orbit_bfs(job);
      CHECK(io::dump(io::census_report(res)) == base);
      check_partition(res);
    }
  }
}

TEST_CASE("comparing generator families") {
  auto job = job_for(zmod(4), ObjectKind::UnimodularRows, 2, GeneratorSet::E);
  const auto same = compare_generator_sets(job, GeneratorSet::E, GeneratorSet::SL);
  CHECK(same.coincide);
  CHECK_FALSE(same.separating_key);

  auto alt = job_for(zmod(2), ObjectKind::AlternatingInvertible, 4, GeneratorSet::E);
  const auto diff = compare_generator_sets(alt, GeneratorSet::E, GeneratorSet::SpTransvection);
  CHECK_FALSE(diff.coincide);
  REQUIRE(diff.separating_key);
  CHECK(*diff.separating_key == diff.first.orbits[0].rep_key);
}

TEST_CASE("census errors") {
  CHECK_THROWS_AS(orbit_bfs(job_for(z(), ObjectKind::UnimodularRows, 2, GeneratorSet::E)), Error);
  auto odd = job_for(zmod(2), ObjectKind::AlternatingInvertible, 3, GeneratorSet::E);
  CHECK_THROWS_AS(orbit_bfs(odd), Error);
  auto tight = job_for(zmod(3), ObjectKind::AlternatingInvertible, 4, GeneratorSet::E);
  tight.budget = 50;
  try {
    orbit_bfs(tight);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  CHECK(generator_set_from_string("Sp") == GeneratorSet::SpTransvection);
  CHECK(generator_set_from_string("ESp") == GeneratorSet::ESpClosure);
  CHECK_THROWS_AS(generator_set_from_string("GL"), Error);
  CHECK_THROWS_AS(object_kind_from_string("cols"), Error);
}
