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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/vaserstein.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

enum class ObjectKind { UnimodularRows, AlternatingInvertible };

/// Generator families for orbit computations.
///  - E: all elementary matrices I + lambda E_ij, lambda != 0.
///  - SL: E plus unit diagonals diag(.., u, u^{-1}, ..); over finite
///    (hence semilocal) rings these generate SL_d.
///  - SpTransvection: x -> x + lambda psi(x, v) v over all v != 0,
///    lambda != 0, for the standard form psi_d (d even).
///  - ESpClosure: elementary matrices and products of two elementary
///    matrices that preserve psi_d.
enum class GeneratorSet { E, SL, SpTransvection, ESpClosure };

std::string_view to_string(ObjectKind k) noexcept;
std::string_view to_string(GeneratorSet g) noexcept;
ObjectKind object_kind_from_string(std::string_view s);
GeneratorSet generator_set_from_string(std::string_view s);

struct CensusJob {
  RingHandle ring;
  ObjectKind kind = ObjectKind::UnimodularRows;
  /// Row length, or matrix size (even) for alternating objects.
  std::size_t n = 0;
  GeneratorSet generators = GeneratorSet::E;
  /// Alternating objects only: classes are compared after adding psi_{2s}
  /// for s up to this cap.
  std::size_t stab_cap = 2;
  /// Bound on enumerated candidates and on states visited by any search.
  std::size_t budget = 1'000'000;
  /// Seeds the generator visiting order; results must not depend on it.
  std::uint64_t seed = 0;
  /// Bound on generator applications spent in stabilized searches. When it
  /// runs out, stabilization stops at the last completed level and the
  /// result says so ("budget").
  std::size_t stab_budget = 200'000;
  /// Every family acts by determinant-one congruences, which preserve the
  /// Pfaffian. With the shortcut on, stabilization stops once all classes
  /// have distinct Pfaffians and stabilized searches only look for classes
  /// sharing the Pfaffian of their root.
  bool pf_shortcut = true;
};

/// Entries of a row, or of a matrix in row-major order.
using CensusObject = std::vector<Element>;

/// A generator together with witness factors whose product reproduces it.
struct LabeledGenerator {
  Matrix matrix;
  std::vector<WitnessFactor> factors;
};

/// One step of a witness path: generator `index` of stabilization level `level`.
struct PathStep {
  std::size_t level = 0;
  std::size_t index = 0;
};

struct OrbitMember {
  std::string key;
  CensusObject object;
  /// Generators g_1, ..., g_k with member = rep * g_1 ... g_k (rows) or
  /// member perp psi = E^t (rep perp psi) E, E = g_1 ... g_k (forms).
  std::vector<PathStep> path;
};

struct Orbit {
  std::string rep_key;
  CensusObject rep;
  std::vector<OrbitMember> members;  // sorted by key; members[0] is the rep
  std::optional<Element> pf;         // alternating objects only
  std::size_t size() const { return members.size(); }
};

struct CensusResult {
  CensusJob job;
  std::size_t object_count = 0;
  std::vector<Orbit> orbits;  // sorted by representative key
  /// Generators per stabilization level (level 0 acts in dimension n).
  std::vector<std::vector<LabeledGenerator>> generators;
  /// Highest stabilization level actually searched.
  std::size_t stab_level_reached = 0;
  /// "pf-separated" when stabilization stopped because classes have
  /// distinct Pfaffians, "cap" when the cap was reached, "budget" when
  /// stab_budget ran out first, "n/a" for rows.
  std::string stabilization;
  std::map<std::string, std::size_t> orbit_index;

  /// Orbit index of an object key.
  std::optional<std::size_t> orbit_of(const std::string& key) const;
};

/// Group flag under which form-census witnesses verify: E for the E and
/// ESpClosure families (all factors elementary), SL otherwise.
GroupFlag witness_group(GeneratorSet set) noexcept;

/// Canonical serialization of an object; the canonical representative of an
/// orbit is its member with the least key.
std::string object_key(const CensusObject& obj, ObjectKind kind, std::size_t n);

/// Complete duplicate-free enumeration in key order. Rows are kept when a
/// section exists (exhaustive search); forms when the determinant is a unit.
std::vector<CensusObject> enumerate_objects(const CensusJob& job);

/// Instantiates a generator family in dimension `dim` over the job's ring.
std::vector<LabeledGenerator> make_generators(const CensusJob& job, GeneratorSet set, std::size_t dim);

/// Orbit partition under right multiplication (rows) or congruence (forms),
/// with deterministic representatives and replayable witness paths.
CensusResult orbit_bfs(const CensusJob& job);

/// The witness word certifying member ~ rep for a form census; stabilization
/// chosen so that every path level fits.
WitnessWord member_witness(const CensusResult& result, std::size_t orbit, std::size_t member);

/// Product g_1 ... g_k of a member's path, padded to the largest level used.
Matrix member_transform(const CensusResult& result, std::size_t orbit, std::size_t member);

/// Replays one witness path (row action or check_equiv_witness).
bool verify_member(const CensusResult& result, std::size_t orbit, std::size_t member);

/// Number of members whose witness fails to replay (0 for a sound census).
std::size_t count_witness_failures(const CensusResult& result);

struct GeneratorComparison {
  CensusResult first;
  CensusResult second;
  bool coincide = false;
  /// Least object whose orbits under the two families differ.
  std::optional<std::string> separating_key;
};

GeneratorComparison compare_generator_sets(const CensusJob& job, GeneratorSet a, GeneratorSet b);

/// Order of the matrix group generated by a family in dimension `dim`, by
/// closure. Throws BudgetExceeded when the group exceeds the job budget.
std::size_t generated_group_order(const CensusJob& job, GeneratorSet set, std::size_t dim);

}  // namespace wittkit
