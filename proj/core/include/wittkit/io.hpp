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

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "wittkit/census.hpp"
#include "wittkit/vaserstein.hpp"
#include "wittkit/witt.hpp"

namespace wittkit::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; malformed input throws Error(ParseError).
Json parse_json(const std::string& text);

/// Indented JSON text in which arrays of scalars stay on one line (so matrix
/// rows read as rows). Deterministic; ends with a newline.
std::string dump(const Json& j);

// {"kind":"int"} | {"kind":"mod","m":4} |
// {"kind":"poly","base":...,"vars":[...],"order":"grlex"} |
// {"kind":"quot","base":...,"relation":"..."}
Json ring_to_json(const RingHandle& ring);
RingHandle ring_from_json(const Json& j);

// {"ring":<descriptor>,"rows":[["0","1"],["-1","0"]]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Matrix matrix_from_json(const Json& j, const RingHandle& ring);

/// Matrix JSON with "alternating":true; loading re-validates.
Json alt_to_json(const AlternatingMatrix& m);
AlternatingMatrix alt_from_json(const Json& j);

// {"ring":<descriptor>,"a":["0","0","1"],"b":["0","0","1"]}
Json row_to_json(const UnimodularRow& r);
UnimodularRow row_from_json(const Json& j);
/// The (a, b) pair without the unimodularity check, plus its ring.
std::pair<std::vector<Element>, std::vector<Element>> raw_row_from_json(const Json& j, RingHandle* ring_out = nullptr);

// {"s":1,"factors":[{"elem":[1,2,"lambda"]},{"sl":<matrix>}]}; indices 1-based.
Json witness_to_json(const WitnessWord& w);
WitnessWord witness_from_json(const Json& j, const RingHandle& ring);

Json witness_check_to_json(const WitnessCheck& c);

Json eta_to_json(const EtaValue& e);
EtaValue eta_from_json(const Json& j);

Json census_job_to_json(const CensusJob& job);
/// Report with stable field order; contains nothing that depends on the
/// job's seed. With `members`, every orbit lists its members together with
/// the transform (rows) or witness word (forms) linking them to the rep;
/// those paths do depend on the seed.
Json census_report(const CensusResult& r, bool members = false);
Json comparison_report(const GeneratorComparison& c);

}  // namespace wittkit::io
