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

#include "wittkit/io.hpp"

#include <algorithm>

#include "wittkit/error.hpp"

namespace wittkit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<Element> elements_from(const Json& j, const RingHandle& ring, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<Element> out;
  for (const auto& e : j) out.push_back(Element::parse(ring, string_of(e, what)));
  return out;
}

Json elements_to(const std::vector<Element>& v) {
  Json arr = Json::array();
  for (const auto& e : v) arr.push_back(e.to_string());
  return arr;
}

Json object_json(const CensusObject& obj, const CensusJob& job) {
  if (job.kind == ObjectKind::UnimodularRows) return elements_to(obj);
  Json rows = Json::array();
  for (std::size_t i = 0; i < job.n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < job.n; ++j) row.push_back(obj[i * job.n + j].to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_array() || e.is_object(); });
}

void dump_to(const Json& j, std::size_t depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  if (flat(j)) {
    out += j.dump();
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      dump_to(j[k], depth + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + "]";
  } else if (j.empty()) {
    out += "{}";
  } else {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      dump_to(value, depth + 1, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + "}";
  }
}

const char* generated_by(GeneratorSet g) {
  switch (g) {
    case GeneratorSet::E: return "elementary";
    case GeneratorSet::SL: return "elementary+unit-diagonal";
    case GeneratorSet::SpTransvection: return "transvection-generated";
    case GeneratorSet::ESpClosure: return "elementary-symplectic";
  }
  return "";
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_to(j, 0, out);
  out += '\n';
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json ring_to_json(const RingHandle& ring) { return Json::parse(ring->key()); }

RingHandle ring_from_json(const Json& j) {
  const std::string kind = string_of(field(j, "kind"), "kind");
  if (kind == "int") return Ring::integers();
  if (kind == "mod") {
    const Json& m = field(j, "m");
    if (m.is_number_integer()) return Ring::modular(mpz_class(std::to_string(m.get<long long>())));
    if (m.is_string()) {
      try {
        return Ring::modular(mpz_class(m.get<std::string>(), 10));
      } catch (const std::invalid_argument&) {
        bad("modulus is not an integer");
      }
    }
    bad("modulus must be an integer");
  }
  if (kind == "poly") {
    RingHandle base = ring_from_json(field(j, "base"));
    const Json& vars = field(j, "vars");
    if (!vars.is_array()) bad("vars must be an array");
    std::vector<std::string> names;
    for (const auto& v : vars) names.push_back(string_of(v, "variable"));
    MonomialOrder order = MonomialOrder::Grlex;
    if (j.contains("order")) {
      const std::string o = string_of(j.at("order"), "order");
      if (o == "grlex") order = MonomialOrder::Grlex;
      else if (o == "lex") order = MonomialOrder::Lex;
      else bad("unknown monomial order '" + o + "'");
    }
    return Ring::polynomial(base, std::move(names), order);
  }
  if (kind == "quot") {
    RingHandle base = ring_from_json(field(j, "base"));
    return Ring::quotient(base, Element::parse(base, string_of(field(j, "relation"), "relation")));
  }
  bad("unknown ring kind '" + kind + "'");
}

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["ring"] = ring_to_json(m.ring());
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(elements_to(m.row(i)));
  j["rows"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const Json& j) { return matrix_from_json(j, ring_from_json(field(j, "ring"))); }

Matrix matrix_from_json(const Json& j, const RingHandle& ring) {
  if (j.contains("ring") && !same_ring(ring_from_json(j.at("ring")), ring)) {
    throw Error(ErrorCode::MixedRings, "matrix ring differs from the expected ring");
  }
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) bad("rows must be an array");
  std::vector<std::vector<Element>> parsed;
  for (const auto& r : rows) parsed.push_back(elements_from(r, ring, "matrix entry"));
  return Matrix::from_rows(ring, parsed);
}

Json alt_to_json(const AlternatingMatrix& m) {
  Json j = matrix_to_json(m.matrix());
  j["alternating"] = true;
  return j;
}

AlternatingMatrix alt_from_json(const Json& j) { return AlternatingMatrix(matrix_from_json(j)); }

Json row_to_json(const UnimodularRow& r) {
  Json j;
  j["ring"] = ring_to_json(r.ring());
  j["a"] = elements_to(r.a());
  j["b"] = elements_to(r.b());
  return j;
}

std::pair<std::vector<Element>, std::vector<Element>> raw_row_from_json(const Json& j, RingHandle* ring_out) {
  RingHandle ring = ring_from_json(field(j, "ring"));
  auto a = elements_from(field(j, "a"), ring, "row entry");
  auto b = elements_from(field(j, "b"), ring, "section entry");
  if (ring_out) *ring_out = ring;
  return {std::move(a), std::move(b)};
}

UnimodularRow row_from_json(const Json& j) {
  RingHandle ring;
  auto [a, b] = raw_row_from_json(j, &ring);
  return UnimodularRow::make(ring, std::move(a), std::move(b));
}

Json witness_to_json(const WitnessWord& w) {
  Json j;
  j["s"] = w.stabilization;
  Json factors = Json::array();
  for (const auto& f : w.factors) {
    Json entry;
    if (const auto* e = std::get_if<Elementary>(&f)) {
      entry["elem"] = Json::array({e->row + 1, e->col + 1, e->lambda.to_string()});
    } else {
      entry["sl"] = matrix_to_json(std::get<Matrix>(f));
    }
    factors.push_back(std::move(entry));
  }
  j["factors"] = std::move(factors);
  return j;
}

WitnessWord witness_from_json(const Json& j, const RingHandle& ring) {
  WitnessWord w;
  const Json& s = field(j, "s");
  if (!s.is_number_unsigned()) bad("s must be a nonnegative integer");
  w.stabilization = s.get<std::size_t>();
  const Json& factors = field(j, "factors");
  if (!factors.is_array()) bad("factors must be an array");
  for (const auto& f : factors) {
    if (f.contains("elem")) {
      const Json& e = f.at("elem");
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        bad("elem factor must be [i, j, \"lambda\"]");
      }
      const auto i = e[0].get<std::size_t>();
      const auto k = e[1].get<std::size_t>();
      if (i == 0 || k == 0) bad("elem indices are 1-based");
      w.factors.emplace_back(Elementary{i - 1, k - 1, Element::parse(ring, string_of(e[2], "elem parameter"))});
    } else if (f.contains("sl")) {
      w.factors.emplace_back(matrix_from_json(f.at("sl"), ring));
    } else {
      bad("witness factor must be {\"elem\":...} or {\"sl\":...}");
    }
  }
  return w;
}

Json witness_check_to_json(const WitnessCheck& c) {
  Json j;
  j["ok"] = c.ok;
  if (!c.ok && c.entry) {
    Json locus;
    locus["entry"] = Json::array({c.entry->first, c.entry->second});
    locus["lhs"] = c.lhs_value;
    locus["rhs"] = c.rhs_value;
    j["failure"] = std::move(locus);
  }
  return j;
}

Json eta_to_json(const EtaValue& e) {
  Json j;
  j["size"] = e.plus.size();
  j["plus"] = alt_to_json(e.plus);
  j["minus"] = alt_to_json(e.minus);
  j["zero"] = e.zero;
  return j;
}

EtaValue eta_from_json(const Json& j) {
  AlternatingMatrix plus = alt_from_json(field(j, "plus"));
  AlternatingMatrix minus = alt_from_json(field(j, "minus"));
  if (plus.size() != minus.size()) throw Error(ErrorCode::ShapeMismatch, "eta components differ in size");
  const Json& zero = field(j, "zero");
  if (!zero.is_boolean()) bad("zero must be a boolean");
  return EtaValue{std::move(plus), std::move(minus), zero.get<bool>()};
}

Json census_job_to_json(const CensusJob& job) {
  Json j;
  j["ring"] = ring_to_json(job.ring);
  j["object"] = std::string(to_string(job.kind));
  j["n"] = job.n;
  j["generator_set"] = std::string(to_string(job.generators));
  j["stab_cap"] = job.stab_cap;
  j["stab_budget"] = job.stab_budget;
  j["budget"] = job.budget;
  return j;
}

Json census_report(const CensusResult& r, bool members) {
  Json j;
  j["job"] = census_job_to_json(r.job);
  j["label"] = "observation";
  j["generated_by"] = generated_by(r.job.generators);
  j["object_count"] = r.object_count;
  j["orbit_count"] = r.orbits.size();
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    Json entry;
    entry["size"] = o.size();
    entry["rep"] = object_json(o.rep, r.job);
    if (o.pf) entry["pf"] = o.pf->to_string();
    if (members) {
      const std::size_t oi = static_cast<std::size_t>(&o - r.orbits.data());
      Json list = Json::array();
      for (std::size_t mi = 0; mi < o.members.size(); ++mi) {
        Json m;
        m["object"] = object_json(o.members[mi].object, r.job);
        if (r.job.kind == ObjectKind::UnimodularRows) {
          m["transform"] = matrix_to_json(member_transform(r, oi, mi));
        } else {
          m["witness"] = witness_to_json(member_witness(r, oi, mi));
        }
        list.push_back(std::move(m));
      }
      entry["members"] = std::move(list);
    }
    orbits.push_back(std::move(entry));
  }
  j["orbits"] = std::move(orbits);
  j["generator_set"] = std::string(to_string(r.job.generators));
  j["stab_cap"] = r.job.stab_cap;
  if (r.job.kind == ObjectKind::AlternatingInvertible) {
    j["stab_level_reached"] = r.stab_level_reached;
    j["stabilization"] = r.stabilization;
  }
  return j;
}

Json comparison_report(const GeneratorComparison& c) {
  Json j;
  j["coincide"] = c.coincide;
  j["separating_object"] = c.separating_key ? Json(parse_json(*c.separating_key)) : Json(nullptr);
  j["first"] = census_report(c.first);
  j["second"] = census_report(c.second);
  return j;
}

}  // namespace wittkit::io
