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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wittkit/census.hpp"
#include "wittkit/error.hpp"
#include "wittkit/io.hpp"

namespace wittkit::cli {

namespace {

using io::Json;

struct Options {
  std::string ring;
  std::vector<std::string> matrices;
  std::string row;
  std::string witness;
  std::string orientation = "+1";
  std::size_t stab_cap = 2;
  std::size_t stab_budget = 200'000;
  std::size_t budget = 1'000'000;
  std::string format = "json";
  std::string out;
  std::string object = "umrows";
  std::size_t n = 0;
  std::vector<std::string> gens;
  std::uint64_t seed = 0;
  std::string group = "E";
  std::size_t cap = kDefaultSuslinCap;
  bool no_pf_shortcut = false;
  bool members = false;
};

Json load(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return io::parse_json(buf.str());
  }
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
    throw Error(ErrorCode::ParseError, "'" + arg + "' is neither a readable file nor inline JSON");
  }
  return io::parse_json(arg);
}

const std::string& nth_matrix(const Options& o, std::size_t i, const char* verb) {
  if (o.matrices.size() <= i) {
    throw Error(ErrorCode::BadSpec, std::string(verb) + " needs " + std::to_string(i + 1) + " --matrix input(s)");
  }
  return o.matrices[i];
}

const std::string& required(const std::string& value, const char* flag, const char* verb) {
  if (value.empty()) throw Error(ErrorCode::BadSpec, std::string(verb) + " needs " + flag);
  return value;
}

int parse_orientation(const std::string& s) {
  if (s == "+1" || s == "1") return 1;
  if (s == "-1") return -1;
  throw Error(ErrorCode::BadSpec, "orientation must be +1 or -1");
}

GroupFlag parse_group(const std::string& s) {
  if (s == "E") return GroupFlag::E;
  if (s == "SL") return GroupFlag::SL;
  throw Error(ErrorCode::BadSpec, "group must be E or SL");
}

Matrix load_matrix(const Options& o, std::size_t i, const char* verb) {
  const Json j = load(nth_matrix(o, i, verb));
  if (!o.ring.empty()) return io::matrix_from_json(j, io::ring_from_json(load(o.ring)));
  return io::matrix_from_json(j);
}

AlternatingMatrix load_alt(const Options& o, std::size_t i, const char* verb) {
  return AlternatingMatrix(load_matrix(o, i, verb));
}

std::optional<Element> unit_cert(const Element& x) {
  auto u = is_unit(x);
  if (u.status == UnitStatus::Yes) return u.inverse;
  return std::nullopt;
}

WittRep load_rep(const Options& o, std::size_t i, const char* verb) {
  AlternatingMatrix m = load_alt(o, i, verb);
  auto cert = unit_cert(pfaffian(m));
  return WittRep::make(std::move(m), parse_group(o.group), std::move(cert));
}

Json rep_json(const WittRep& r) {
  Json j;
  j["group"] = std::string(to_string(r.group));
  j["pf"] = pfaffian(r.rep).to_string();
  j["rep"] = io::alt_to_json(r.rep);
  return j;
}

CensusJob census_job(const Options& o, const char* verb) {
  CensusJob job;
  job.ring = io::ring_from_json(load(required(o.ring, "--ring", verb)));
  job.kind = object_kind_from_string(o.object);
  if (o.n == 0) throw Error(ErrorCode::BadSpec, std::string(verb) + " needs --n");
  job.n = o.n;
  job.stab_cap = o.stab_cap;
  job.stab_budget = o.stab_budget;
  job.budget = o.budget;
  job.seed = o.seed;
  job.pf_shortcut = !o.no_pf_shortcut;
  return job;
}

Json dispatch(const std::string& verb, const Options& o) {
  if (verb == "pf") {
    return Json{{"pf", pfaffian(load_alt(o, 0, "pf")).to_string()}};
  }
  if (verb == "det") {
    return Json{{"det", det(load_matrix(o, 0, "det")).to_string()}};
  }
  if (verb == "suslin") {
    auto [a, b] = io::raw_row_from_json(load(required(o.row, "--row", "suslin")));
    return io::matrix_to_json(suslin_matrix(a, b, o.cap));
  }
  if (verb == "vsymbol") {
    SymbolInput in{io::row_from_json(load(required(o.row, "--row", "vsymbol"))), parse_orientation(o.orientation)};
    return io::alt_to_json(vaserstein_symbol(in));
  }
  if (verb == "act") {
    SymbolInput in{io::row_from_json(load(required(o.row, "--row", "act"))), parse_orientation(o.orientation)};
    const Matrix phi = io::matrix_from_json(load(nth_matrix(o, 0, "act")), in.row.ring());
    return io::row_to_json(sl4_act(in, phi));
  }
  if (verb == "witt-add") {
    return rep_json(witt_add(load_rep(o, 0, "witt-add"), load_rep(o, 1, "witt-add")));
  }
  if (verb == "witt-neg") {
    return rep_json(witt_neg(load_rep(o, 0, "witt-neg")));
  }
  if (verb == "hyp") {
    return rep_json(hyperbolic(load_matrix(o, 0, "hyp")));
  }
  if (verb == "xi") {
    FreeTriple t{load_alt(o, 0, "xi"), load_alt(o, 1, "xi"), std::nullopt};
    if (o.matrices.size() > 2) t.alpha = load_matrix(o, 2, "xi");
    return rep_json(xi_triple(t));
  }
  if (verb == "verify-witness") {
    const AlternatingMatrix m = load_alt(o, 0, verb.c_str());
    const AlternatingMatrix n = load_alt(o, 1, verb.c_str());
    const WitnessWord w = io::witness_from_json(load(required(o.witness, "--witness", "verify-witness")), m.ring());
    const WitnessCheck c = check_equiv_witness(m, n, w, parse_group(o.group));
    if (!c.ok) {
      const Json locus = io::witness_check_to_json(c);
      throw Error(ErrorCode::BadWitness, "identity fails: " + locus.at("failure").dump());
    }
    return io::witness_check_to_json(c);
  }
  if (verb == "census") {
    CensusJob job = census_job(o, "census");
    if (o.gens.size() > 1) throw Error(ErrorCode::BadSpec, "census takes one --gens family");
    if (!o.gens.empty()) job.generators = generator_set_from_string(o.gens[0]);
    return io::census_report(orbit_bfs(job), o.members);
  }
  if (verb == "compare-gens") {
    CensusJob job = census_job(o, "compare-gens");
    if (o.gens.size() != 2) throw Error(ErrorCode::BadSpec, "compare-gens takes exactly two --gens families");
    return io::comparison_report(
        compare_generator_sets(job, generator_set_from_string(o.gens[0]), generator_set_from_string(o.gens[1])));
  }
  throw Error(ErrorCode::BadSpec, "unknown verb '" + verb + "'");
}

// ---- text tables ---------------------------------------------------------

bool is_grid(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& r) {
    return r.is_array() && std::all_of(r.begin(), r.end(), [](const Json& e) { return e.is_string(); });
  });
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_grid(const Json& grid, const std::string& indent, std::ostream& os) {
  std::size_t width = 0;
  for (const auto& r : grid)
    for (const auto& e : r) width = std::max(width, e.get<std::string>().size());
  for (const auto& r : grid) {
    os << indent;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const std::string s = r[k].get<std::string>();
      os << (k ? "  " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
}

void render(const Json& j, const std::string& indent, std::ostream& os);

void render_field(const std::string& key, const Json& v, const std::string& indent, std::ostream& os) {
  if (v.is_object() || is_grid(v) || (v.is_array() && !v.empty() && v[0].is_object())) {
    os << indent << key << ":\n";
    render(v, indent + "  ", os);
  } else if (v.is_array()) {
    os << indent << key << ": (";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << scalar_text(v[k]);
    os << ")\n";
  } else {
    os << indent << key << ": " << scalar_text(v) << '\n';
  }
}

void render(const Json& j, const std::string& indent, std::ostream& os) {
  if (is_grid(j)) {
    render_grid(j, indent, os);
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_field(k, v, indent, os);
  } else if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) render_field("[" + std::to_string(k + 1) + "]", j[k], indent, os);
  } else {
    os << indent << scalar_text(j) << '\n';
  }
}

std::string format_document(const Json& doc, const std::string& format) {
  if (format == "table") {
    std::ostringstream os;
    render(doc, "", os);
    return os.str();
  }
  return io::dump(doc);
}

std::string error_document(const std::string& code, const std::string& message) {
  Json j;
  j["error"] = Json{{"code", code}, {"message", message}};
  return j.dump() + "\n";
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations with alternating forms, unimodular rows and Witt groups", "wittkit"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<const char*, const char*>> verbs = {
      {"pf", "Pfaffian of an alternating matrix"},
      {"det", "determinant of a square matrix"},
      {"suslin", "Suslin matrix of a row and section"},
      {"vsymbol", "Vaserstein symbol of a length-3 unimodular row"},
      {"act", "SL4 action on a length-3 unimodular row"},
      {"witt-add", "orthogonal sum of two representatives"},
      {"witt-neg", "negative of a representative"},
      {"hyp", "hyperbolic form M^t psi M"},
      {"xi", "form attached to a free triple (g, f[, alpha])"},
      {"verify-witness", "check a witness word for M ~ N"},
      {"census", "orbit census over a finite ring"},
      {"compare-gens", "compare the orbit partitions of two generator families"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--ring", o.ring, "ring descriptor (file or inline JSON)");
    sub->add_option("--matrix", o.matrices, "matrix input (file or inline JSON); repeatable");
    sub->add_option("--row", o.row, "row input (file or inline JSON)");
    sub->add_option("--witness", o.witness, "witness word (file or inline JSON)");
    sub->add_option("--orientation", o.orientation, "+1 or -1");
    sub->add_option("--stab-cap", o.stab_cap, "stabilization cap for form censuses");
    sub->add_option("--stab-budget", o.stab_budget, "generator applications allowed while stabilizing");
    sub->add_option("--budget", o.budget, "search budget");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", o.out, "write the output document to this file");
    sub->add_option("--object", o.object, "census objects: umrows or alt");
    sub->add_option("--n", o.n, "row length or matrix size");
    sub->add_option("--gens", o.gens, "generator family: E, SL, Sp-transvection, ESp-closure");
    sub->add_option("--seed", o.seed, "generator order seed");
    sub->add_option("--group", o.group, "E or SL");
    sub->add_option("--cap", o.cap, "largest n accepted by suslin");
    sub->add_flag("--no-pf-shortcut", o.no_pf_shortcut, "stabilize up to the cap even when Pfaffians separate");
    sub->add_flag("--members", o.members, "list orbit members with their witnesses");
  }

  CommandResult result;
  std::vector<std::string> argv_store{"wittkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    result.out = out.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = 2;
    result.err = error_document("Usage", e.what());
    return result;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    const std::string doc = format_document(dispatch(verb, o), o.format);
    if (!o.out.empty()) {
      std::ofstream f(o.out, std::ios::binary);
      if (!f || !(f << doc)) throw Error(ErrorCode::BadSpec, "cannot write " + o.out);
    } else {
      result.out = doc;
    }
  } catch (const Error& e) {
    result.status = is_domain_error(e.code()) ? 1 : 2;
    result.err = error_document(std::string(to_string(e.code())), e.what());
  }
  return result;
}

}  // namespace wittkit::cli
