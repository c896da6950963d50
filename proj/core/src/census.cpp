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

#include "wittkit/census.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "wittkit/error.hpp"

namespace wittkit {

namespace {

void budget_check(const mpz_class& count, std::size_t budget, const std::string& what) {
  if (count > budget) {
    throw Error(ErrorCode::BudgetExceeded, what + ": " + count.get_str() + " exceeds budget " + std::to_string(budget));
  }
}

std::vector<Element> ring_elements(const CensusJob& job) { return enumerate_elements(job.ring, job.budget); }

std::string matrix_key(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += '"' + m(i, j).to_string() + '"';
    }
    out += ']';
  }
  return out + "]";
}

// Odometer over R^len; calls visit(vector) until it returns false.
template <typename Visit>
void for_each_vector(const std::vector<Element>& elems, std::size_t len, Visit&& visit) {
  std::vector<std::size_t> idx(len, 0);
  std::vector<Element> v(len, elems.front());
  for (;;) {
    if (!visit(v)) return;
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++idx[k] < elems.size()) {
        v[k] = elems[idx[k]];
        break;
      }
      idx[k] = 0;
      v[k] = elems[0];
      if (k == 0) return;
    }
    if (len == 0) return;
  }
}

Matrix as_matrix(const CensusJob& job, const CensusObject& obj, std::size_t dim) {
  return Matrix(job.ring, dim, dim, obj);
}

/// A generator stored by columns, nonzero entries only.
struct SparseGenerator {
  std::vector<std::vector<std::pair<std::size_t, Element>>> cols;
};

SparseGenerator sparse(const Matrix& g) {
  SparseGenerator out;
  out.cols.resize(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j)
    for (std::size_t i = 0; i < g.rows(); ++i)
      if (!g(i, j).is_zero()) out.cols[j].emplace_back(i, g(i, j));
  return out;
}

Element sparse_dot(const std::vector<std::pair<std::size_t, Element>>& col,
                   const std::function<const Element&(std::size_t)>& x, const Element& zero) {
  Element acc = zero;
  for (const auto& [i, g] : col) {
    const Element& v = x(i);
    if (v.is_zero()) continue;
    acc = acc + (g.is_one() ? v : v * g);
  }
  return acc;
}

CensusObject act(const CensusJob& job, const CensusObject& obj, const SparseGenerator& g, std::size_t dim) {
  const Element zero = Element::zero(job.ring);
  if (job.kind == ObjectKind::UnimodularRows) {
    CensusObject out(dim);
    for (std::size_t j = 0; j < dim; ++j) out[j] = sparse_dot(g.cols[j], [&](std::size_t i) -> const Element& { return obj[i]; }, zero);
    return out;
  }
  // X = M G, then G^t X.
  CensusObject x(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t j = 0; j < dim; ++j)
      x[r * dim + j] = sparse_dot(g.cols[j], [&](std::size_t i) -> const Element& { return obj[r * dim + i]; }, zero);
  CensusObject out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out[i * dim + j] = sparse_dot(g.cols[i], [&](std::size_t k) -> const Element& { return x[k * dim + j]; }, zero);
  return out;
}

CensusObject stabilized(const CensusJob& job, const CensusObject& obj, std::size_t level) {
  const AlternatingMatrix m(as_matrix(job, obj, job.n));
  return stabilize(m, level).matrix().entries();
}

struct BfsTree {
  std::vector<CensusObject> states;
  std::vector<std::string> keys;
  std::vector<std::pair<long, std::size_t>> parent;  // (state index, generator index)
  std::unordered_map<std::string, std::size_t> index;

  std::vector<std::size_t> path(std::size_t s) const {
    std::vector<std::size_t> out;
    for (long cur = static_cast<long>(s); parent[static_cast<std::size_t>(cur)].first >= 0;
         cur = parent[static_cast<std::size_t>(cur)].first) {
      out.push_back(parent[static_cast<std::size_t>(cur)].second);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
};

struct SearchLimits {
  std::size_t* visited_total = nullptr;    // states, against job.budget
  std::size_t* applications = nullptr;     // generator applications, against job.stab_budget
  std::function<bool(const std::string&)> done;  // stop early once this returns true
};

struct OutOfStabBudget {};

BfsTree bfs(const CensusJob& job, const CensusObject& root, const std::vector<LabeledGenerator>& gens,
            std::size_t dim, std::size_t key_n, const SearchLimits& limits) {
  std::vector<SparseGenerator> sgens;
  sgens.reserve(gens.size());
  for (const auto& g : gens) sgens.push_back(sparse(g.matrix));
  BfsTree tree;
  bool finished = false;
  auto push = [&](CensusObject obj, long parent, std::size_t gen) {
    std::string key = object_key(obj, job.kind, key_n);
    if (tree.index.count(key)) return;
    if (++*limits.visited_total > job.budget) {
      throw Error(ErrorCode::BudgetExceeded, "orbit search visited more than " + std::to_string(job.budget) + " states");
    }
    tree.index.emplace(key, tree.states.size());
    tree.states.push_back(std::move(obj));
    tree.keys.push_back(std::move(key));
    tree.parent.emplace_back(parent, gen);
    if (limits.done && limits.done(tree.keys.back())) finished = true;
  };
  push(root, -1, 0);
  for (std::size_t head = 0; head < tree.states.size() && !finished; ++head) {
    for (std::size_t g = 0; g < sgens.size() && !finished; ++g) {
      if (limits.applications && ++*limits.applications > job.stab_budget) throw OutOfStabBudget{};
      push(act(job, tree.states[head], sgens[g], dim), static_cast<long>(head), g);
    }
  }
  return tree;
}

Matrix pad(const Matrix& m, std::size_t dim) {
  if (m.rows() == dim) return m;
  return direct_sum(m, Matrix::identity(m.ring(), dim - m.rows()));
}

std::size_t max_level(const std::vector<PathStep>& path) {
  std::size_t l = 0;
  for (const auto& s : path) l = std::max(l, s.level);
  return l;
}

}  // namespace

std::string_view to_string(ObjectKind k) noexcept {
  return k == ObjectKind::UnimodularRows ? "umrows" : "alt";
}

std::string_view to_string(GeneratorSet g) noexcept {
  switch (g) {
    case GeneratorSet::E: return "E";
    case GeneratorSet::SL: return "SL";
    case GeneratorSet::SpTransvection: return "Sp-transvection";
    case GeneratorSet::ESpClosure: return "ESp-closure";
  }
  return "?";
}

ObjectKind object_kind_from_string(std::string_view s) {
  if (s == "umrows" || s == "rows") return ObjectKind::UnimodularRows;
  if (s == "alt" || s == "alternating") return ObjectKind::AlternatingInvertible;
  throw Error(ErrorCode::ParseError, "unknown object kind '" + std::string(s) + "'");
}

GeneratorSet generator_set_from_string(std::string_view s) {
  if (s == "E") return GeneratorSet::E;
  if (s == "SL") return GeneratorSet::SL;
  if (s == "Sp" || s == "Sp-transvection") return GeneratorSet::SpTransvection;
  if (s == "ESp" || s == "ESp-closure") return GeneratorSet::ESpClosure;
  throw Error(ErrorCode::ParseError, "unknown generator set '" + std::string(s) + "'");
}

GroupFlag witness_group(GeneratorSet set) noexcept {
  return (set == GeneratorSet::E || set == GeneratorSet::ESpClosure) ? GroupFlag::E : GroupFlag::SL;
}

std::optional<std::size_t> CensusResult::orbit_of(const std::string& key) const {
  auto it = orbit_index.find(key);
  if (it == orbit_index.end()) return std::nullopt;
  return it->second;
}

std::string object_key(const CensusObject& obj, ObjectKind kind, std::size_t n) {
  if (kind == ObjectKind::UnimodularRows) {
    std::string out = "[";
    for (std::size_t i = 0; i < obj.size(); ++i) {
      if (i) out += ',';
      out += '"' + obj[i].to_string() + '"';
    }
    return out + "]";
  }
  return matrix_key(Matrix(obj.front().ring(), n, n, obj));
}

std::vector<CensusObject> enumerate_objects(const CensusJob& job) {
  if (job.n == 0) throw Error(ErrorCode::BadSpec, "census dimension must be positive");
  const auto elems = ring_elements(job);
  const mpz_class q = static_cast<unsigned long>(elems.size());
  const Element one = Element::one(job.ring);
  std::vector<std::pair<std::string, CensusObject>> found;

  if (job.kind == ObjectKind::UnimodularRows) {
    mpz_class count;
    mpz_pow_ui(count.get_mpz_t(), q.get_mpz_t(), job.n);
    budget_check(count, job.budget, "row candidates");
    for_each_vector(elems, job.n, [&](const std::vector<Element>& a) {
      bool has_section = false;
      for_each_vector(elems, job.n, [&](const std::vector<Element>& b) {
        has_section = dot(a, b).is_one();
        return !has_section;
      });
      if (has_section) found.emplace_back(object_key(a, job.kind, job.n), a);
      return true;
    });
  } else {
    if (job.n % 2 != 0) throw Error(ErrorCode::BadSpec, "alternating census needs an even size");
    const std::size_t free = job.n * (job.n - 1) / 2;
    mpz_class count;
    mpz_pow_ui(count.get_mpz_t(), q.get_mpz_t(), free);
    budget_check(count, job.budget, "alternating candidates");
    for_each_vector(elems, free, [&](const std::vector<Element>& upper) {
      Matrix m(job.ring, job.n, job.n);
      std::size_t k = 0;
      for (std::size_t i = 0; i < job.n; ++i) {
        for (std::size_t j = i + 1; j < job.n; ++j, ++k) {
          m.set(i, j, upper[k]);
          m.set(j, i, -upper[k]);
        }
      }
      if (is_unit(det(m)).status == UnitStatus::Yes) found.emplace_back(matrix_key(m), m.entries());
      return true;
    });
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<CensusObject> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<LabeledGenerator> make_generators(const CensusJob& job, GeneratorSet set, std::size_t dim) {
  const auto& ring = job.ring;
  const auto elems = ring_elements(job);
  std::vector<Element> nonzero;
  for (const auto& e : elems) {
    if (!e.is_zero()) nonzero.push_back(e);
  }
  std::vector<LabeledGenerator> out;
  std::set<std::string> seen;
  auto add = [&](Matrix m, std::vector<WitnessFactor> factors) {
    if (is_identity(m)) return;
    if (!seen.insert(matrix_key(m)).second) return;
    out.push_back(LabeledGenerator{std::move(m), std::move(factors)});
  };
  auto add_elementaries = [&] {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (i == j) continue;
        for (const auto& lambda : nonzero) {
          Elementary e{i, j, lambda};
          add(build_generator(e, dim, ring), {e});
        }
      }
    }
  };

  switch (set) {
    case GeneratorSet::E:
      add_elementaries();
      break;
    case GeneratorSet::SL:
      add_elementaries();
      for (const auto& u : nonzero) {
        auto unit = is_unit(u);
        if (unit.status != UnitStatus::Yes || u.is_one()) continue;
        for (std::size_t i = 0; i + 1 < dim; ++i) {
          Matrix d = Matrix::identity(ring, dim);
          d.set(i, i, u);
          d.set(i + 1, i + 1, *unit.inverse);
          add(d, {d});
        }
      }
      break;
    case GeneratorSet::SpTransvection: {
      if (dim % 2 != 0) throw Error(ErrorCode::BadSpec, "transvections need an even dimension");
      mpz_class count;
      mpz_pow_ui(count.get_mpz_t(), mpz_class(static_cast<unsigned long>(elems.size())).get_mpz_t(), dim);
      budget_check(count * static_cast<unsigned long>(nonzero.size()), job.budget, "transvection candidates");
      const Matrix form = psi(ring, dim / 2).matrix();
      for_each_vector(elems, dim, [&](const std::vector<Element>& v) {
        if (std::all_of(v.begin(), v.end(), [](const Element& x) { return x.is_zero(); })) return true;
        for (const auto& lambda : nonzero) {
          Matrix t = build_generator(Transvection{v, lambda, form}, dim, ring);
          add(t, {t});
        }
        return true;
      });
      break;
    }
    case GeneratorSet::ESpClosure: {
      if (dim % 2 != 0) throw Error(ErrorCode::BadSpec, "symplectic generators need an even dimension");
      const Matrix form = psi(ring, dim / 2).matrix();
      auto symplectic = [&](const Matrix& g) { return transpose(g) * form * g == form; };
      std::vector<Elementary> singles;
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          if (i == j) continue;
          for (const auto& lambda : nonzero) singles.push_back({i, j, lambda});
        }
      }
      for (const auto& e : singles) {
        Matrix m = build_generator(e, dim, ring);
        if (symplectic(m)) add(m, {e});
      }
      for (const auto& e : singles) {
        const Matrix m1 = build_generator(e, dim, ring);
        for (const auto& f : singles) {
          if (e.row == f.row && e.col == f.col) continue;
          Matrix m = m1 * build_generator(f, dim, ring);
          if (symplectic(m)) add(m, {e, f});
        }
      }
      break;
    }
  }
  std::mt19937_64 rng(job.seed);
  if (job.seed != 0) std::shuffle(out.begin(), out.end(), rng);
  return out;
}

CensusResult orbit_bfs(const CensusJob& job) {
  CensusResult result;
  result.job = job;
  const auto objects = enumerate_objects(job);
  result.object_count = objects.size();
  result.generators.push_back(make_generators(job, job.generators, job.n));
  std::size_t visited_total = 0;

  std::unordered_map<std::string, std::size_t> orbit_of_key;
  for (const auto& obj : objects) {
    std::string key = object_key(obj, job.kind, job.n);
    if (orbit_of_key.count(key)) continue;
    BfsTree tree = bfs(job, obj, result.generators[0], job.n, job.n, SearchLimits{&visited_total, nullptr, {}});
    Orbit orbit;
    orbit.rep_key = key;
    orbit.rep = obj;
    for (std::size_t s = 0; s < tree.states.size(); ++s) {
      std::vector<PathStep> path;
      for (auto g : tree.path(s)) path.push_back({0, g});
      orbit.members.push_back(OrbitMember{tree.keys[s], tree.states[s], std::move(path)});
      orbit_of_key.emplace(tree.keys[s], result.orbits.size());
    }
    std::sort(orbit.members.begin(), orbit.members.end(),
              [](const OrbitMember& x, const OrbitMember& y) { return x.key < y.key; });
    if (orbit.members.front().key != key) {
      throw Error(ErrorCode::BadSpec, "orbit left the enumerated object set: generators do not act on it");
    }
    if (job.kind == ObjectKind::AlternatingInvertible) {
      orbit.pf = pfaffian(AlternatingMatrix(as_matrix(job, obj, job.n)));
    }
    result.orbits.push_back(std::move(orbit));
  }
  if (orbit_of_key.size() != objects.size()) {
    throw Error(ErrorCode::BadSpec, "orbits reached objects outside the enumeration");
  }

  if (job.kind == ObjectKind::UnimodularRows) {
    result.stabilization = "n/a";
  } else {
    result.stabilization = "cap";
    std::size_t applications = 0;
    for (std::size_t level = 1; level <= job.stab_cap; ++level) {
      std::map<std::string, std::size_t> pf_count;
      for (const auto& o : result.orbits) ++pf_count[o.pf->to_string()];
      if (job.pf_shortcut && pf_count.size() == result.orbits.size()) {
        result.stabilization = "pf-separated";
        break;
      }
      const std::size_t dim = job.n + 2 * level;
      std::vector<LabeledGenerator> gens = make_generators(job, job.generators, dim);

      std::unordered_map<std::string, std::size_t> stabilized_rep;
      for (std::size_t c = 0; c < result.orbits.size(); ++c) {
        stabilized_rep.emplace(object_key(stabilized(job, result.orbits[c].rep, level), job.kind, dim), c);
      }
      std::vector<long> leader(result.orbits.size(), -1);
      std::vector<std::vector<PathStep>> link(result.orbits.size());
      try {
        for (std::size_t c = 0; c < result.orbits.size(); ++c) {
          if (leader[c] >= 0) continue;
          leader[c] = static_cast<long>(c);
          // Classes this search could still absorb.
          std::set<std::size_t> wanted;
          for (std::size_t d = c + 1; d < result.orbits.size(); ++d) {
            if (leader[d] >= 0) continue;
            if (job.pf_shortcut && !(*result.orbits[d].pf == *result.orbits[c].pf)) continue;
            wanted.insert(d);
          }
          if (wanted.empty()) continue;
          SearchLimits limits{&visited_total, &applications, [&](const std::string& key) {
                                auto it = stabilized_rep.find(key);
                                if (it != stabilized_rep.end()) wanted.erase(it->second);
                                return wanted.empty();
                              }};
          BfsTree tree = bfs(job, stabilized(job, result.orbits[c].rep, level), gens, dim, dim, limits);
          for (std::size_t s = 0; s < tree.states.size(); ++s) {
            auto it = stabilized_rep.find(tree.keys[s]);
            if (it == stabilized_rep.end() || it->second == c || leader[it->second] >= 0) continue;
            leader[it->second] = static_cast<long>(c);
            for (auto g : tree.path(s)) link[it->second].push_back({level, g});
          }
        }
      } catch (const OutOfStabBudget&) {
        result.stabilization = "budget";
        break;
      }
      result.generators.push_back(std::move(gens));

      std::vector<Orbit> merged;
      std::vector<long> slot(result.orbits.size(), -1);
      for (std::size_t c = 0; c < result.orbits.size(); ++c) {
        const auto l = static_cast<std::size_t>(leader[c]);
        if (l == c) {
          slot[c] = static_cast<long>(merged.size());
          merged.push_back(result.orbits[c]);
          continue;
        }
        Orbit& target = merged[static_cast<std::size_t>(slot[l])];
        for (auto& m : result.orbits[c].members) {
          std::vector<PathStep> path = link[c];
          path.insert(path.end(), m.path.begin(), m.path.end());
          target.members.push_back(OrbitMember{m.key, m.object, std::move(path)});
        }
      }
      for (auto& o : merged) {
        std::sort(o.members.begin(), o.members.end(),
                  [](const OrbitMember& x, const OrbitMember& y) { return x.key < y.key; });
      }
      result.orbits = std::move(merged);
      result.stab_level_reached = level;
    }
  }
  for (std::size_t o = 0; o < result.orbits.size(); ++o) {
    for (const auto& m : result.orbits[o].members) result.orbit_index.emplace(m.key, o);
  }
  return result;
}

Matrix member_transform(const CensusResult& result, std::size_t orbit, std::size_t member) {
  const auto& path = result.orbits.at(orbit).members.at(member).path;
  const std::size_t dim = result.job.n + 2 * max_level(path);
  Matrix t = Matrix::identity(result.job.ring, dim);
  for (const auto& step : path) t = t * pad(result.generators.at(step.level).at(step.index).matrix, dim);
  return t;
}

WitnessWord member_witness(const CensusResult& result, std::size_t orbit, std::size_t member) {
  if (result.job.kind != ObjectKind::AlternatingInvertible) {
    throw Error(ErrorCode::BadSpec, "witness words certify form equivalences; rows replay via member_transform");
  }
  const auto& path = result.orbits.at(orbit).members.at(member).path;
  const std::size_t n = result.job.n;
  const std::size_t level = max_level(path);
  // check_equiv_witness works in size 2n + 2s; every path level must fit.
  const std::size_t s = 2 * level > n ? (2 * level - n + 1) / 2 : 0;
  const std::size_t total = 2 * n + 2 * s;
  WitnessWord w;
  w.stabilization = s;
  for (const auto& step : path) {
    for (const auto& f : result.generators.at(step.level).at(step.index).factors) {
      if (std::holds_alternative<Elementary>(f)) w.factors.push_back(f);
      else w.factors.emplace_back(pad(std::get<Matrix>(f), total));
    }
  }
  return w;
}

bool verify_member(const CensusResult& result, std::size_t orbit, std::size_t member) {
  const auto& job = result.job;
  const auto& o = result.orbits.at(orbit);
  const auto& m = o.members.at(member);
  if (job.kind == ObjectKind::UnimodularRows) {
    return row_times(o.rep, member_transform(result, orbit, member)) == m.object;
  }
  const AlternatingMatrix target(as_matrix(job, m.object, job.n));
  const AlternatingMatrix rep(as_matrix(job, o.rep, job.n));
  return check_equiv_witness(target, rep, member_witness(result, orbit, member), witness_group(job.generators)).ok;
}

std::size_t count_witness_failures(const CensusResult& result) {
  std::size_t failures = 0;
  for (std::size_t o = 0; o < result.orbits.size(); ++o) {
    for (std::size_t m = 0; m < result.orbits[o].members.size(); ++m) {
      if (!verify_member(result, o, m)) ++failures;
    }
  }
  return failures;
}

GeneratorComparison compare_generator_sets(const CensusJob& job, GeneratorSet a, GeneratorSet b) {
  CensusJob ja = job, jb = job;
  ja.generators = a;
  jb.generators = b;
  GeneratorComparison cmp{orbit_bfs(ja), orbit_bfs(jb), true, std::nullopt};
  auto same_members = [](const Orbit& x, const Orbit& y) {
    return x.size() == y.size() && std::equal(x.members.begin(), x.members.end(), y.members.begin(),
                                              [](const OrbitMember& p, const OrbitMember& q) { return p.key == q.key; });
  };
  for (const auto& [key, oa] : cmp.first.orbit_index) {
    const auto ob = cmp.second.orbit_of(key);
    if (!ob || !same_members(cmp.first.orbits[oa], cmp.second.orbits[*ob])) {
      cmp.coincide = false;
      cmp.separating_key = key;
      break;
    }
  }
  return cmp;
}

std::size_t generated_group_order(const CensusJob& job, GeneratorSet set, std::size_t dim) {
  const auto gens = make_generators(job, set, dim);
  std::unordered_map<std::string, bool> seen;
  std::deque<Matrix> frontier{Matrix::identity(job.ring, dim)};
  seen.emplace(matrix_key(frontier.front()), true);
  while (!frontier.empty()) {
    Matrix cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Matrix next = cur * g.matrix;
      if (seen.emplace(matrix_key(next), true).second) {
        if (seen.size() > job.budget) {
          throw Error(ErrorCode::BudgetExceeded, "generated group exceeds budget " + std::to_string(job.budget));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

}  // namespace wittkit
