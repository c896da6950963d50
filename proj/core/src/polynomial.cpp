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

#include "wittkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "wittkit/error.hpp"

namespace wittkit {

std::string_view to_string(MonomialOrder order) noexcept {
  return order == MonomialOrder::Grlex ? "grlex" : "lex";
}

int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::Grlex) {
    auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db ? 1 : -1;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

void CoeffDomain::reduce(mpz_class& c) const {
  if (modulus_ == 0) return;
  mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus_.get_mpz_t());
}

namespace poly {

namespace {

struct Descending {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, order) > 0;
  }
};

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

Poly normalize(std::vector<Term> terms, const CoeffDomain& dom, MonomialOrder order) {
  std::sort(terms.begin(), terms.end(), [order](const Term& x, const Term& y) {
    return compare_monomials(x.mono, y.mono, order) > 0;
  });
  Poly out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty()) {
        dom.reduce(out.back().coeff);
        if (out.back().coeff == 0) out.pop_back();
      }
      out.push_back(std::move(t));
    }
  }
  if (!out.empty()) {
    dom.reduce(out.back().coeff);
    if (out.back().coeff == 0) out.pop_back();
  }
  return out;
}

Poly add(const Poly& p, const Poly& q, const CoeffDomain& dom, MonomialOrder order) {
  Poly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    int c = 0;
    if (i == p.size()) c = -1;
    else if (j == q.size()) c = 1;
    else c = compare_monomials(p[i].mono, q[j].mono, order);
    if (c > 0) {
      out.push_back(p[i++]);
    } else if (c < 0) {
      out.push_back(q[j++]);
    } else {
      mpz_class s = p[i].coeff + q[j].coeff;
      dom.reduce(s);
      if (s != 0) out.push_back(Term{p[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly neg(const Poly& p, const CoeffDomain& dom) {
  Poly out = p;
  for (auto& t : out) {
    t.coeff = -t.coeff;
    dom.reduce(t.coeff);
  }
  return out;
}

Poly sub(const Poly& p, const Poly& q, const CoeffDomain& dom, MonomialOrder order) {
  return add(p, neg(q, dom), dom, order);
}

Poly mul(const Poly& p, const Poly& q, const CoeffDomain& dom, MonomialOrder order) {
  if (p.empty() || q.empty()) return {};
  std::map<Monomial, mpz_class, Descending> acc(Descending{order});
  for (const auto& s : p) {
    for (const auto& t : q) {
      acc[mono_mul(s.mono, t.mono)] += s.coeff * t.coeff;
    }
  }
  Poly out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    dom.reduce(c);
    if (c != 0) out.push_back(Term{m, std::move(c)});
  }
  return out;
}

Poly scale(const Poly& p, const mpz_class& c, const Monomial& shift, const CoeffDomain& dom) {
  Poly out;
  out.reserve(p.size());
  for (const auto& t : p) {
    mpz_class k = t.coeff * c;
    dom.reduce(k);
    if (k != 0) out.push_back(Term{mono_mul(t.mono, shift), std::move(k)});
  }
  // Multiplying every monomial by the same shift preserves a monomial order.
  return out;
}

Poly reduce(const Poly& p, const Poly& relation, const CoeffDomain& dom, MonomialOrder order) {
  if (relation.empty()) return p;
  const Monomial& lead = relation.front().mono;
  std::map<Monomial, mpz_class, Descending> work(Descending{order});
  for (const auto& t : p) work.emplace(t.mono, t.coeff);

  Poly remainder;
  while (!work.empty()) {
    auto top = work.begin();
    if (top->second == 0) {
      work.erase(top);
      continue;
    }
    if (!divides(lead, top->first)) {
      remainder.push_back(Term{top->first, top->second});
      work.erase(top);
      continue;
    }
    Monomial shift(lead.size());
    for (std::size_t i = 0; i < lead.size(); ++i) shift[i] = top->first[i] - lead[i];
    const mpz_class c = top->second;
    // Subtract c * x^shift * relation; the leading term cancels exactly.
    for (const auto& t : relation) {
      auto m = mono_mul(t.mono, shift);
      mpz_class& slot = work[m];
      slot -= c * t.coeff;
      dom.reduce(slot);
      if (slot == 0) work.erase(m);
    }
  }
  return remainder;
}

bool is_canonical(const Poly& p, const CoeffDomain& dom, MonomialOrder order) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].coeff == 0) return false;
    if (dom.is_modular() && (p[i].coeff < 0 || p[i].coeff >= dom.modulus())) return false;
    if (i > 0 && compare_monomials(p[i - 1].mono, p[i].mono, order) <= 0) return false;
  }
  return true;
}

std::string format(const Poly& p, const std::vector<std::string>& vars) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& t = p[k];
    const bool negative = t.coeff < 0;
    mpz_class mag = abs(t.coeff);
    if (negative) out += '-';
    else if (k > 0) out += '+';
    const bool constant = std::all_of(t.mono.begin(), t.mono.end(), [](auto e) { return e == 0; });
    bool need_star = false;
    if (constant || mag != 1) {
      out += mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (need_star) out += '*';
      out += vars[i];
      if (t.mono[i] > 1) {
        out += '^';
        out += std::to_string(t.mono[i]);
      }
      need_star = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  std::vector<Term> parse_sum() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return terms;
  }

 private:
  Term parse_term() {
    Term t{Monomial(vars_.size(), 0), 1};
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= parse_integer();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t var = parse_variable();
        std::uint32_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          mpz_class e = parse_integer();
          if (!e.fits_uint_p()) fail("exponent out of range");
          power = static_cast<std::uint32_t>(e.get_ui());
        }
        t.mono[var] += power;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::size_t parse_variable() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    fail("unknown variable '" + std::string(name) + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "cannot parse \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse(std::string_view text, const std::vector<std::string>& vars,
           const CoeffDomain& dom, MonomialOrder order) {
  Parser parser(text, vars);
  auto terms = parser.parse_sum();
  for (auto& t : terms) dom.reduce(t.coeff);
  return normalize(std::move(terms), dom, order);
}

}  // namespace poly
}  // namespace wittkit
