// Copyright 2026 The gda Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gda/json_io.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <tuple>

namespace gda {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DescriptorError(what); }

const json& at(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    try {
      std::size_t pos = 0;
      const std::string s = j.get<std::string>();
      const long long v = std::stoll(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  bad(std::string("expected an integer for ") + what);
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string("expected an array for ") + what);
  return j;
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) bad("expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

}  // namespace

json field_to_json(const Field& F) {
  switch (F.kind()) {
    case FieldKind::kRational: return {{"kind", "Q"}};
    case FieldKind::kReal: return {{"kind", "R"}};
    case FieldKind::kComplex: return {{"kind", "C"}, {"conductor", F.cyc().conductor()}};
    case FieldKind::kCyclotomic:
      return {{"kind", "cyclotomic"}, {"conductor", F.cyc().conductor()}};
    case FieldKind::kFinite:
      return {{"kind", "GF"},
              {"p", F.ff().characteristic()},
              {"ell", F.ff().degree()},
              {"modulus", F.ff().modulus()}};
  }
  return {};
}

Field field_from_json(const json& j) {
  const json& kind = at(j, "kind");
  if (!kind.is_string()) bad("field kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "Q") return Field::rational();
  if (k == "R") return Field::real();
  if (k == "C" || k == "cyclotomic") {
    const std::int64_t n = as_int(at(j, "conductor"), "conductor");
    if (n < 1 || n > 100000) throw std::invalid_argument("conductor out of range");
    return k == "C" ? Field::complex(static_cast<int>(n)) : Field::cyclotomic(static_cast<int>(n));
  }
  if (k == "GF") {
    const std::int64_t p = as_int(at(j, "p"), "p");
    const std::int64_t ell = as_int(at(j, "ell"), "ell");
    if (!is_prime(p) || ell < 1) throw std::invalid_argument("GF needs a prime p and ell >= 1");
    if (j.contains("modulus")) {
      std::vector<std::int64_t> mod;
      for (const auto& c : as_array(j.at("modulus"), "modulus")) mod.push_back(as_int(c, "modulus"));
      return Field::finite(FiniteField(p, static_cast<int>(ell), mod));
    }
    return Field::finite(FiniteField::construct(p, static_cast<int>(ell)));
  }
  bad("unknown field kind \"" + k + "\"");
}

Field field_from_text(const std::string& s) {
  if (s == "Q") return Field::rational();
  if (s == "R") return Field::real();
  std::smatch m;
  if (std::regex_match(s, m, std::regex(R"(C\((\d+)\))")))
    return Field::complex(std::stoi(m[1]));
  if (std::regex_match(s, m, std::regex(R"(Q\(zeta_(\d+)\))")))
    return Field::cyclotomic(std::stoi(m[1]));
  if (std::regex_match(s, m, std::regex(R"(GF\((\d+)(?:\^(\d+))?\))"))) {
    const std::int64_t p = std::stoll(m[1]);
    const int ell = m[2].matched ? std::stoi(m[2]) : 1;
    if (!is_prime(p) || ell < 1) throw std::invalid_argument("GF needs a prime p and ell >= 1");
    return Field::finite(FiniteField::construct(p, ell));
  }
  throw std::invalid_argument("unrecognized field \"" + s + "\"");
}

json scalar_to_json(const Field& F, const Scalar& x) {
  switch (F.kind()) {
    case FieldKind::kRational:
    case FieldKind::kReal:
      return format_rational(std::get<Rational>(x));
    case FieldKind::kFinite:
      return F.ff().coeffs(std::get<FFElem>(x));
    default: {
      json a = json::array();
      const auto& c = std::get<CycElem>(x).c;
      for (int i = 0; i < F.cyc().degree(); ++i)
        a.push_back(format_rational(i < static_cast<int>(c.size()) ? c[i] : Rational(0)));
      return a;
    }
  }
}

Scalar scalar_from_json(const Field& F, const json& j) {
  switch (F.kind()) {
    case FieldKind::kRational:
    case FieldKind::kReal:
      return rational_from(j);
    case FieldKind::kFinite: {
      if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
      std::vector<std::int64_t> c;
      for (const auto& e : as_array(j, "finite field element")) c.push_back(as_int(e, "coefficient"));
      if (static_cast<int>(c.size()) > F.ff().degree()) bad("too many coefficients");
      return F.ff().from_coeffs(c);
    }
    default: {
      if (!j.is_array()) return F.from_rational(rational_from(j));
      std::vector<Rational> c;
      for (const auto& e : j) c.push_back(rational_from(e));
      return F.cyc().from_coeffs(std::move(c));
    }
  }
}

Scalar scalar_from_text(const Field& F, const std::string& s) {
  if (F.is_finite() && F.ff().degree() > 1) {
    std::size_t pos = 0;
    long long v = -1;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
    }
    if (pos != s.size() || v < 0 || v >= F.ff().size())
      throw std::invalid_argument("element index out of range: " + s);
    return FFElem{static_cast<std::uint32_t>(v)};
  }
  return F.from_rational(parse_rational(s));
}

json group_to_json(const FinAbGroup& G) { return {{"orders", G.orders()}}; }

FinAbGroup group_from_json(const json& j) {
  std::vector<int> orders;
  for (const auto& o : as_array(at(j, "orders"), "orders")) {
    const std::int64_t v = as_int(o, "order");
    if (v < 1 || v > 1000000) throw std::invalid_argument("cyclic order out of range");
    orders.push_back(static_cast<int>(v));
  }
  return FinAbGroup(orders);
}

FinAbGroup group_from_text(const std::string& s) {
  std::vector<int> orders;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) throw std::invalid_argument("malformed group \"" + s + "\"");
    if (!std::all_of(tok.begin(), tok.end(), ::isdigit) || tok.size() > 7)
      throw std::invalid_argument("malformed group \"" + s + "\"");
    const int v = std::stoi(tok);
    if (v < 1) throw std::invalid_argument("cyclic order must be positive");
    if (v > 1) orders.push_back(v);
    tok.clear();
  };
  if (s.empty()) return FinAbGroup(std::vector<int>{});
  for (char c : s) {
    if (c == ',') flush();
    else if (c != ' ') tok += c;
  }
  flush();
  return FinAbGroup(orders);
}

json element_to_json(const GroupElement& g) { return g.exps; }

GroupElement element_from_json(const FinAbGroup& G, const json& j) {
  std::vector<int> e;
  for (const auto& x : as_array(j, "group element")) e.push_back(static_cast<int>(as_int(x, "exponent")));
  GroupElement g(e);
  if (!G.is_element(g)) throw std::invalid_argument("not an element of " + G.to_string());
  return g;
}

json phase_to_json(const Phase& p) { return std::to_string(p.num) + "/" + std::to_string(p.den); }

Phase phase_from_json(const json& j) {
  const Rational r = rational_from(j);
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den > 1000000000) throw std::invalid_argument("phase denominator too large");
  const auto d = static_cast<std::int64_t>(den);
  const auto n = static_cast<std::int64_t>(((num % den) + den) % den);
  return Phase(n, d);
}

json beta_to_json(const AltBicharacter& beta) {
  json a = json::array();
  const int r = beta.group().rank();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const Phase p = beta.generator_value(i, j);
      if (!p.is_trivial()) a.push_back({i, j, phase_to_json(p)});
    }
  return a;
}

AltBicharacter beta_from_json(const FinAbGroup& K, const json& j) {
  std::vector<std::tuple<int, int, Phase>> pairs;
  for (const auto& e : as_array(j, "beta")) {
    if (!e.is_array() || e.size() != 3) bad("beta entries are [i, j, \"num/den\"]");
    const auto i = as_int(e[0], "beta index"), k = as_int(e[1], "beta index");
    if (i < 0 || k < 0 || i >= K.rank() || k >= K.rank() || i == k)
      throw std::invalid_argument("beta index out of range");
    pairs.emplace_back(static_cast<int>(i), static_cast<int>(k), phase_from_json(e[2]));
  }
  return AltBicharacter(K, pairs);
}

json mu_to_json(const Field& F, const MuFunction& mu) {
  json a = json::array();
  for (std::size_t i = 0; i < mu.gens.size(); ++i)
    a.push_back({static_cast<int>(i), scalar_to_json(F, mu.gens[i])});
  return a;
}

MuFunction mu_from_json(const Field& F, const FinAbGroup& K, const json& j) {
  MuFunction mu{K, std::vector<Scalar>(K.rank(), F.one())};
  for (const auto& e : as_array(j, "mu")) {
    if (!e.is_array() || e.size() != 2) bad("mu entries are [i, value]");
    const auto i = as_int(e[0], "mu index");
    if (i < 0 || i >= K.rank()) throw std::invalid_argument("mu index out of range");
    mu.gens[i] = scalar_from_json(F, e[1]);
  }
  return mu;
}

json quasitorus_spec_to_json(const QuasitorusSpec& s) {
  return {{"field", field_to_json(s.field)},
          {"group", group_to_json(s.beta.group())},
          {"beta", beta_to_json(s.beta)},
          {"mu", mu_to_json(s.field, s.mu)}};
}

QuasitorusSpec quasitorus_spec_from_json(const json& j) {
  QuasitorusSpec s;
  s.field = field_from_json(at(j, "field"));
  const FinAbGroup K = group_from_json(at(j, "group"));
  s.beta = j.contains("beta") ? beta_from_json(K, j.at("beta")) : AltBicharacter(K);
  s.mu = j.contains("mu") ? mu_from_json(s.field, K, j.at("mu"))
                          : MuFunction{K, std::vector<Scalar>(K.rank(), s.field.one())};
  return s;
}

json algebra_to_json(const GradedAlgebra& A) {
  const Field& F = A.field();
  const std::size_t n = A.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return A.degree(a) < A.degree(b); });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  json degrees = json::array();
  for (auto i : order) degrees.push_back(element_to_json(A.degree(i)));
  json unit = json::array();
  for (auto i : order)
    if (!F.is_zero(A.unit()[i])) unit.push_back({pos[i], scalar_to_json(F, A.unit()[i])});
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, json>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j))
        rows.emplace_back(pos[i], pos[j], pos[k], scalar_to_json(F, c));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
  });
  json entries = json::array();
  for (auto& [i, j, k, c] : rows) entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", c}});
  return {{"field", field_to_json(F)},
          {"group", group_to_json(A.group())},
          {"degrees", degrees},
          {"unit", unit},
          {"entries", entries}};
}

GradedAlgebra algebra_from_json(const json& j) {
  const Field F = field_from_json(at(j, "field"));
  const FinAbGroup G = group_from_json(at(j, "group"));
  std::vector<GroupElement> degs;
  for (const auto& d : as_array(at(j, "degrees"), "degrees")) degs.push_back(element_from_json(G, d));
  const std::size_t n = degs.size();
  if (n == 0) throw std::invalid_argument("algebra must have positive dimension");
  if (n > 4096) throw std::invalid_argument("algebra dimension too large");
  auto index = [&](const json& x) {
    const std::int64_t v = as_int(x, "basis index");
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("basis index out of range");
    return static_cast<std::size_t>(v);
  };
  Vec unit = zero_vec(F, n);
  for (const auto& e : as_array(at(j, "unit"), "unit")) {
    if (!e.is_array() || e.size() != 2) bad("unit entries are [i, value]");
    unit[index(e[0])] = scalar_from_json(F, e[1]);
  }
  std::vector<std::map<std::size_t, Scalar>> acc(n * n);
  for (const auto& e : as_array(at(j, "entries"), "entries")) {
    const std::size_t a = index(at(e, "i")), b = index(at(e, "j")), k = index(at(e, "k"));
    Scalar c = scalar_from_json(F, at(e, "c"));
    auto& slot = acc[a * n + b];
    auto it = slot.find(k);
    if (it == slot.end()) slot.emplace(k, std::move(c));
    else it->second = F.add(it->second, c);
  }
  std::vector<SparseVec> table(n * n);
  for (std::size_t t = 0; t < n * n; ++t)
    for (auto& [k, c] : acc[t])
      if (!F.is_zero(c)) table[t].emplace_back(k, c);
  return GradedAlgebra(F, G, std::move(degs), std::move(table), std::move(unit));
}

json sign_map_to_json(const SignMap& m) {
  json a = json::array();
  for (const auto& [g, s] : m) a.push_back({element_to_json(g), s});
  return a;
}

json label_to_json(const RealClassLabel& label) {
  json j = {{"item", item_tag(label.item)},
            {"support", group_to_json(label.T)},
            {"beta", beta_to_json(label.beta)}};
  if (label.item == RealItem::kThreeA || label.item == RealItem::kThreeB) {
    json gens = json::array();
    for (const auto& g : label.K_gens) gens.push_back(element_to_json(g));
    j["K_generators"] = gens;
    j["K_presentation"] = group_to_json(label.beta.group());
    j["nu"] = sign_map_to_json(label.nu);
  } else if (label.item != RealItem::kFour) {
    j["mu"] = sign_map_to_json(label.mu);
  }
  return j;
}

json invariants_to_json(const RealInvariants& inv) {
  json sup = json::array(), cent = json::array();
  for (const auto& g : inv.support) sup.push_back(element_to_json(g));
  for (const auto& g : inv.cent_support) cent.push_back(element_to_json(g));
  return {{"dim_e", inv.dim_e},
          {"e_central", inv.e_central},
          {"e_commutative", inv.e_commutative},
          {"support", sup},
          {"cent_support", cent},
          {"beta", inv.beta},
          {"squares", inv.squares}};
}

json decision_to_json(const Field& F, const Decision& d) {
  json j = {{"verdict", to_string(d.verdict)}, {"reason", d.reason}};
  json w = json::object();
  if (d.factor) {
    json f = json::array();
    for (const auto& c : *d.factor) f.push_back(scalar_to_json(F, c));
    w["factor"] = f;
  }
  if (d.zero_divisor) {
    json u = json::array(), v = json::array();
    for (const auto& c : d.zero_divisor->first) u.push_back(scalar_to_json(F, c));
    for (const auto& c : d.zero_divisor->second) v.push_back(scalar_to_json(F, c));
    w["zero_divisor"] = {{"u", u}, {"v", v}};
  }
  j["witness"] = w;
  return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gda
