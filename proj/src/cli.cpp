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

#include "gda/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "gda/gradedfield.hpp"
#include "gda/json_io.hpp"
#include "gda/quasitorus.hpp"
#include "gda/realclass.hpp"

namespace gda {

namespace {

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

const char* code_name(int code) {
  switch (code) {
    case kExitUsage: return "usage";
    case kExitMalformedJson: return "malformed_json";
    case kExitPrecondition: return "precondition";
    case kExitIo: return "io";
    default: return "internal";
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kExitIo, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());  // json::parse_error maps to kExitMalformedJson
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string tok;
  for (char c : s) {
    if (c == ',') {
      out.push_back(tok);
      tok.clear();
    } else if (c != ' ') {
      tok += c;
    }
  }
  if (!tok.empty() || !out.empty()) out.push_back(tok);
  return out;
}

// Oracle verdict with the Undecided channel.
std::string tri(const std::function<bool()>& f) {
  try {
    return f() ? "true" : "false";
  } catch (const Undecided&) {
    return "undecided";
  }
}

json oracle_block(const GradedAlgebra& A) {
  const auto assoc = verify_associative(A);
  json j = {{"associative", assoc.ok},
            {"graded_division", tri([&] { return is_graded_division(A); })}};
  if (!assoc.ok) throw std::logic_error("constructed algebra is not associative");
  return j;
}

// An algebra descriptor, a report carrying one under "algebra", or a
// quasitorus request which is constructed.
GradedAlgebra algebra_or_spec(const json& in) {
  if (in.is_object() && in.contains("degrees")) return algebra_from_json(in);
  if (in.is_object() && in.contains("algebra")) return algebra_from_json(in.at("algebra"));
  const QuasitorusSpec s = quasitorus_spec_from_json(in);
  return construct_quasitorus(s.field, s.beta, s.mu);
}

json support_json(const GradedAlgebra& A) {
  json a = json::array();
  for (const auto& g : A.support()) a.push_back(element_to_json(g));
  return a;
}

struct Options {
  std::string oracle = "full";
  std::string in, out, a, b, group, field, mu, lambda;
  int item = 0, jobs = 1;
  bool count_only = false, all_subgroups = false, list_mu = false;
  std::int64_t p = 0, ell = 1, k = 0, q = 0, n = 0;
  bool full() const { return oracle == "full"; }
};

json cmd_construct(const Options& o) {
  const json in = read_json_file(o.in);
  const QuasitorusSpec s = quasitorus_spec_from_json(in);
  const GradedAlgebra A = construct_quasitorus(s.field, s.beta, s.mu);
  json r = {{"input", in}, {"algebra", algebra_to_json(A)}, {"dimension", A.dim()}};
  if (o.full()) r["verification"] = oracle_block(A);
  return r;
}

json verify_one(const json& desc) {
  const GradedAlgebra A = algebra_from_json(desc);
  const auto assoc = verify_associative(A);
  json checks = {{"associative", assoc.ok}};
  if (!assoc.ok) checks["associativity_witness"] = *assoc.witness;
  checks["graded_division"] = assoc.ok ? tri([&] { return is_graded_division(A); }) : "false";
  checks["graded_center_e_dim"] = graded_center_e_dim(A);
  checks["canonical_encoding"] = algebra_to_json(A) == desc;
  std::string verdict = "true";
  if (!assoc.ok || checks["graded_division"] == "false") verdict = "false";
  else if (checks["graded_division"] == "undecided") verdict = "undecided";
  return {{"verdict", verdict}, {"checks", checks}, {"dimension", A.dim()}};
}

// Algebra descriptors inside `in`: the object itself, or those embedded in a
// report ("algebra", "parts", "strata"), with a JSON pointer for each.
void collect_algebras(const json& in, const std::string& path,
                      std::vector<std::pair<std::string, const json*>>& out) {
  if (!in.is_object()) return;
  if (in.contains("degrees")) {
    out.emplace_back(path.empty() ? "/" : path, &in);
    return;
  }
  if (in.contains("algebra")) collect_algebras(in.at("algebra"), path + "/algebra", out);
  for (const char* key : {"parts", "strata", "classes"}) {
    if (!in.contains(key) || !in.at(key).is_array()) continue;
    for (std::size_t i = 0; i < in.at(key).size(); ++i)
      collect_algebras(in.at(key)[i], path + "/" + key + "/" + std::to_string(i), out);
  }
}

json cmd_verify(const Options& o) {
  const json in = read_json_file(o.in);
  std::vector<std::pair<std::string, const json*>> found;
  collect_algebras(in, "", found);
  if (found.empty()) throw DescriptorError("no algebra descriptor found");
  if (found.size() == 1 && found.front().first == "/") {
    json r = verify_one(in);
    r["input"] = in;
    return r;
  }
  json results = json::array();
  std::string verdict = "true";
  for (const auto& [ptr, desc] : found) {
    json r = verify_one(*desc);
    if (r["verdict"] == "false") verdict = "false";
    else if (r["verdict"] == "undecided" && verdict == "true") verdict = "undecided";
    r["pointer"] = ptr;
    results.push_back(r);
  }
  return {{"input", in}, {"verdict", verdict}, {"algebras", results}};
}

json cmd_invariants(const Options& o) {
  const json in = read_json_file(o.in);
  const GradedAlgebra A = algebra_or_spec(in);
  json r = {{"input", in},
            {"dimension", A.dim()},
            {"support", support_json(A)},
            {"dim_e", A.component(A.group().identity()).size()},
            {"commutative", is_commutative(A)},
            {"graded_center_e_dim", graded_center_e_dim(A)}};
  if (A.has_1dim_components()) {
    const AltBicharacter beta = commutation_bicharacter(A);
    const MuFunction mu = mu_invariant(A);
    r["presentation"] = group_to_json(beta.group());
    r["beta"] = beta_to_json(beta);
    r["mu"] = mu_to_json(A.field(), mu);
  }
  if (A.field().kind() == FieldKind::kReal || A.field().kind() == FieldKind::kComplex)
    r["real_invariants"] = invariants_to_json(real_invariants(A));
  return r;
}

json cmd_decompose(const Options& o) {
  const json in = read_json_file(o.in);
  const GradedAlgebra A = algebra_or_spec(in);
  json parts = json::array();
  for (const auto& [p, P] : primary_decompose(A))
    parts.push_back({{"prime", p}, {"algebra", algebra_to_json(P)}});
  return {{"input", in}, {"parts", parts}, {"tensor_map_is_iso", primary_tensor_map_is_iso(A)}};
}

json cmd_iso(const Options& o) {
  const json ja = read_json_file(o.a), jb = read_json_file(o.b);
  const GradedAlgebra A = algebra_or_spec(ja), B = algebra_or_spec(jb);
  json r = {{"input", {{"a", ja}, {"b", jb}}}};
  const auto w = graded_iso_1dim(A, B);
  r["verdict"] = w ? "true" : "false";
  json wit = json::object();
  if (w) {
    json lam = json::array();
    for (std::size_t i = 0; i < w->support.size(); ++i)
      lam.push_back({element_to_json(w->support[i]), phase_to_json(w->lambda[i])});
    wit["scaling"] = lam;
  }
  r["witness"] = wit;
  return r;
}

json cmd_classify_real(const Options& o) {
  const FinAbGroup G = group_from_text(o.group);
  if (G.order() > 64) throw std::invalid_argument("classify-real supports |G| <= 64");
  if (o.item < 0 || o.item > 4) throw std::invalid_argument("--item must be 1..4");
  auto strata = classify_all(G, std::max(1, o.jobs), o.item);
  if (!o.all_subgroups)
    strata.erase(std::remove_if(strata.begin(), strata.end(),
                                [&](const Stratum& s) { return s.subgroup.order() != G.order(); }),
                 strata.end());
  json input = {{"group", group_to_json(G)}, {"item", o.item}, {"all_subgroups", o.all_subgroups}};
  std::map<std::string, int> counts{{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}};
  std::map<std::string, int> cases{{"3a", 0}, {"3b", 0}};
  bool all_ok = true, distinct = true;
  json strata_json = json::array();
  for (const auto& s : strata) {
    std::set<std::string> keys;
    json classes = json::array();
    std::map<std::string, int> local{{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}};
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      const auto& e = s.entries[i];
      std::string tag = item_tag(e.label.item);
      if (tag[0] == '3') ++cases[tag];
      ++counts[tag.substr(0, 1)];
      ++local[tag.substr(0, 1)];
      const bool ok = e.associative && e.graded_division && e.graded_central && e.stratum_ok;
      all_ok = all_ok && ok;
      if (!keys.insert(e.invariants.key()).second) distinct = false;
      if (o.count_only) continue;
      std::ostringstream id;
      id << s.presentation.group.to_string() << "/" << tag << "/" << i;
      classes.push_back({{"label", id.str()},
                         {"parameters", label_to_json(e.label)},
                         {"dimension", e.algebra.dim()},
                         {"algebra", algebra_to_json(e.algebra)},
                         {"verified", {{"associative", e.associative},
                                       {"graded_division", e.graded_division},
                                       {"graded_central", e.graded_central},
                                       {"stratum_ok", e.stratum_ok}}},
                         {"invariants", invariants_to_json(e.invariants)}});
    }
    json sj;
    json gens = json::array();
    for (const auto& g : s.subgroup.generators()) gens.push_back(element_to_json(g));
    sj["subgroup_generators"] = gens;
    sj["support"] = group_to_json(s.presentation.group);
    sj["counts"] = local;
    sj["total"] = s.entries.size();
    if (!o.count_only) sj["classes"] = classes;
    strata_json.push_back(sj);
  }
  int total = 0;
  for (const auto& [k, v] : counts) total += v;
  json r = {{"input", input},
            {"counts", counts},
            {"item3_cases", cases},
            {"total", total},
            {"all_verified", all_ok},
            {"invariants_distinct", distinct}};
  if (!o.count_only || o.all_subgroups) r["strata"] = strata_json;
  if (!all_ok) throw std::logic_error("a representative failed its oracles");
  return r;
}

json cmd_is_field(const Options& o) {
  const Field F = field_from_text(o.field);
  const FinAbGroup G = group_from_text(o.group);
  std::vector<Scalar> mu;
  for (const auto& s : split_commas(o.mu)) mu.push_back(scalar_from_text(F, s));
  if (static_cast<int>(mu.size()) != G.rank())
    throw std::invalid_argument("--mu needs one value per cyclic factor of --group");
  const GradedFieldSpec spec{F, G, mu};
  const Decision d = is_field_general(spec);
  json r = decision_to_json(F, d);
  r["input"] = {{"field", field_to_json(F)}, {"group", group_to_json(G)}, {"mu", o.mu}};
  if (o.full()) {
    json oracle = json::object();
    if (d.zero_divisor) {
      const GradedAlgebra A = graded_field_algebra(spec);
      const Vec w = A.multiply(d.zero_divisor->first, d.zero_divisor->second);
      const bool zero = std::all_of(w.begin(), w.end(), [&](const Scalar& x) { return F.is_zero(x); });
      if (!zero) throw std::logic_error("zero-divisor witness failed");
      oracle["zero_divisor_checked"] = true;
    }
    if (F.is_finite()) {
      double size = 1;
      for (std::int64_t i = 0; i < G.order(); ++i) size *= static_cast<double>(F.ff().size());
      if (size <= 65536) {
        const bool ex = is_field_exhaustive(graded_field_algebra(spec));
        oracle["exhaustive"] = ex;
        if (d.verdict != Verdict::kUndecided && ex != (d.verdict == Verdict::kTrue))
          throw std::logic_error("criterion disagrees with exhaustive search");
      }
    }
    r["oracle_checks"] = oracle;
  }
  return r;
}

json cmd_ff_grade(const Options& o) {
  if (o.ell < 1 || o.ell > 64 || o.k < 1) throw std::invalid_argument("need ell >= 1 and k >= 1");
  const Decision d = ff_grading_exists(o.p, static_cast<int>(o.ell), o.k);
  json r = {{"input", {{"p", o.p}, {"ell", o.ell}, {"k", o.k}, {"list_mu", o.list_mu}}},
            {"verdict", to_string(d.verdict)},
            {"reason", d.reason}};
  json wit = json::object();
  if (d.verdict == Verdict::kTrue) {
    const FiniteField F = FiniteField::construct(o.p, static_cast<int>(o.ell));
    const Field Fk = Field::finite(F);
    const auto mus = ff_grading_mus(o.p, static_cast<int>(o.ell), o.k);
    if (mus.empty()) throw std::logic_error("no mu although a grading exists");
    if (o.list_mu) {
      json a = json::array();
      for (auto m : mus) a.push_back(scalar_to_json(Fk, m));
      wit["mu_list"] = a;
    }
    wit["mu"] = scalar_to_json(Fk, mus.front());
    if (o.k <= 64) {
      const GradedAlgebra A =
          graded_field_algebra({Fk, FinAbGroup({static_cast<int>(o.k)}), {Scalar(mus.front())}});
      wit["algebra"] = algebra_to_json(A);
    }
    if (o.full() && !binomial_irreducible_berlekamp(F, mus.front(), o.k))
      throw std::logic_error("X^k - mu is reducible");
  }
  r["witness"] = wit;
  return r;
}

json galois_json(const GaloisCheck& g) {
  return {{"ok", g.ok}, {"automorphisms", g.automorphisms}, {"fixed_dim", g.fixed_dim},
          {"reason", g.reason}};
}

json cmd_frobenius(const Options& o) {
  if (o.ell < 1 || o.ell > 16) throw std::invalid_argument("need 1 <= ell <= 16");
  const GradedAlgebra A = frobenius_grading(o.p, static_cast<int>(o.ell), o.q);
  json r = {{"input", {{"p", o.p}, {"ell", o.ell}, {"q", o.q}}},
            {"algebra", algebra_to_json(A)},
            {"verdict", "true"}};
  if (o.full()) {
    r["verification"] = oracle_block(A);
    r["verification"]["galois"] = galois_json(dual_galois_check(A));
  }
  return r;
}

json cmd_kummer(const Options& o) {
  if (o.ell < 1 || o.ell > 16) throw std::invalid_argument("need 1 <= ell <= 16");
  if (!is_prime(o.p)) throw std::invalid_argument("p must be prime");
  const FiniteField F = FiniteField::construct(o.p, static_cast<int>(o.ell));
  const Field Fk = Field::finite(F);
  KummerSpec spec{F, o.n, {}};
  for (const auto& s : split_commas(o.lambda)) {
    const Scalar x = scalar_from_text(Fk, s);
    if (Fk.is_zero(x)) throw std::invalid_argument("Lambda generators must be nonzero");
    spec.lambda_gens.push_back(std::get<FFElem>(x));
  }
  const KummerResult res = kummer_grading(spec);
  json r = {{"input", {{"p", o.p}, {"ell", o.ell}, {"n", o.n}, {"lambda", o.lambda}}},
            {"k", res.k},
            {"a", scalar_to_json(Fk, res.a)},
            {"algebra", algebra_to_json(res.algebra)},
            {"verdict", "true"}};
  if (o.full()) {
    r["verification"] = oracle_block(res.algebra);
    r["verification"]["galois"] = galois_json(dual_galois_check(res.algebra));
  }
  return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult res;
  Options o;
  CLI::App app{"gda: graded-division algebras with abelian support", "gda"};
  app.require_subcommand(1);
  app.add_option("--oracle", o.oracle, "full re-runs the oracles on every output; fast trusts constructions")
      ->check(CLI::IsMember({"full", "fast"}));

  std::map<CLI::App*, std::function<json(const Options&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help,
                 std::function<json(const Options&)> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--out", o.out, "write the report here instead of stdout");
    handlers[s] = std::move(fn);
    return s;
  };

  auto* c = sub("construct", "build D(K, beta, mu) from {field, group, beta, mu}", cmd_construct);
  c->add_option("--in", o.in)->required();
  auto* inv = sub("invariants", "dimension, support, beta and mu of an algebra", cmd_invariants);
  inv->add_option("--in", o.in)->required();
  auto* dec = sub("decompose", "primary decomposition of an algebra", cmd_decompose);
  dec->add_option("--in", o.in)->required();
  auto* iso = sub("iso", "graded isomorphism of algebras with 1-dim components", cmd_iso);
  iso->add_option("--a", o.a)->required();
  iso->add_option("--b", o.b)->required();
  auto* cr = sub("classify-real", "real graded-division algebras with support G", cmd_classify_real);
  cr->add_option("--group", o.group, "cyclic orders, e.g. \"2,2\"")->required();
  cr->add_option("--item", o.item, "1..4; 0 for all");
  cr->add_flag("--count-only", o.count_only);
  cr->add_flag("--all-subgroups", o.all_subgroups, "every support T <= G, not only T = G");
  cr->add_option("--jobs", o.jobs);
  auto* isf = sub("is-field", "is the graded-field F[X_i]/(X_i^n_i - mu_i) a field", cmd_is_field);
  isf->add_option("--field", o.field, "Q, R, C(N), Q(zeta_N), GF(p), GF(p^l)")->required();
  isf->add_option("--group", o.group)->required();
  isf->add_option("--mu", o.mu)->required();
  auto* ff = sub("ff-grade", "does GF(p^(l k)) admit a Z_k-grading over GF(p^l)", cmd_ff_grade);
  ff->add_option("--p", o.p)->required();
  ff->add_option("--ell", o.ell);
  ff->add_option("--k", o.k)->required();
  ff->add_flag("--list-mu", o.list_mu);
  auto* fr = sub("frobenius-grade", "Frobenius eigenspace grading of GF(p^(q l))", cmd_frobenius);
  fr->add_option("--p", o.p)->required();
  fr->add_option("--ell", o.ell);
  fr->add_option("--q", o.q)->required();
  auto* ku = sub("kummer-grade", "Kummer grading by Lambda/(F^x)^n", cmd_kummer);
  ku->add_option("--p", o.p)->required();
  ku->add_option("--ell", o.ell);
  ku->add_option("--n", o.n)->required();
  ku->add_option("--lambda", o.lambda, "generators of Lambda")->required();
  auto* ver = sub("verify", "run every oracle on an algebra descriptor", cmd_verify);
  ver->add_option("--in", o.in)->required();

  auto fail = [&](int code, const std::string& msg) {
    res.exit_code = code;
    res.err = json{{"error", {{"code", code_name(code)}, {"message", msg}}}}.dump() + "\n";
    res.out.clear();
  };

  try {
    std::set<std::string> names;
    for (const auto& [s, fn] : handlers) names.insert(s->get_name());
    if (!args.empty() && !args[0].empty() && args[0][0] != '-' && !names.count(args[0]))
      throw CLI::ParseError("unknown subcommand \"" + args[0] + "\"", kExitUsage);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    CLI::App* chosen = app.get_subcommands().front();
    json report = handlers.at(chosen)(o);
    report["command"] = chosen->get_name();
    report["oracle"] = o.oracle;
    const std::string text = dump_canonical(report);
    if (!o.out.empty()) {
      std::ofstream f(o.out);
      if (!f || !(f << text) || !f.flush()) throw CliError(kExitIo, "cannot write " + o.out);
    } else {
      res.out = text;
    }
  } catch (const CLI::CallForHelp&) {
    res.out = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::ParseError& e) {
    fail(kExitUsage, e.what());
  } catch (const CliError& e) {
    fail(e.code(), e.what());
  } catch (const json::exception& e) {
    fail(kExitMalformedJson, e.what());
  } catch (const DescriptorError& e) {
    fail(kExitMalformedJson, e.what());
  } catch (const FactorBoundExceeded& e) {
    fail(kExitPrecondition, e.what());
  } catch (const std::invalid_argument& e) {
    fail(kExitPrecondition, e.what());
  } catch (const std::domain_error& e) {
    fail(kExitPrecondition, e.what());
  } catch (const std::out_of_range& e) {
    fail(kExitPrecondition, e.what());
  } catch (const Undecided& e) {
    fail(kExitPrecondition, e.what());
  } catch (const std::exception& e) {
    fail(kExitInternal, e.what());
  }
  return res;
}

}  // namespace gda
