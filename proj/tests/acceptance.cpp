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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
// Usage: acceptance [--jobs N] [--only K]

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gda/cli.hpp"
#include "gda/gradedfield.hpp"
#include "gda/json_io.hpp"
#include "gda/quasitorus.hpp"
#include "gda/realclass.hpp"

namespace gda {
namespace {

int g_jobs = 1;

// Collects failure messages for one criterion; only the first few print.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

FFElem el(std::int64_t v) { return {static_cast<std::uint32_t>(v)}; }

std::vector<std::pair<int, int>> prime_powers_up_to(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    int q = p;
    for (int ell = 1; q <= bound; ++ell, q *= p) out.emplace_back(p, ell);
  }
  return out;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// mu on the generators of K, each entry drawn from `values`.
std::vector<MuFunction> all_mus(const Field& F, const FinAbGroup& K, const std::vector<int>& values) {
  std::vector<MuFunction> out{MuFunction{K, {}}};
  for (int i = 0; i < K.rank(); ++i) {
    std::vector<MuFunction> next;
    for (const auto& m : out)
      for (int v : values) {
        MuFunction n = m;
        n.gens.push_back(F.from_int(v));
        next.push_back(n);
      }
    out = std::move(next);
  }
  return out;
}

// Every abelian group with |K| <= 16, every sign bicharacter and every sign
// mu: a real mu is determined up to isomorphism by the signs of mu_i.
Tally criterion1() {
  Tally t;
  const Field R = Field::real();
  for (int n = 1; n <= 16; ++n)
    for (const auto& K : groups_of_order(n))
      for (const auto& b : enumerate_bicharacters_pm1(K))
        for (const auto& mu : all_mus(R, K, {1, -1})) {
          const GradedAlgebra A = construct_quasitorus(R, b, mu);
          t.expect(verify_associative(A).ok, "associativity " + K.to_string());
          t.expect(is_graded_division(A), "graded division " + K.to_string());
        }
  return t;
}

// The invariants of a datum as functions on K: beta(s, t) and the real
// class of mu(t) modulo o(t)-th powers.
bool data_agree(const Field& R, const AltBicharacter& b1, const std::map<GroupElement, Scalar>& m1,
                const AltBicharacter& b2, const std::map<GroupElement, Scalar>& m2) {
  if (!(b1 == b2)) return false;
  const FinAbGroup& K = b1.group();
  for (const auto& t : K.elements())
    if (!R.same_power_class(m1.at(t), m2.at(t), element_order(K, t))) return false;
  return true;
}

// The same algebra in the basis X'_i = sign_i X_i.
GradedAlgebra rescale(const GradedAlgebra& A, const std::vector<int>& sign) {
  const Field& F = A.field();
  const std::size_t n = A.dim();
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j))
        table[i * n + j].emplace_back(k, F.mul(c, F.from_int(sign[i] * sign[j] * sign[k])));
  Vec unit = A.unit();
  for (std::size_t i = 0; i < n; ++i) unit[i] = F.mul(unit[i], F.from_int(sign[i]));
  return GradedAlgebra(F, A.group(), A.degrees(), table, unit);
}

// All pairs of sign data, each algebra also taken in a few sign-rescaled
// bases; the iso oracle needs constants normalized to +-1, which rescaling
// by signs preserves.
Tally criterion2() {
  Tally t;
  const Field R = Field::real();
  std::mt19937 rng(20260412);
  for (const auto& K : {FinAbGroup({2}), FinAbGroup({4}), FinAbGroup({2, 2})}) {
    struct Datum {
      AltBicharacter beta;
      std::map<GroupElement, Scalar> mu;
      GradedAlgebra algebra;
    };
    std::vector<Datum> data;
    for (const auto& b : enumerate_bicharacters_pm1(K))
      for (const auto& mu : all_mus(R, K, {1, -1})) {
        const GradedAlgebra A = construct_quasitorus(R, b, mu);
        const auto m = validate_mu(R, b, mu);
        data.push_back({b, m, A});
        for (int v = 0; v < 3; ++v) {
          std::vector<int> sign(A.dim());
          for (std::size_t i = 0; i < A.dim(); ++i) sign[i] = A.degree(i).is_zero() || rng() % 2 ? 1 : -1;
          data.push_back({b, m, rescale(A, sign)});
        }
      }
    for (const auto& a : data)
      for (const auto& c : data) {
        const bool iso = graded_iso_1dim(a.algebra, c.algebra).has_value();
        t.expect(iso == data_agree(R, a.beta, a.mu, c.beta, c.mu), "iso disagreement on " + K.to_string());
      }
  }
  return t;
}

Tally criterion3() {
  Tally t;
  for (auto [p, ell] : prime_powers_up_to(64)) {
    const auto FF = FiniteField::construct(p, ell);
    const Field F = Field::finite(FF);
    for (int n = 1; n <= 12; ++n)
      for (std::int64_t v = 1; v < FF.size(); ++v) {
        const Decision d = binomial_irreducible(F, el(v), n);
        t.expect(d.verdict != Verdict::kUndecided &&
                     (d.verdict == Verdict::kTrue) == binomial_irreducible_berlekamp(FF, el(v), n),
                 FF.to_string() + " n=" + std::to_string(n) + " a=" + std::to_string(v));
      }
  }
  const Field Q = Field::rational();
  const Decision x4 = binomial_irreducible(Q, Q.from_int(-4), 4);
  t.expect(x4.verdict == Verdict::kFalse && x4.factor.has_value(), "X^4+4 reducible with a factor");
  t.expect(binomial_irreducible(Q, Q.from_int(2), 3).verdict == Verdict::kTrue, "X^3-2 irreducible");
  return t;
}

Tally criterion4() {
  Tally t;
  for (auto [p, ell] : prime_powers_up_to(64)) {
    const auto FF = FiniteField::construct(p, ell);
    for (int k = 1; k <= 12; ++k) {
      std::vector<FFElem> brute;
      for (std::int64_t v = 1; v < FF.size(); ++v)
        if (binomial_irreducible_berlekamp(FF, el(v), k)) brute.push_back(el(v));
      const std::string where = FF.to_string() + " k=" + std::to_string(k);
      t.expect((ff_grading_exists(p, ell, k).verdict == Verdict::kTrue) == !brute.empty(), "existence " + where);
      t.expect(ff_grading_mus(p, ell, k) == brute, "mu list " + where);
    }
  }
  // GF(2^{q^alpha}): no nontrivial k = q^beta.
  for (int q : {2, 3, 5, 7, 11, 13})
    for (int alpha = 1; ipow(q, alpha) <= 60; ++alpha)
      for (int beta = 1; beta <= alpha; ++beta)
        t.expect(ff_grading_exists(2, static_cast<int>(ipow(q, alpha - beta)), ipow(q, beta)).verdict ==
                     Verdict::kFalse,
                 "GF(2^" + std::to_string(ipow(q, alpha)) + ") k=" + std::to_string(ipow(q, beta)));
  // GF(p^{q ell}) with q | p^ell - 1: a Z_q grading exists; built when small.
  for (auto [p, ell] : prime_powers_up_to(64)) {
    const std::int64_t m = ipow(p, ell) - 1;
    for (int q = 2; q <= 64; ++q) {
      if (!is_prime(q) || m % q != 0) continue;
      const std::string where = std::to_string(p) + "^" + std::to_string(ell) + " q=" + std::to_string(q);
      t.expect(ff_grading_exists(p, ell, q).verdict == Verdict::kTrue, "ex3 family " + where);
      if (static_cast<double>(q) * ell * std::log2(static_cast<double>(p)) > 16) continue;
      const GradedAlgebra A = frobenius_grading(p, ell, q);
      t.expect(A.dim() == static_cast<std::size_t>(q) && A.support().size() == static_cast<std::size_t>(q),
               "frobenius support " + where);
      t.expect(verify_associative(A).ok && is_graded_division(A), "frobenius oracles " + where);
      t.expect(dual_galois_check(A).ok, "frobenius galois " + where);
    }
  }
  return t;
}

Tally criterion5() {
  Tally t;
  for (int q : {3, 5, 7, 11}) {
    const Field F = Field::finite(FiniteField::construct(q, 1));
    for (int m = 1; m <= 2; ++m) {
      const FinAbGroup G(std::vector<int>(m, 2));
      for (const auto& mu : all_mus(F, G, [&] {
             std::vector<int> v;
             for (int a = 1; a < q; ++a) v.push_back(a);
             return v;
           }())) {
        const GradedFieldSpec s{F, G, mu.gens};
        const GradedAlgebra A = graded_field_algebra(s);
        const Decision d = is_field_exponent2(s);
        const std::string where = "GF(" + std::to_string(q) + ") m=" + std::to_string(m);
        t.expect(d.verdict != Verdict::kUndecided && (d.verdict == Verdict::kTrue) == is_field_exhaustive(A),
                 "exponent-2 " + where);
        if (d.zero_divisor) {
          const Vec w = A.multiply(d.zero_divisor->first, d.zero_divisor->second);
          t.expect(std::all_of(w.begin(), w.end(), [&](const Scalar& c) { return F.is_zero(c); }),
                   "zero divisor witness " + where);
        }
      }
    }
  }
  const Field Q = Field::rational();
  const FinAbGroup V({2, 2});
  t.expect(is_field_exponent2({Q, V, {Q.from_int(2), Q.from_int(3)}}).verdict == Verdict::kTrue, "Q (2,3) field");
  const GradedFieldSpec s28{Q, V, {Q.from_int(2), Q.from_int(8)}};
  const Decision d = is_field_exponent2(s28);
  bool witness_ok = d.verdict == Verdict::kFalse && d.zero_divisor.has_value();
  if (witness_ok) {
    const Vec w = graded_field_algebra(s28).multiply(d.zero_divisor->first, d.zero_divisor->second);
    for (const auto& c : w) witness_ok = witness_ok && Q.is_zero(c);
  }
  t.expect(witness_ok, "Q (2,8) non-field with witness");
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tally criterion6() {
  Tally t;
  for (const auto& [orders, text, golden] : std::vector<std::tuple<std::vector<int>, std::string, std::string>>{
           {{2}, "2", "census_2.json"}, {{4}, "4", "census_4.json"}, {{2, 2}, "2,2", "census_2_2.json"}}) {
    const FinAbGroup G(orders);
    std::set<std::string> keys;
    const auto labels = labels_for_support(G);
    for (const auto& l : labels) {
      const VerifiedEntry e = verify_label(l);
      t.expect(e.associative && e.graded_division && e.graded_central && e.stratum_ok, "oracles on " + text);
      keys.insert(e.invariants.key());
    }
    t.expect(keys.size() == labels.size(), "distinct invariants on " + text);
    const CommandResult r =
        run({"classify-real", "--group", text, "--count-only", "--jobs", std::to_string(g_jobs)});
    t.expect(r.exit_code == kExitOk, "classify-real exit on " + text);
    if (r.exit_code != kExitOk) continue;
    json got = json::parse(r.out), want = json::parse(read_file(std::string(GDA_GOLDEN_DIR) + "/" + golden));
    t.expect(got["counts"] == want["counts"] && got["total"] == want["total"], "golden counts on " + text);
    t.expect(got["all_verified"] == true && got["invariants_distinct"] == true, "census flags on " + text);
  }
  return t;
}

Tally criterion7() {
  Tally t;
  for (int n = 2; n <= 16; n += 2)
    for (const auto& T : groups_of_order(n))
      for (const auto& K : index2_subgroups(T))
        for (const auto& b : enumerate_bicharacters_pm1(K.presentation().group)) {
          std::optional<IndexTwoData> d;
          try {
            d.emplace(T, K, b);
          } catch (const std::invalid_argument&) {
            continue;  // T^[2] not in rad beta: no item-(3) data
          }
          for (const auto& nu : enumerate_admissible(*d))
            for (const auto& t0 : d->nu_domain()) {
              const auto [mu, delta] = item3_data_at(*d, t0, nu);
              t.expect(canonicalize_item3(*d, t0, mu, delta) == nu, "t0 independence on " + T.to_string());
            }
        }
  return t;
}

Tally criterion8() {
  Tally t;
  const GradedAlgebra F = frobenius_grading(7, 1, 3);
  const auto F7 = FiniteField::construct(7, 1);
  const KummerResult K = kummer_grading({F7, 3, {F7.from_int(3)}});
  t.expect(graded_iso_1dim(F, K.algebra).has_value(), "graded isomorphism");
  for (const auto* A : {&F, &K.algebra}) {
    const GaloisCheck g = dual_galois_check(*A);
    t.expect(g.ok && g.automorphisms == 3 && g.fixed_dim == 1, "dual Galois check: " + g.reason);
  }
  return t;
}

}  // namespace
}  // namespace gda

int main(int argc, char** argv) {
  std::size_t only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--jobs" && i + 1 < argc) {
      gda::g_jobs = std::max(1, std::atoi(argv[++i]));
    } else if (a == "--only" && i + 1 < argc) {
      only = static_cast<std::size_t>(std::max(0, std::atoi(argv[++i])));
    } else {
      std::cerr << "usage: acceptance [--jobs N] [--only K]\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<gda::Tally()>>> criteria{
      {"quasitorus constructions pass associativity and graded-division oracles", gda::criterion1},
      {"1-dim isomorphism oracle agrees with (beta, mu)", gda::criterion2},
      {"binomial criterion agrees with Berlekamp factorization", gda::criterion3},
      {"finite-field grading existence agrees with exhaustive scan", gda::criterion4},
      {"exponent-2 criterion agrees with zero-divisor search", gda::criterion5},
      {"real census passes oracles with distinct invariants and golden counts", gda::criterion6},
      {"item-(3) canonical nu is independent of t0", gda::criterion7},
      {"Frobenius and Kummer gradings of GF(343) agree", gda::criterion8},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != i + 1) continue;
    gda::Tally t;
    std::string error;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && t.failures.empty();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << t.checks << " checks";
    if (!t.failures.empty()) std::cout << ", " << t.failures.size() << " failed";
    std::cout << ")\n";
    if (!error.empty()) std::cout << "  exception: " << error << "\n";
    for (std::size_t k = 0; k < t.failures.size() && k < 5; ++k) std::cout << "  " << t.failures[k] << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
