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

#include "gda/quasitorus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gda {

namespace {

void check_inputs(const Field& F, const AltBicharacter& beta, const MuFunction& mu) {
  const FinAbGroup& K = beta.group();
  if (!(mu.group == K)) throw std::invalid_argument("beta and mu are on different groups");
  if (static_cast<int>(mu.gens.size()) != K.rank())
    throw std::invalid_argument("mu needs one value per generator");
  for (int i = 0; i < K.rank(); ++i) {
    if (F.is_zero(mu.gens[i])) throw std::invalid_argument("mu value is zero");
    for (int j = i + 1; j < K.rank(); ++j) {
      Phase ph = beta.generator_value(i, j);
      if (!F.has_root(ph))
        throw std::invalid_argument("beta value " + to_string(ph) + " is not available in " +
                                    F.name());
    }
  }
}

std::int64_t p_part(std::int64_t n, std::int64_t p) {
  std::int64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  a %= m;
  for (std::int64_t x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  return 0;  // m == 1
}

struct Term {
  GroupElement g;
  std::int64_t order;
  Scalar mu;  // class representative mod order
};

// Sum of two elements of the same p-group lying in independent cyclic
// summands, so o(g + h) = max(o(g), o(h)).
Term combine_p(const Field& F, const FinAbGroup& K, const AltBicharacter& beta, std::int64_t p,
               const Term& a, const Term& b) {
  Term r{K.add(a.g, b.g), std::max(a.order, b.order), F.one()};
  if (a.order > b.order) {
    r.mu = F.mul(a.mu, F.pow(b.mu, a.order / b.order));
  } else if (b.order > a.order) {
    r.mu = F.mul(b.mu, F.pow(a.mu, b.order / a.order));
  } else {
    r.mu = F.mul(a.mu, b.mu);
    if (p == 2 && a.order > 1)
      r.mu = F.mul(r.mu, F.root_of_unity(beta(a.g, b.g) * (a.order / 2)));
  }
  r.mu = F.nth_power_class(r.mu, r.order);
  return r;
}

// Coprime orders.
Term combine_coprime(const Field& F, const FinAbGroup& K, const Term& a, const Term& b) {
  Term r{K.add(a.g, b.g), a.order * b.order, F.one()};
  r.mu = F.nth_power_class(F.mul(F.pow(a.mu, b.order), F.pow(b.mu, a.order)), r.order);
  return r;
}

Scalar mu_of(const Field& F, const AltBicharacter& beta, const MuFunction& mu,
             const GroupElement& g, bool reversed) {
  const FinAbGroup& K = beta.group();
  std::vector<Term> parts;
  for (auto p : prime_divisors(K.order())) {
    std::vector<Term> terms;
    for (int i = 0; i < K.rank(); ++i) {
      const std::int64_t n = K.orders()[i];
      const std::int64_t pk = p_part(n, p);
      if (pk == 1) continue;
      const std::int64_t cof = n / pk;
      std::int64_t c = (g[i] % pk) * inverse_mod(cof, pk) % pk;
      if (c == 0) continue;
      std::int64_t u = c, div = 1;
      while (u % p == 0) {
        u /= p;
        div *= p;
      }
      GroupElement b = K.identity();
      b[i] = static_cast<int>((c * cof) % n);
      const std::int64_t ord = pk / div;
      terms.push_back({b, ord, F.nth_power_class(F.pow(mu.gens[i], u), ord)});
    }
    if (terms.empty()) continue;
    if (reversed) std::reverse(terms.begin(), terms.end());
    Term acc = terms[0];
    for (std::size_t t = 1; t < terms.size(); ++t) acc = combine_p(F, K, beta, p, acc, terms[t]);
    parts.push_back(acc);
  }
  if (parts.empty()) return F.one();
  if (reversed) std::reverse(parts.begin(), parts.end());
  Term acc = parts[0];
  for (std::size_t t = 1; t < parts.size(); ++t) acc = combine_coprime(F, K, acc, parts[t]);
  if (acc.g != g) throw std::logic_error("mu: factorization does not reproduce the element");
  return acc.mu;
}

}  // namespace

GradedAlgebra construct_quasitorus(const Field& F, const AltBicharacter& beta,
                                   const MuFunction& mu) {
  check_inputs(F, beta, mu);
  const FinAbGroup& K = beta.group();
  const std::size_t n = K.order();
  const int m = K.rank();
  const auto elems = K.elements();
  std::vector<std::vector<Phase>> bij(m, std::vector<Phase>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) bij[i][j] = beta.generator_value(i, j);
  std::vector<SparseVec> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& a = elems[x];
      const auto& b = elems[y];
      Phase ph;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
          if (a[i] && b[j]) ph = ph + bij[i][j] * (static_cast<std::int64_t>(a[i]) * b[j]);
      Scalar c = F.root_of_unity(ph);
      for (int i = 0; i < m; ++i)
        if (a[i] + b[i] >= K.orders()[i]) c = F.mul(c, mu.gens[i]);
      table[x * n + y] = {{K.add_index(x, y), c}};
    }
  Vec unit = zero_vec(F, n);
  unit[0] = F.one();
  return GradedAlgebra(F, K, elems, std::move(table), std::move(unit));
}

std::map<GroupElement, Scalar> validate_mu(const Field& F, const AltBicharacter& beta,
                                           const MuFunction& mu) {
  check_inputs(F, beta, mu);
  std::map<GroupElement, Scalar> out;
  for (const auto& g : beta.group().elements()) {
    Scalar fwd = mu_of(F, beta, mu, g, false);
    Scalar bwd = mu_of(F, beta, mu, g, true);
    if (!F.eq(fwd, bwd))
      throw std::logic_error("mu extension is inconsistent at " + to_string(g));
    out.emplace(g, fwd);
  }
  return out;
}

namespace {

std::vector<std::pair<std::int64_t, std::vector<GroupElement>>> primary_supports(
    const GradedAlgebra& A) {
  const auto supp = A.support();
  std::vector<std::pair<std::int64_t, std::vector<GroupElement>>> out;
  for (auto p : prime_divisors(static_cast<std::int64_t>(supp.size()))) {
    std::vector<GroupElement> s;
    for (const auto& t : supp) {
      std::int64_t o = element_order(A.group(), t);
      while (o % p == 0) o /= p;
      if (o == 1) s.push_back(t);
    }
    out.emplace_back(p, std::move(s));
  }
  return out;
}

}  // namespace

bool primary_tensor_map_is_iso(const GradedAlgebra& A) {
  if (!A.has_1dim_components()) throw std::invalid_argument("primary decomposition: components");
  const auto parts = primary_supports(A);
  const FinAbGroup& G = A.group();
  auto X = [&](const GroupElement& t) { return A.basis_vector(A.component(t).front()); };
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (const auto& s : parts[a].second)
        for (const auto& t : parts[b].second)
          if (A.multiply(X(s), X(t)) != A.multiply(X(t), X(s))) return false;
  std::size_t total = 1;
  for (auto& [p, s] : parts) total *= s.size();
  if (total != A.support().size()) return false;
  std::set<GroupElement> seen;
  std::vector<std::size_t> idx(parts.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    Vec v = A.unit();
    GroupElement d = G.identity();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const auto& t = parts[k].second[idx[k]];
      v = A.multiply(v, X(t));
      d = G.add(d, t);
    }
    const std::size_t c = A.component(d).empty() ? A.dim() : A.component(d).front();
    if (c == A.dim() || A.field().is_zero(v[c]) || !seen.insert(d).second) return false;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (++idx[k] < parts[k].second.size()) break;
      idx[k] = 0;
    }
  }
  return true;
}

std::vector<std::pair<std::int64_t, GradedAlgebra>> primary_decompose(const GradedAlgebra& A) {
  if (!primary_tensor_map_is_iso(A))
    throw std::logic_error("primary parts do not decompose the algebra");
  std::vector<std::pair<std::int64_t, GradedAlgebra>> out;
  for (auto& [p, s] : primary_supports(A)) {
    std::vector<Vec> basis;
    for (const auto& t : s) basis.push_back(A.basis_vector(A.component(t).front()));
    out.emplace_back(p, A.subalgebra(basis));
  }
  return out;
}

}  // namespace gda
