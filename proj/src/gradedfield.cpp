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

#include "gda/gradedfield.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "gda/quasitorus.hpp"

namespace gda {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kFalse: return "false";
    case Verdict::kTrue: return "true";
    case Verdict::kUndecided: return "undecided";
  }
  return "?";
}

namespace {

Decision decided(bool v, std::string reason) {
  Decision d;
  d.verdict = v ? Verdict::kTrue : Verdict::kFalse;
  d.reason = std::move(reason);
  return d;
}

Decision undecided(std::string reason) {
  Decision d;
  d.reason = std::move(reason);
  return d;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo m for gcd(a, m) = 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::logic_error("inv_mod: not invertible");
  return ((x % m) + m) % m;
}

std::optional<FFElem> ff_nth_root(const FiniteField& F, FFElem x, std::int64_t n) {
  if (x == F.zero()) return F.zero();
  const std::int64_t m = F.size() - 1;
  const std::int64_t L = F.log(x);
  const std::int64_t d = std::gcd(n, m);
  if (L % d != 0) return std::nullopt;
  const std::int64_t md = m / d;
  const std::int64_t e = md == 1 ? 0 : mulmod(L / d, inv_mod((n / d) % md, md), md);
  const FFElem y = F.exp(e);
  if (F.pow(y, n) != x) throw std::logic_error("ff_nth_root: root check failed");
  return y;
}

// X^{deg} - c as a coefficient list.
std::vector<Scalar> binomial(const Field& F, std::int64_t deg, const Scalar& c) {
  std::vector<Scalar> v(deg + 1, F.zero());
  v[0] = F.neg(c);
  v[deg] = F.one();
  return v;
}

std::vector<std::int64_t> primes_of(std::int64_t n) { return prime_divisors(n); }

}  // namespace

std::optional<Scalar> nth_root(const Field& F, const Scalar& x, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("nth_root: n must be positive");
  switch (F.kind()) {
    case FieldKind::kRational:
    case FieldKind::kReal: {
      const Rational& r = std::get<Rational>(x);
      if (r == 0) return Scalar(Rational(0));
      const RationalFactorization f = factor_rational(r);
      if (f.sign < 0 && n % 2 == 0) return std::nullopt;
      Rational y = f.sign < 0 ? Rational(-1) : Rational(1);
      for (const auto& [p, e] : f.primes) {
        if (e % n != 0) return std::nullopt;
        y *= rational_pow(Rational(p), e / n);
      }
      return Scalar(y);
    }
    case FieldKind::kFinite: {
      auto y = ff_nth_root(F.ff(), std::get<FFElem>(x), n);
      if (!y) return std::nullopt;
      return Scalar(*y);
    }
    default:
      return std::nullopt;
  }
}

Decision binomial_irreducible(const Field& F, const Scalar& alpha, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("binomial: n must be positive");
  if (F.is_zero(alpha)) throw std::invalid_argument("binomial: alpha must be nonzero");
  if (n == 1) return decided(true, "degree 1");
  try {
    for (auto p : primes_of(n)) {
      if (F.is_nth_power(alpha, p)) {
        Decision d = decided(false, "condition (i): alpha is a " + std::to_string(p) +
                                        "-th power");
        if (auto y = nth_root(F, alpha, p)) d.factor = binomial(F, n / p, *y);
        return d;
      }
    }
    if (n % 4 == 0 && F.minus4_fourth_power_test(alpha)) {
      Decision d = decided(false, "condition (ii): alpha lies in -4 F^4");
      // alpha = -4 b^4: Y^4 + 4 b^4 = (Y^2 + 2bY + 2b^2)(Y^2 - 2bY + 2b^2), Y = X^{n/4}.
      const Scalar c = F.div(alpha, F.from_int(-4));
      if (auto b = nth_root(F, c, 4)) {
        const std::int64_t m = n / 4;
        std::vector<Scalar> f(2 * m + 1, F.zero());
        f[0] = F.mul(F.from_int(2), F.mul(*b, *b));
        f[m] = F.mul(F.from_int(-2), *b);
        f[2 * m] = F.one();
        d.factor = std::move(f);
      }
      return d;
    }
  } catch (const std::domain_error& e) {
    return undecided(std::string("power-residue test unavailable: ") + e.what());
  }
  return decided(true, "conditions (i) and (ii) hold");
}

bool binomial_irreducible_berlekamp(const FiniteField& F, FFElem alpha, std::int64_t n) {
  if (n == 1) return true;
  std::vector<FFElem> c(n + 1, F.zero());
  c[0] = F.neg(alpha);
  c[n] = F.one();
  return berlekamp_factor_count(FFPoly(&F, std::move(c))) == 1;
}

GradedAlgebra graded_field_algebra(const GradedFieldSpec& spec) {
  return construct_quasitorus(spec.field, AltBicharacter(spec.group),
                              MuFunction{spec.group, spec.mu});
}

namespace {

std::int64_t algebra_size(const GradedAlgebra& A) {
  const Field& F = A.field();
  if (!F.is_finite()) throw std::invalid_argument("exhaustive search needs a finite field");
  std::int64_t total = 1;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    total *= F.ff().size();
    if (total > (std::int64_t{1} << 20))
      throw std::invalid_argument("exhaustive search: algebra too large");
  }
  return total;
}

Vec vector_at(const GradedAlgebra& A, std::int64_t idx) {
  const std::int64_t q = A.field().ff().size();
  Vec v;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    v.push_back(FFElem{static_cast<std::uint32_t>(idx % q)});
    idx /= q;
  }
  return v;
}

}  // namespace

std::optional<std::pair<Vec, Vec>> find_zero_divisor(const GradedAlgebra& A) {
  const std::int64_t total = algebra_size(A);
  const Field& F = A.field();
  for (std::int64_t idx = 1; idx < total; ++idx) {
    const Vec u = vector_at(A, idx);
    const Mat L = A.left_mult_matrix(u);
    const auto ns = nullspace(F, L, A.dim());
    if (!ns.empty()) return std::make_pair(u, ns.front());
  }
  return std::nullopt;
}

bool is_field_exhaustive(const GradedAlgebra& A) {
  return is_commutative(A) && !find_zero_divisor(A).has_value();
}

namespace {

// GF(2) rank of bit rows.
std::size_t gf2_rank(std::vector<std::vector<char>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv][c]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

}  // namespace

Decision is_field_exponent2(const GradedFieldSpec& spec) {
  const Field& F = spec.field;
  const FinAbGroup& G = spec.group;
  if (static_cast<int>(spec.mu.size()) != G.rank())
    throw std::invalid_argument("graded field: one mu per factor");
  for (int o : G.orders())
    if (o != 2) throw std::invalid_argument("exponent-2 test needs every factor of order 2");
  if (F.characteristic() == 2) throw std::invalid_argument("exponent-2 test needs char != 2");
  for (const auto& m : spec.mu)
    if (F.is_zero(m)) throw std::invalid_argument("graded field: mu must be nonzero");
  const std::size_t m = spec.mu.size();
  if (m == 0) return decided(true, "trivial grading");

  // Square-class vectors over GF(2).
  std::vector<std::vector<char>> rows(m);
  switch (F.kind()) {
    case FieldKind::kRational: {
      std::vector<RationalFactorization> fs;
      std::set<BigInt> primes;
      for (const auto& x : spec.mu) {
        fs.push_back(factor_rational(std::get<Rational>(x)));
        for (const auto& [p, e] : fs.back().primes)
          if (e % 2 != 0) primes.insert(p);
      }
      const std::vector<BigInt> plist(primes.begin(), primes.end());
      for (std::size_t i = 0; i < m; ++i) {
        rows[i].push_back(fs[i].sign < 0 ? 1 : 0);
        for (const auto& p : plist) {
          int e = 0;
          for (const auto& [pp, ee] : fs[i].primes)
            if (pp == p) e = ee;
          rows[i].push_back(static_cast<char>(((e % 2) + 2) % 2));
        }
      }
      break;
    }
    case FieldKind::kReal:
      for (std::size_t i = 0; i < m; ++i)
        rows[i].push_back(std::get<Rational>(spec.mu[i]) < 0 ? 1 : 0);
      break;
    case FieldKind::kFinite:
      for (std::size_t i = 0; i < m; ++i)
        rows[i].push_back(static_cast<char>(F.ff().log(std::get<FFElem>(spec.mu[i])) % 2));
      break;
    default:
      return undecided("square classes are not computable over " + F.name());
  }
  if (gf2_rank(rows) == m) return decided(true, "square classes of mu are independent");

  Decision d = decided(false, "square classes of mu are dependent");
  // Least dependent subset by size, then by mask.
  std::vector<std::size_t> masks;
  for (std::size_t s = 1; s < (std::size_t{1} << m); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  for (auto s : masks) {
    std::vector<char> sum(rows[0].size(), 0);
    for (std::size_t i = 0; i < m; ++i)
      if ((s >> i) & 1)
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] ^= rows[i][k];
    if (std::any_of(sum.begin(), sum.end(), [](char c) { return c != 0; })) continue;
    Scalar prod = F.one();
    GroupElement g = G.identity();
    for (std::size_t i = 0; i < m; ++i)
      if ((s >> i) & 1) {
        prod = F.mul(prod, spec.mu[i]);
        g[i] = 1;
      }
    d.reason += "; the product over generator set " + to_string(g) + " is a square";
    auto y = nth_root(F, prod, 2);
    if (!y) break;
    const GradedAlgebra A = graded_field_algebra(spec);
    const std::size_t idx = G.index_of(g);
    Vec u = zero_vec(F, A.dim()), v = zero_vec(F, A.dim());
    u[idx] = F.one();
    v[idx] = F.one();
    u[0] = F.neg(*y);
    v[0] = *y;
    const Vec w = A.multiply(u, v);
    if (std::any_of(w.begin(), w.end(), [&](const Scalar& x) { return !F.is_zero(x); }))
      throw std::logic_error("exponent-2 witness is not a zero divisor");
    d.zero_divisor = std::make_pair(u, v);
    break;
  }
  return d;
}

namespace {

// x in (GF(Q)^x)^n where x lies in the subfield GF(q), Q = q^d; `ord` is the
// multiplicative order of x.
bool power_in_extension(std::int64_t q, std::int64_t d, std::int64_t ord, std::int64_t n) {
  // x is an n-th power iff ord * gcd(n, Q-1) divides Q - 1.
  std::int64_t g = 1;
  for (std::int64_t c = 1; c <= n; ++c)
    if (n % c == 0 && powmod(q, d, c) == 1 % c) g = c;
  const std::int64_t M = ord * g;
  return powmod(q, d, M) == 1 % M;
}

}  // namespace

Decision is_field_p_primary(const GradedFieldSpec& spec) {
  const Field& F = spec.field;
  const FinAbGroup& G = spec.group;
  if (static_cast<int>(spec.mu.size()) != G.rank())
    throw std::invalid_argument("graded field: one mu per factor");
  std::int64_t p = 0;
  std::vector<std::pair<std::int64_t, Scalar>> steps;  // (n_i, mu_i), n_i > 1
  for (int i = 0; i < G.rank(); ++i) {
    const std::int64_t n = G.orders()[i];
    if (F.is_zero(spec.mu[i])) throw std::invalid_argument("graded field: mu must be nonzero");
    if (n == 1) continue;
    const auto ps = prime_divisors(n);
    if (ps.size() != 1 || (p != 0 && ps[0] != p))
      throw std::invalid_argument("p-primary test needs a p-group");
    p = ps[0];
    steps.emplace_back(n, spec.mu[i]);
  }
  if (steps.empty()) return decided(true, "trivial grading");

  // Necessary condition: the mu_i are independent modulo p-th powers.
  const std::size_t m = steps.size();
  try {
    std::int64_t combos = 1;
    for (std::size_t i = 0; i < m; ++i) combos *= p;
    for (std::int64_t c = 1; c < combos; ++c) {
      Scalar prod = F.one();
      std::int64_t r = c;
      for (std::size_t i = 0; i < m; ++i, r /= p) prod = F.mul(prod, F.pow(steps[i].second, r % p));
      if (F.is_nth_power(prod, p))
        return decided(false, "mu classes are dependent modulo " + std::to_string(p) +
                                  "-th powers");
    }
  } catch (const std::domain_error& e) {
    return undecided(std::string("power-residue test unavailable: ") + e.what());
  }

  switch (F.kind()) {
    case FieldKind::kFinite: {
      const FiniteField& ff = F.ff();
      const std::int64_t q = ff.size();
      std::int64_t d = 1;
      for (std::size_t i = 0; i < m; ++i) {
        const auto [n, mu] = steps[i];
        const FFElem x = std::get<FFElem>(mu);
        const std::string where = "step " + std::to_string(i + 1) + " over GF(" +
                                  std::to_string(q) + "^" + std::to_string(d) + ")";
        if (power_in_extension(q, d, ff.multiplicative_order(x), p))
          return decided(false, where + ": condition (i), mu is a " + std::to_string(p) +
                                    "-th power");
        if (n % 4 == 0 && p == 2) {
          const FFElem c = ff.div(ff.neg(x), ff.from_int(4));
          if (power_in_extension(q, d, ff.multiplicative_order(c), 4))
            return decided(false, where + ": condition (ii), mu lies in -4 K^4");
        }
        d *= n;
      }
      return decided(true, "every binomial step of the tower is irreducible; the field is GF(" +
                               std::to_string(q) + "^" + std::to_string(d) + ")");
    }
    case FieldKind::kReal: {
      Decision first = binomial_irreducible(F, steps[0].second, steps[0].first);
      if (first.verdict != Verdict::kTrue) return first;
      if (m > 1) return decided(false, "the first step gives C, over which no binomial of degree > 1 is irreducible");
      return first;
    }
    case FieldKind::kComplex:
      return decided(false, "C is algebraically closed");
    case FieldKind::kRational: {
      if (m == 1) return binomial_irreducible(F, steps[0].second, steps[0].first);
      bool exp2 = p == 2;
      for (const auto& s : steps) exp2 = exp2 && s.first == 2;
      if (exp2) {
        std::vector<int> orders(m, 2);
        std::vector<Scalar> mus;
        for (const auto& s : steps) mus.push_back(s.second);
        return is_field_exponent2({F, FinAbGroup(orders), mus});
      }
      return undecided("towers over Q of depth > 1 with exponent > 2 need residue tests in number fields");
    }
    default:
      return undecided("no decision procedure over " + F.name());
  }
}

Decision is_field_general(const GradedFieldSpec& spec) {
  const Field& F = spec.field;
  const FinAbGroup& G = spec.group;
  if (static_cast<int>(spec.mu.size()) != G.rank())
    throw std::invalid_argument("graded field: one mu per factor");
  for (int i = 0; i < G.rank(); ++i)
    if (G.orders()[i] > 1 && F.is_one(spec.mu[i]))
      return decided(false, "X^" + std::to_string(G.orders()[i]) + " - 1 is reducible");
  std::vector<std::string> reasons;
  bool any_undecided = false;
  for (auto p : prime_divisors(G.order())) {
    std::vector<int> orders;
    std::vector<Scalar> mus;
    for (int i = 0; i < G.rank(); ++i) {
      std::int64_t n = G.orders()[i], pk = 1;
      while (n % p == 0) {
        n /= p;
        pk *= p;
      }
      if (pk == 1) continue;
      orders.push_back(static_cast<int>(pk));
      mus.push_back(spec.mu[i]);
    }
    GradedFieldSpec part{F, FinAbGroup(orders), mus};
    bool exp2 = p == 2 && F.characteristic() != 2 &&
                std::all_of(orders.begin(), orders.end(), [](int o) { return o == 2; });
    Decision d = exp2 ? is_field_exponent2(part) : is_field_p_primary(part);
    const std::string tag = std::to_string(p) + "-part: " + d.reason;
    if (d.verdict == Verdict::kFalse) {
      Decision out = decided(false, tag);
      if (prime_divisors(G.order()).size() == 1) out = d;
      return out;
    }
    if (d.verdict == Verdict::kUndecided) any_undecided = true;
    reasons.push_back(tag);
  }
  std::string all;
  for (const auto& r : reasons) all += (all.empty() ? "" : "; ") + r;
  if (reasons.empty()) all = "trivial grading";
  if (any_undecided) return undecided(all);
  return decided(true, all);
}

Decision ff_grading_exists(std::int64_t p, int ell, std::int64_t k) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (ell < 1 || k < 1) throw std::invalid_argument("ell and k must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < ell; ++i) {
    if (q > (std::int64_t{1} << 62) / p) throw std::invalid_argument("p^ell too large");
    q *= p;
  }
  const std::int64_t m = q - 1;
  for (auto r : prime_divisors(k))
    if (m % r != 0)
      return decided(false, "condition (i): " + std::to_string(r) + " does not divide p^ell - 1");
  if (k % 4 == 0 && m % 4 != 0) return decided(false, "condition (ii)");
  return decided(true, "conditions (i) and (ii) hold");
}

std::vector<FFElem> ff_grading_mus(std::int64_t p, int ell, std::int64_t k) {
  if (ff_grading_exists(p, ell, k).verdict != Verdict::kTrue) return {};
  const FiniteField F = FiniteField::construct(p, ell);
  const std::int64_t m = F.size() - 1;
  std::vector<FFElem> out;
  for (std::int64_t v = 1; v < F.size(); ++v) {
    const FFElem mu{static_cast<std::uint32_t>(v)};
    bool ok = true;
    for (auto r : prime_divisors(k)) ok = ok && F.pow(mu, m / r) != F.one();
    if (ok) out.push_back(mu);
  }
  return out;
}

namespace {

// phi: F -> L, with the inverse on the image.
struct Embedding {
  std::vector<FFElem> image;                       // by F index
  std::unordered_map<std::uint32_t, FFElem> back;  // L index -> F element
};

Embedding embed(const FiniteField& F, const FiniteField& L) {
  if (F.characteristic() != L.characteristic() || L.degree() % F.degree() != 0)
    throw std::invalid_argument("no embedding between these fields");
  FFElem r = L.zero();
  if (F.degree() > 1) {
    bool found = false;
    for (std::int64_t v = 0; v < L.size() && !found; ++v) {
      const FFElem x{static_cast<std::uint32_t>(v)};
      FFElem acc = L.zero();
      const auto& mod = F.modulus();
      for (std::size_t i = mod.size(); i-- > 0;) acc = L.add(L.mul(acc, x), L.from_int(mod[i]));
      if (acc == L.zero()) {
        r = x;
        found = true;
      }
    }
    if (!found) throw std::logic_error("embedding: modulus has no root");
  }
  Embedding e;
  for (std::int64_t v = 0; v < F.size(); ++v) {
    const FFElem a{static_cast<std::uint32_t>(v)};
    FFElem img = L.zero();
    if (F.degree() == 1) {
      img = L.from_int(v);
    } else {
      const auto c = F.coeffs(a);
      for (std::size_t i = c.size(); i-- > 0;) img = L.add(L.mul(img, r), L.from_int(c[i]));
    }
    e.image.push_back(img);
    e.back.emplace(img.v, a);
  }
  if (e.back.size() != static_cast<std::size_t>(F.size()))
    throw std::logic_error("embedding is not injective");
  return e;
}

FFElem pull_back(const Embedding& e, FFElem x) {
  auto it = e.back.find(x.v);
  if (it == e.back.end()) throw std::logic_error("element is not in the base field");
  return it->second;
}

}  // namespace

GradedAlgebra frobenius_grading(std::int64_t p, int ell, std::int64_t q) {
  if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("p and q must be prime");
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  const FiniteField F = FiniteField::construct(p, ell);
  if ((F.size() - 1) % q != 0) throw std::invalid_argument("q must divide p^ell - 1");
  const FiniteField L = FiniteField::construct(p, static_cast<int>(q) * ell);
  const Embedding e = embed(F, L);
  const std::int64_t Q = F.size();
  auto psi = [&](FFElem y) { return L.pow(y, Q); };
  const FFElem zeta = F.root_of_unity(q);
  const FFElem z = e.image[zeta.v];

  std::vector<FFElem> Y;
  for (std::int64_t v = 1; v < L.size() && Y.empty(); ++v) {
    const FFElem s{static_cast<std::uint32_t>(v)};
    std::vector<FFElem> cand{L.one()};
    for (std::int64_t i = 1; i < q; ++i) {
      // pi_i(s) = sum_j zeta^{-ij} psi^j(s)
      FFElem acc = L.zero(), pj = s;
      const FFElem zi = L.inv(L.pow(z, i));
      FFElem w = L.one();
      for (std::int64_t j = 0; j < q; ++j) {
        acc = L.add(acc, L.mul(w, pj));
        pj = psi(pj);
        w = L.mul(w, zi);
      }
      if (acc == L.zero()) break;
      cand.push_back(acc);
    }
    if (static_cast<std::int64_t>(cand.size()) == q) Y = std::move(cand);
  }
  if (Y.empty()) throw std::logic_error("frobenius grading: no eigenbasis found");
  for (std::int64_t i = 0; i < q; ++i)
    if (psi(Y[i]) != L.mul(L.pow(z, i), Y[i]))
      throw std::logic_error("frobenius grading: eigenvector check failed");

  const Field Fk = Field::finite(F);
  const FinAbGroup G({static_cast<int>(q)});
  std::vector<GroupElement> degs;
  for (std::int64_t i = 0; i < q; ++i) degs.push_back(GroupElement({static_cast<int>(i)}));
  std::vector<SparseVec> table(q * q);
  for (std::int64_t i = 0; i < q; ++i)
    for (std::int64_t j = 0; j < q; ++j) {
      const std::int64_t k = (i + j) % q;
      const FFElem c = pull_back(e, L.div(L.mul(Y[i], Y[j]), Y[k]));
      table[i * q + j] = {{static_cast<std::size_t>(k), Scalar(c)}};
    }
  Vec unit = zero_vec(Fk, q);
  unit[0] = Fk.one();
  return GradedAlgebra(Fk, G, degs, std::move(table), std::move(unit));
}

KummerResult kummer_grading(const KummerSpec& spec) {
  const FiniteField& F = spec.base;
  const std::int64_t n = spec.n;
  const std::int64_t m = F.size() - 1;
  if (n < 1 || m % n != 0)
    throw std::invalid_argument("kummer: the base field needs a primitive n-th root of unity");
  // Lambda / (F^x)^n inside F^x / (F^x)^n = Z_n via discrete logs.
  std::int64_t g = n;
  std::vector<std::int64_t> coef(spec.lambda_gens.size(), 0);  // sum coef_i log_i = g mod n
  for (std::size_t i = 0; i < spec.lambda_gens.size(); ++i) {
    if (spec.lambda_gens[i] == F.zero()) throw std::invalid_argument("kummer: zero generator");
    const std::int64_t li = F.log(spec.lambda_gens[i]) % n;
    // extended gcd of (g, li)
    std::int64_t a = g, b = li, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      const std::int64_t t = a / b;
      std::tie(a, b) = std::make_pair(b, a - t * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
      std::tie(y0, y1) = std::make_pair(y1, y0 - t * y1);
    }
    // a = x0 * g + y0 * li
    for (std::size_t k = 0; k < i; ++k) coef[k] = ((coef[k] * x0) % n + n) % n;
    coef[i] = ((y0 % n) + n) % n;
    g = a;
  }
  KummerResult res;
  res.k = n / g;
  FFElem a = F.one();
  for (std::size_t i = 0; i < coef.size(); ++i)
    a = F.mul(a, F.pow(spec.lambda_gens[i], coef[i]));
  if (res.k > 1 && F.log(a) % n != g % n) throw std::logic_error("kummer: generator mismatch");
  res.a = res.k == 1 ? F.one() : a;
  const Field Fk = Field::finite(F);
  const std::int64_t k = res.k;
  const FinAbGroup G({static_cast<int>(k)});
  std::vector<GroupElement> degs;
  for (std::int64_t i = 0; i < k; ++i) degs.push_back(GroupElement({static_cast<int>(i)}));
  std::vector<SparseVec> table(k * k);
  if (k == 1) {
    table[0] = {{0, Fk.one()}};
  } else {
    const FiniteField L = FiniteField::construct(F.characteristic(), F.degree() * static_cast<int>(k));
    const Embedding e = embed(F, L);
    const auto alpha = ff_nth_root(L, e.image[res.a.v], n);
    if (!alpha) throw std::logic_error("kummer: no n-th root in the extension");
    const FFElem b = pull_back(e, L.pow(*alpha, k));
    for (std::int64_t i = 0; i < k; ++i)
      for (std::int64_t j = 0; j < k; ++j) {
        const std::int64_t s = i + j;
        table[i * k + j] = s < k ? SparseVec{{static_cast<std::size_t>(s), Fk.one()}}
                                 : SparseVec{{static_cast<std::size_t>(s - k), Scalar(b)}};
      }
    // alpha has degree exactly k over F.
    for (std::int64_t d = 1; d < k; ++d)
      if (e.back.count(L.pow(*alpha, d).v)) throw std::logic_error("kummer: degree too small");
  }
  Vec unit = zero_vec(Fk, k);
  unit[0] = Fk.one();
  res.algebra = GradedAlgebra(Fk, G, degs, std::move(table), std::move(unit));
  return res;
}

GaloisCheck dual_galois_check(const GradedAlgebra& A) {
  GaloisCheck r;
  const Field& F = A.field();
  const FinAbGroup& G = A.group();
  const std::int64_t e = G.exponent();
  if (!F.has_root(Phase(1, e))) {
    r.reason = "the base field has no primitive exp(G)-th root of unity";
    return r;
  }
  if (!is_commutative(A)) {
    r.reason = "not commutative";
    return r;
  }
  // Characters chi_c(g) = e(sum_i c_i g_i / n_i).
  std::set<std::vector<Phase>> distinct;
  std::vector<char> fixed(A.dim(), 1);
  bool automorphic = true;
  for (const auto& c : G.elements()) {
    auto chi = [&](const GroupElement& g) {
      Phase ph;
      for (int i = 0; i < G.rank(); ++i)
        ph = ph + Phase(static_cast<std::int64_t>(c[i]) * g[i], G.orders()[i]);
      return ph;
    };
    std::vector<Phase> on_basis;
    for (std::size_t b = 0; b < A.dim(); ++b) {
      on_basis.push_back(chi(A.degree(b)));
      if (!on_basis.back().is_trivial()) fixed[b] = 0;
    }
    for (std::size_t i = 0; i < A.dim() && automorphic; ++i)
      for (std::size_t j = 0; j < A.dim() && automorphic; ++j)
        for (const auto& [k, val] : A.product(i, j)) {
          (void)val;
          if (on_basis[i] + on_basis[j] != on_basis[k]) automorphic = false;
        }
    distinct.insert(on_basis);
  }
  r.automorphisms = distinct.size();
  r.fixed_dim = static_cast<std::size_t>(std::count(fixed.begin(), fixed.end(), 1));
  const bool division = is_graded_division(A);
  r.ok = automorphic && division && r.automorphisms == static_cast<std::size_t>(G.order()) &&
         r.fixed_dim == 1;
  if (!automorphic) r.reason = "a character does not act multiplicatively";
  else if (!division) r.reason = "not a graded-division algebra";
  else if (r.automorphisms != static_cast<std::size_t>(G.order()))
    r.reason = "characters do not separate the support";
  else if (r.fixed_dim != 1) r.reason = "fixed space is larger than the base field";
  else r.reason = "|G| distinct automorphisms with fixed field F";
  return r;
}

}  // namespace gda
