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

#include "gda/realclass.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gda/quasitorus.hpp"

namespace gda {

namespace {

std::vector<std::vector<Phase>> cartesian(const std::vector<std::vector<Phase>>& choices) {
  std::vector<std::vector<Phase>> out{{}};
  for (const auto& c : choices) {
    std::vector<std::vector<Phase>> next;
    for (const auto& prefix : out)
      for (const auto& v : c) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<AltBicharacter> enumerate_with(const FinAbGroup& T,
                                           std::vector<Phase> (*values)(int, int)) {
  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<Phase>> choices;
  for (int i = 0; i < T.rank(); ++i)
    for (int j = i + 1; j < T.rank(); ++j) {
      slots.emplace_back(i, j);
      choices.push_back(values(T.orders()[i], T.orders()[j]));
    }
  std::vector<AltBicharacter> out;
  for (const auto& vals : cartesian(choices)) {
    std::vector<std::tuple<int, int, Phase>> pairs;
    for (std::size_t k = 0; k < slots.size(); ++k)
      pairs.emplace_back(slots[k].first, slots[k].second, vals[k]);
    out.emplace_back(T, pairs);
  }
  return out;
}

std::vector<Phase> sign_values(int a, int b) {
  if (a % 2 == 0 && b % 2 == 0) return {Phase(), Phase(1, 2)};
  return {Phase()};
}

std::vector<Phase> root_values(int a, int b) {
  const int d = std::gcd(a, b);
  std::vector<Phase> v;
  for (int k = 0; k < d; ++k) v.emplace_back(k, d);
  return v;
}

bool is_two_torsion(const FinAbGroup& T, const GroupElement& g) {
  return T.add(g, g).is_zero();
}

Scalar sign_scalar(int s) { return Rational(s); }

int sign_of_rational(const Scalar& x) {
  const Rational& r = std::get<Rational>(x);
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

// Gaussian rationals, used only to multiply the 2x2 matrices of item (3).
struct Gauss {
  Rational re, im;
  bool is_zero() const { return re == 0 && im == 0; }
  Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
  Gauss operator*(const Gauss& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
};

using CVec = std::vector<Gauss>;          // element of C, by X index
using CMat = std::array<CVec, 4>;         // row-major 2x2 over C

}  // namespace

std::vector<AltBicharacter> enumerate_bicharacters_pm1(const FinAbGroup& T) {
  return enumerate_with(T, sign_values);
}

std::vector<AltBicharacter> enumerate_bicharacters_complex(const FinAbGroup& T) {
  return enumerate_with(T, root_values);
}

int sign_of(const AltBicharacter& beta, const GroupElement& g, const GroupElement& h) {
  const Phase ph = beta(g, h);
  if (ph.den == 1) return 1;
  if (ph.den == 2) return -1;
  throw std::invalid_argument("bicharacter value " + to_string(ph) + " is not a sign");
}

bool is_quadratic_form(const AltBicharacter& beta, const SignMap& mu) {
  const FinAbGroup& T = beta.group();
  const auto t2 = two_torsion(T).elements();
  if (mu.size() != t2.size()) return false;
  for (const auto& g : t2) {
    auto it = mu.find(g);
    if (it == mu.end() || (it->second != 1 && it->second != -1)) return false;
  }
  if (mu.at(T.identity()) != 1) return false;
  for (const auto& g : t2)
    for (const auto& h : t2)
      if (mu.at(T.add(g, h)) != sign_of(beta, g, h) * mu.at(g) * mu.at(h)) return false;
  return true;
}

std::vector<SignMap> enumerate_quadratic_forms(const AltBicharacter& beta) {
  const FinAbGroup& T = beta.group();
  std::vector<GroupElement> basis;
  for (int i = 0; i < T.rank(); ++i)
    if (T.orders()[i] % 2 == 0) basis.push_back(T.scale(T.generator(i), T.orders()[i] / 2));
  const std::size_t r = basis.size();
  std::vector<SignMap> out;
  for (std::size_t free = 0; free < (std::size_t{1} << r); ++free) {
    std::vector<int> val(std::size_t{1} << r, 1);
    std::vector<GroupElement> elt(std::size_t{1} << r, T.identity());
    for (std::size_t mask = 1; mask < val.size(); ++mask) {
      std::size_t i = 0;
      while (!((mask >> i) & 1)) ++i;
      const std::size_t rest = mask & ~(std::size_t{1} << i);
      elt[mask] = T.add(elt[rest], basis[i]);
      const int bi = ((free >> i) & 1) ? -1 : 1;
      val[mask] = sign_of(beta, elt[rest], basis[i]) * val[rest] * bi;
    }
    SignMap mu;
    for (std::size_t mask = 0; mask < val.size(); ++mask) mu[elt[mask]] = val[mask];
    if (!is_quadratic_form(beta, mu))
      throw std::logic_error("quadratic form extension failed for " + beta.to_string());
    out.push_back(std::move(mu));
  }
  return out;
}

std::vector<SignMap> quadratic_forms_by_filter(const AltBicharacter& beta) {
  const FinAbGroup& T = beta.group();
  const auto t2 = two_torsion(T).elements();  // identity first
  std::vector<SignMap> out;
  const std::size_t n = t2.size() - 1;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    SignMap mu;
    mu[t2[0]] = 1;
    for (std::size_t k = 0; k < n; ++k) mu[t2[k + 1]] = ((m >> k) & 1) ? -1 : 1;
    if (is_quadratic_form(beta, mu)) out.push_back(std::move(mu));
  }
  return out;
}

GradedAlgebra real_quasitorus(const AltBicharacter& beta, const SignMap& mu) {
  if (!beta.is_sign_valued()) throw std::invalid_argument("real quasitorus: beta must be +-1");
  if (!is_quadratic_form(beta, mu))
    throw std::invalid_argument("real quasitorus: mu is not a quadratic form for beta");
  const FinAbGroup& T = beta.group();
  MuFunction m{T, {}};
  for (int i = 0; i < T.rank(); ++i) {
    const int n = T.orders()[i];
    m.gens.push_back(sign_scalar(n % 2 == 0 ? mu.at(T.scale(T.generator(i), n / 2)) : 1));
  }
  return construct_quasitorus(Field::real(), beta, m);
}

GradedAlgebra quaternions(const FinAbGroup& G) {
  const Field F = Field::real();
  // b0 = 1, b1 = i, b2 = j, b3 = k; row a, column b: b_a b_b = s * b_idx.
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<SparseVec> table(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a * 4 + b] = {{idx[a][b], sign_scalar(sgn[a][b])}};
  Vec unit = zero_vec(F, 4);
  unit[0] = F.one();
  return GradedAlgebra(F, G, std::vector<GroupElement>(4, G.identity()), std::move(table),
                       std::move(unit));
}

// --- item (3) ------------------------------------------------------------

IndexTwoData::IndexTwoData(FinAbGroup T, Subgroup K, AltBicharacter beta)
    : T_(std::move(T)), K_(std::move(K)), beta_(std::move(beta)) {
  if (!(K_.ambient() == T_) || K_.index_in_ambient() != 2)
    throw std::invalid_argument("item (3): K must have index 2 in T");
  Kp_ = K_.presentation();
  if (!(beta_.group() == Kp_.group))
    throw std::invalid_argument("item (3): beta must live on the presentation of K");
  if (!beta_.is_sign_valued()) throw std::invalid_argument("item (3): beta must be +-1");
  for (const auto& x : Kp_.group.elements()) coords_.emplace(Kp_.embed(T_, x), x);
  k2_ = two_torsion(K_).elements();
  const auto kel = K_.elements();
  for (const auto& t : T_.elements()) {
    const GroupElement t2 = T_.add(t, t);
    for (const auto& k : kel)
      if (beta_at(t2, k) != 1)
        throw std::invalid_argument("item (3): T^[2] is not contained in rad beta");
  }
  for (const auto& t : T_.elements())
    if (!K_.contains(t)) {
      summand_ = is_direct_summand(K_, t);
      break;
    }
}

const GroupElement& IndexTwoData::coords(const GroupElement& k) const {
  auto it = coords_.find(k);
  if (it == coords_.end()) throw std::invalid_argument("element " + to_string(k) + " not in K");
  return it->second;
}

int IndexTwoData::beta_at(const GroupElement& g, const GroupElement& h) const {
  return sign_of(beta_, coords(g), coords(h));
}

std::vector<GroupElement> IndexTwoData::nu_domain() const {
  std::vector<GroupElement> out;
  for (const auto& t : T_.elements())
    if (!K_.contains(t) && (!summand_ || is_two_torsion(T_, t))) out.push_back(t);
  return out;
}

bool is_admissible(const IndexTwoData& d, const SignMap& nu) {
  const auto dom = d.nu_domain();
  if (nu.size() != dom.size()) return false;
  for (const auto& t : dom)
    if (!nu.count(t)) return false;
  const FinAbGroup& T = d.T();
  const auto gs = d.direct_summand() ? d.k2() : d.K().elements();
  for (const auto& t : dom)
    for (const auto& g : gs)
      for (const auto& h : d.k2()) {
        const int lhs = nu.at(T.add(T.add(t, g), h)) * nu.at(t);
        const int rhs = nu.at(T.add(t, g)) * nu.at(T.add(t, h)) * d.beta_at(g, h);
        if (lhs != rhs) return false;
      }
  return true;
}

namespace {

// Least element of each K_[2]-coset inside the domain, with the coset.
std::vector<std::pair<GroupElement, std::vector<GroupElement>>> k2_cosets(const IndexTwoData& d) {
  std::vector<std::pair<GroupElement, std::vector<GroupElement>>> out;
  std::set<GroupElement> seen;
  for (const auto& t : d.nu_domain()) {
    if (seen.count(t)) continue;
    std::vector<GroupElement> c;
    for (const auto& h : d.k2()) c.push_back(d.T().add(t, h));
    std::sort(c.begin(), c.end());
    for (const auto& x : c) seen.insert(x);
    out.emplace_back(t, std::move(c));
  }
  return out;
}

}  // namespace

SignMap canonical_nu(const IndexTwoData& d, const SignMap& nu) {
  if (d.direct_summand()) return nu;
  SignMap out = nu;
  for (const auto& [m, coset] : k2_cosets(d)) {
    const int s = nu.at(m);
    for (const auto& x : coset) out[x] = nu.at(x) * s;
  }
  return out;
}

std::vector<SignMap> enumerate_admissible(const IndexTwoData& d) {
  const auto dom = d.nu_domain();
  if (dom.size() > 20) throw std::invalid_argument("admissible maps: domain too large");
  std::vector<SignMap> out;
  for (std::size_t m = 0; m < (std::size_t{1} << dom.size()); ++m) {
    SignMap nu;
    for (std::size_t k = 0; k < dom.size(); ++k) nu[dom[k]] = ((m >> k) & 1) ? -1 : 1;
    if (!is_admissible(d, nu)) continue;
    if (!d.direct_summand() && canonical_nu(d, nu) != nu) continue;
    out.push_back(std::move(nu));
  }
  return out;
}

std::pair<SignMap, int> change_base_point(const IndexTwoData& d, const SignMap& mu, int delta,
                                          const GroupElement& g) {
  SignMap out;
  for (const auto& [h, v] : mu) out[h] = v * d.beta_at(g, h);
  const bool in_k2 = mu.count(g) != 0;
  return {out, in_k2 ? delta * mu.at(g) : delta};
}

namespace {

void check_k2_form(const IndexTwoData& d, const SignMap& mu) {
  const auto k2 = d.k2();
  bool ok = mu.size() == k2.size();
  for (const auto& g : k2) ok = ok && mu.count(g);
  if (ok) ok = mu.at(d.T().identity()) == 1;
  for (const auto& g : k2)
    for (const auto& h : k2)
      if (ok && mu.at(d.T().add(g, h)) != d.beta_at(g, h) * mu.at(g) * mu.at(h)) ok = false;
  if (!ok) throw std::invalid_argument("item (3): mu is not a quadratic form on K_[2]");
}

void check_in_domain(const IndexTwoData& d, const GroupElement& t0) {
  const auto dom = d.nu_domain();
  if (std::find(dom.begin(), dom.end(), t0) == dom.end())
    throw std::invalid_argument("item (3): t0 = " + to_string(t0) + " is not a valid base point");
}

}  // namespace

SignMap canonicalize_item3(const IndexTwoData& d, const GroupElement& t0, const SignMap& mu,
                           int delta) {
  check_in_domain(d, t0);
  check_k2_form(d, mu);
  const FinAbGroup& T = d.T();
  SignMap nu;
  if (d.direct_summand()) {
    if (delta != 1 && delta != -1) throw std::invalid_argument("item (3a): delta must be +-1");
    for (const auto& t : d.nu_domain()) nu[t] = delta * mu.at(T.sub(t, t0));
  } else {
    for (const auto& [m, coset] : k2_cosets(d)) {
      const auto mu_m = change_base_point(d, mu, 1, T.sub(m, t0)).first;
      for (const auto& x : coset) nu[x] = mu_m.at(T.sub(x, m));
    }
  }
  if (!is_admissible(d, nu)) throw std::logic_error("item (3): transported map is not admissible");
  return nu;
}

std::pair<SignMap, int> item3_data_at(const IndexTwoData& d, const GroupElement& t0,
                                      const SignMap& nu) {
  check_in_domain(d, t0);
  SignMap mu;
  for (const auto& h : d.k2()) mu[h] = nu.at(d.T().add(t0, h)) * nu.at(t0);
  return {mu, nu.at(t0)};
}

GradedAlgebra construct_item3(const IndexTwoData& d, const GroupElement& t0, const SignMap& mu,
                              int delta) {
  check_in_domain(d, t0);
  check_k2_form(d, mu);
  const FinAbGroup& T = d.T();
  const FinAbGroup& Q = d.K_presentation().group;
  SignMap mu_q;
  for (const auto& [h, v] : mu) mu_q[d.coords(h)] = v;
  const GradedAlgebra C = real_quasitorus(d.beta(), mu_q);
  const std::size_t nk = C.dim();
  auto xi = [&](const GroupElement& s) { return Q.index_of(d.coords(s)); };

  auto cmul = [&](const CVec& a, const CVec& b) {
    CVec r(nk);
    for (std::size_t i = 0; i < nk; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < nk; ++j) {
        if (b[j].is_zero()) continue;
        for (const auto& [k, c] : C.product(i, j))
          r[k] = r[k] + a[i] * b[j] * Gauss{std::get<Rational>(c), 0};
      }
    }
    return r;
  };
  auto cscale = [&](const CVec& a, const Gauss& z) {
    CVec r(nk);
    for (std::size_t i = 0; i < nk; ++i) r[i] = a[i] * z;
    return r;
  };
  auto cbasis = [&](const GroupElement& s) {
    CVec r(nk);
    r[xi(s)] = Gauss{1, 0};
    return r;
  };
  auto mmul = [&](const CMat& a, const CMat& b) {
    CMat r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CVec acc(nk);
        for (int k = 0; k < 2; ++k) {
          const CVec p = cmul(a[i * 2 + k], b[k * 2 + j]);
          for (std::size_t x = 0; x < nk; ++x) acc[x] = acc[x] + p[x];
        }
        r[i * 2 + j] = std::move(acc);
      }
    return r;
  };

  const int lambda = d.direct_summand() ? delta : 1;
  if (lambda != 1 && lambda != -1) throw std::invalid_argument("item (3a): delta must be +-1");
  const Gauss I{0, 1}, mI{0, -1};
  const GroupElement two_t0 = T.add(t0, t0);
  const auto elems = T.elements();
  std::vector<CMat> basis;
  std::vector<GroupElement> degs;
  for (const auto& t : elems) {
    CMat Y, JY;
    if (d.K().contains(t)) {
      const CVec x = cbasis(t);
      Y = {x, CVec(nk), CVec(nk), x};
      JY = {cscale(x, I), CVec(nk), CVec(nk), cscale(x, mI)};
    } else {
      const GroupElement s = T.sub(t, t0);
      const CVec top = cmul(cbasis(two_t0), cbasis(s));
      const CVec bottom = cscale(cbasis(s), Gauss{lambda, 0});
      Y = {CVec(nk), top, bottom, CVec(nk)};
      JY = {CVec(nk), cscale(top, I), cscale(bottom, mI), CVec(nk)};
    }
    basis.push_back(std::move(Y));
    basis.push_back(std::move(JY));
    degs.push_back(t);
    degs.push_back(t);
  }

  const Field F = Field::real();
  const std::size_t n = basis.size();
  // Writes M = a Y_t + b JY_t with real a, b, or throws.
  auto decompose = [&](const CMat& M, std::size_t t_index) {
    const CMat& Y = basis[2 * t_index];
    const CMat& JY = basis[2 * t_index + 1];
    int pos = -1;
    std::size_t coord = 0;
    for (int e = 0; e < 4 && pos < 0; ++e)
      for (std::size_t x = 0; x < nk; ++x)
        if (!Y[e][x].is_zero()) {
          pos = e;
          coord = x;
          break;
        }
    const Rational y = Y[pos][coord].re;        // Y has real entries
    const Rational j = JY[pos][coord].im;       // JY = +-i Y there
    const Gauss& m = M[pos][coord];
    const Rational a = m.re / y, b = m.im / j;
    for (int e = 0; e < 4; ++e)
      for (std::size_t x = 0; x < nk; ++x)
        if (!(Y[e][x] * Gauss{a, 0} + JY[e][x] * Gauss{b, 0} == M[e][x]))
          throw std::logic_error("item (3): product leaves the real form");
    return std::pair<Rational, Rational>(a, b);
  };

  std::vector<SparseVec> table(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const CMat M = mmul(basis[p], basis[q]);
      const std::size_t ti = T.index_of(T.add(degs[p], degs[q]));
      auto [a, b] = decompose(M, ti);
      Vec v = zero_vec(F, n);
      v[2 * ti] = a;
      v[2 * ti + 1] = b;
      table[p * n + q] = to_sparse(F, v);
    }
  Vec unit = zero_vec(F, n);
  unit[0] = F.one();
  return GradedAlgebra(F, T, degs, std::move(table), std::move(unit));
}

bool square_central_check(const GradedAlgebra& A, const GroupElement& t) {
  const auto& ce = A.component(A.group().identity());
  const auto& ct = A.component(t);
  if (ce.size() != 2 || ct.empty()) return false;
  const Field& F = A.field();
  const Vec J = A.basis_vector(ce[1]);
  const Vec Y = A.basis_vector(ct[0]);
  const Vec YJ = A.multiply(Y, J), JY = A.multiply(J, Y);
  Vec negJY = JY;
  for (auto& x : negJY) x = F.neg(x);
  if (YJ != negJY) return false;
  const Vec sq = A.multiply(Y, Y);
  if (A.multiply(JY, JY) != sq) return false;
  bool nonzero = false;
  for (const auto& x : sq) nonzero = nonzero || !F.is_zero(x);
  if (!nonzero) return false;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Vec b = A.basis_vector(i);
    if (A.multiply(sq, b) != A.multiply(b, sq)) return false;
  }
  return A.inverse(Y).has_value();
}

// --- labels and the census -----------------------------------------------

std::string item_tag(RealItem it) {
  switch (it) {
    case RealItem::kOne: return "1";
    case RealItem::kTwo: return "2";
    case RealItem::kThreeA: return "3a";
    case RealItem::kThreeB: return "3b";
    case RealItem::kFour: return "4";
  }
  return "?";
}

IndexTwoData item3_data(const RealClassLabel& label) {
  return IndexTwoData(label.T, Subgroup::generated_by(label.T, label.K_gens), label.beta);
}

GradedAlgebra construct_item(const RealClassLabel& label) {
  switch (label.item) {
    case RealItem::kOne:
      return real_quasitorus(label.beta, label.mu);
    case RealItem::kTwo:
      return tensor_with_trivially_graded(real_quasitorus(label.beta, label.mu),
                                          quaternions(label.T));
    case RealItem::kThreeA:
    case RealItem::kThreeB: {
      const IndexTwoData d = item3_data(label);
      if ((label.item == RealItem::kThreeA) != d.direct_summand())
        throw std::invalid_argument("item (3): case tag does not match the direct-summand test");
      if (!is_admissible(d, label.nu)) throw std::invalid_argument("item (3): nu not admissible");
      const GroupElement t0 = d.nu_domain().front();
      auto [mu, delta] = item3_data_at(d, t0, label.nu);
      return construct_item3(d, t0, mu, delta);
    }
    case RealItem::kFour: {
      const auto e = label.T.exponent();
      const int N = static_cast<int>(std::lcm<std::int64_t>(4, e));
      const Field F = Field::complex(N);
      MuFunction m{label.T, std::vector<Scalar>(label.T.rank(), F.one())};
      return construct_quasitorus(F, label.beta, m);
    }
  }
  throw std::logic_error("unknown item");
}

namespace {

// c with u v = c v u, for nonzero homogeneous u, v with v u != 0.
Scalar commutation_scalar(const GradedAlgebra& A, const Vec& u, const Vec& v) {
  const Field& F = A.field();
  const Vec uv = A.multiply(u, v), vu = A.multiply(v, u);
  for (std::size_t i = 0; i < vu.size(); ++i)
    if (!F.is_zero(vu[i])) {
      const Scalar c = F.div(uv[i], vu[i]);
      for (std::size_t k = 0; k < vu.size(); ++k)
        if (!F.eq(uv[k], F.mul(c, vu[k])))
          throw std::invalid_argument("commutation: elements do not commute up to a scalar");
      return c;
    }
  throw std::invalid_argument("commutation: zero product");
}

// x = c y for y != 0; returns c.
Scalar ratio(const Field& F, const Vec& x, const Vec& y) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!F.is_zero(y[i])) {
      const Scalar c = F.div(x[i], y[i]);
      for (std::size_t k = 0; k < y.size(); ++k)
        if (!F.eq(x[k], F.mul(c, y[k]))) throw std::invalid_argument("ratio: not proportional");
      return c;
    }
  throw std::invalid_argument("ratio: zero vector");
}

const char* sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

std::string RealInvariants::key() const {
  std::ostringstream os;
  os << "dim_e=" << dim_e << ";central=" << e_central << ";comm=" << e_commutative << ";supp=";
  for (const auto& g : support) os << to_string(g);
  os << ";K=";
  for (const auto& g : cent_support) os << to_string(g);
  os << ";beta=" << beta << ";squares=" << squares;
  return os.str();
}

RealInvariants real_invariants(const GradedAlgebra& A) {
  RealInvariants r;
  const Field& F = A.field();
  const FinAbGroup& G = A.group();
  r.support = A.support();
  if (F.kind() == FieldKind::kComplex) {
    r.dim_e = 2 * static_cast<int>(A.component(G.identity()).size());
    r.e_central = true;
    r.e_commutative = true;
    r.cent_support = r.support;
    const AltBicharacter b = commutation_bicharacter(A);
    const AltBicharacter bi = b.inverse();
    r.beta = (b <=> bi) <= 0 ? b.to_string() : bi.to_string();
    return r;
  }
  if (F.kind() != FieldKind::kReal)
    throw std::invalid_argument("real invariants need an algebra over R or C");
  const auto& ce = A.component(G.identity());
  r.dim_e = static_cast<int>(ce.size());
  std::vector<Vec> ebasis;
  for (auto i : ce) ebasis.push_back(A.basis_vector(i));
  const GradedAlgebra E = identity_component(A);
  r.e_commutative = is_commutative(E);
  r.e_central = true;
  for (const auto& x : ebasis)
    for (std::size_t i = 0; i < A.dim() && r.e_central; ++i) {
      const Vec b = A.basis_vector(i);
      if (A.multiply(x, b) != A.multiply(b, x)) r.e_central = false;
    }
  const auto cent = centralizer(A, ebasis);
  std::map<GroupElement, Vec> rep;  // one nonzero element per degree of Cent(A_e)
  for (const auto& [g, vs] : cent)
    if (!vs.empty()) {
      r.cent_support.push_back(g);
      rep.emplace(g, vs.front());
    }
  std::ostringstream bs;
  for (std::size_t a = 0; a < r.cent_support.size(); ++a)
    for (std::size_t b = a + 1; b < r.cent_support.size(); ++b) {
      const auto& s = r.cent_support[a];
      const auto& t = r.cent_support[b];
      const int c = sign_of_rational(commutation_scalar(A, rep.at(s), rep.at(t)));
      if (c < 0) bs << to_string(s) << to_string(t) << "-";
    }
  r.beta = bs.str();

  std::ostringstream sq;
  const Vec one = A.unit();
  if (r.cent_support.size() == r.support.size()) {
    // Items (1), (2): sign of X_t^{o(t)} in R^x / (R^x)^{o(t)}.
    for (const auto& t : r.cent_support) {
      const std::int64_t o = element_order(G, t);
      if (o % 2 != 0 || t.is_zero()) continue;
      const int s = sign_of_rational(ratio(F, A.power(rep.at(t), o), one));
      sq << to_string(t) << sign_char(s);
    }
  } else {
    // Item (3): signs of squares on T_[2] \ K and ratios across K_[2]-cosets.
    std::vector<GroupElement> k2;
    for (const auto& g : r.cent_support)
      if (is_two_torsion(G, g)) k2.push_back(g);
    std::set<GroupElement> K(r.cent_support.begin(), r.cent_support.end());
    auto square = [&](const GroupElement& t) {
      const Vec y = A.basis_vector(A.component(t).front());
      return A.multiply(y, y);
    };
    for (const auto& t : r.support) {
      if (K.count(t)) continue;
      const Vec st = square(t);
      if (is_two_torsion(G, t)) sq << to_string(t) << sign_char(sign_of_rational(ratio(F, st, one)));
      for (const auto& h : k2) {
        if (h.is_zero()) continue;
        const int s = sign_of_rational(ratio(F, square(G.add(t, h)), st));
        sq << "[" << to_string(t) << to_string(h) << sign_char(s) << "]";
      }
    }
  }
  r.squares = sq.str();
  return r;
}

std::vector<RealClassLabel> labels_for_support(const FinAbGroup& T) {
  std::vector<RealClassLabel> out;
  const auto pm1 = enumerate_bicharacters_pm1(T);
  for (RealItem it : {RealItem::kOne, RealItem::kTwo})
    for (const auto& b : pm1)
      for (auto& mu : enumerate_quadratic_forms(b)) {
        RealClassLabel l;
        l.item = it;
        l.T = T;
        l.beta = b;
        l.mu = std::move(mu);
        out.push_back(std::move(l));
      }
  for (const auto& K : index2_subgroups(T)) {
    const Presentation Kp = K.presentation();
    for (const auto& b : enumerate_bicharacters_pm1(Kp.group)) {
      std::optional<IndexTwoData> d;
      try {
        d.emplace(T, K, b);
      } catch (const std::invalid_argument&) {
        continue;  // T^[2] not in rad beta
      }
      for (auto& nu : enumerate_admissible(*d)) {
        RealClassLabel l;
        l.item = d->direct_summand() ? RealItem::kThreeA : RealItem::kThreeB;
        l.T = T;
        l.beta = b;
        l.K_gens = K.generators();
        l.nu = std::move(nu);
        out.push_back(std::move(l));
      }
    }
  }
  for (const auto& b : enumerate_bicharacters_complex(T)) {
    if ((b <=> b.inverse()) > 0) continue;
    RealClassLabel l;
    l.item = RealItem::kFour;
    l.T = T;
    l.beta = b;
    out.push_back(std::move(l));
  }
  return out;
}

VerifiedEntry verify_label(const RealClassLabel& label) {
  VerifiedEntry e{label, construct_item(label), false, false, false, false, {}};
  const GradedAlgebra& A = e.algebra;
  e.associative = verify_associative(A).ok;
  e.graded_division = e.associative && is_graded_division(A);
  e.invariants = real_invariants(A);
  const RealInvariants& r = e.invariants;
  switch (label.item) {
    case RealItem::kOne:
      e.stratum_ok = r.dim_e == 1 && r.cent_support == r.support;
      break;
    case RealItem::kTwo:
      e.stratum_ok = r.dim_e == 4 && !r.e_commutative && r.cent_support == r.support;
      break;
    case RealItem::kThreeA:
    case RealItem::kThreeB: {
      const IndexTwoData d = item3_data(label);
      e.stratum_ok = r.dim_e == 2 && r.e_commutative && !r.e_central &&
                     r.cent_support == d.K().elements();
      for (const auto& t : label.T.elements())
        if (!d.K().contains(t)) e.graded_division = e.graded_division && square_central_check(A, t);
      break;
    }
    case RealItem::kFour:
      e.stratum_ok = A.field().kind() == FieldKind::kComplex && r.dim_e == 2 &&
                     A.has_1dim_components();
      break;
  }
  e.stratum_ok = e.stratum_ok && r.support == label.T.elements();
  e.graded_central = graded_center_e_dim(A) == 1;
  return e;
}

namespace {

bool item_selected(RealItem it, int item) {
  switch (item) {
    case 0: return true;
    case 1: return it == RealItem::kOne;
    case 2: return it == RealItem::kTwo;
    case 3: return it == RealItem::kThreeA || it == RealItem::kThreeB;
    case 4: return it == RealItem::kFour;
  }
  return false;
}

}  // namespace

std::vector<Stratum> classify_all(const FinAbGroup& G, int jobs, int item) {
  if (item < 0 || item > 4) throw std::invalid_argument("item must be 0..4");
  std::vector<Stratum> strata;
  for (auto& S : all_subgroups(G)) {
    Stratum s;
    s.presentation = S.presentation();
    s.subgroup = std::move(S);
    strata.push_back(std::move(s));
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < strata.size(); i = next++) {
      try {
        for (const auto& l : labels_for_support(strata[i].presentation.group))
          if (item_selected(l.item, item)) strata[i].entries.push_back(verify_label(l));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(strata.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return strata;
}

}  // namespace gda
