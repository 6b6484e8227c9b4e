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

#include "gda/graded_algebra.hpp"

#include <algorithm>

namespace gda {

SparseVec to_sparse(const Field& F, const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!F.is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

namespace {

Vec to_dense(const Field& F, const SparseVec& s, std::size_t n) {
  Vec v = zero_vec(F, n);
  for (auto& [i, c] : s) v[i] = c;
  return v;
}

bool vec_is_zero(const Field& F, const Vec& v) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar& x) { return F.is_zero(x); });
}

}  // namespace

GradedAlgebra::GradedAlgebra(Field F, FinAbGroup G, std::vector<GroupElement> degrees,
                             std::vector<SparseVec> table, Vec unit)
    : F_(std::move(F)), G_(std::move(G)), deg_(std::move(degrees)), table_(std::move(table)),
      unit_(std::move(unit)) {
  const std::size_t n = deg_.size();
  if (table_.size() != n * n) throw std::invalid_argument("algebra: table size mismatch");
  if (unit_.size() != n) throw std::invalid_argument("algebra: unit size mismatch");
  comp_.assign(G_.order(), {});
  for (std::size_t i = 0; i < n; ++i) {
    if (!G_.is_element(deg_[i])) throw std::invalid_argument("algebra: degree not in group");
    comp_[G_.index_of(deg_[i])].push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec& e = table_[i * n + j];
      std::erase_if(e, [&](const auto& t) { return F_.is_zero(t.second); });
      std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      const GroupElement d = G_.add(deg_[i], deg_[j]);
      for (std::size_t t = 0; t < e.size(); ++t) {
        if (e[t].first >= n) throw std::invalid_argument("algebra: basis index out of range");
        if (t && e[t].first == e[t - 1].first)
          throw std::invalid_argument("algebra: repeated index in a product");
        if (deg_[e[t].first] != d)
          throw std::invalid_argument("algebra: product b_" + std::to_string(i) + " b_" +
                                      std::to_string(j) + " leaves degree " + to_string(d));
      }
    }
  if (!is_homogeneous(unit_) || vec_is_zero(F_, unit_))
    throw std::invalid_argument("algebra: unit is not a nonzero homogeneous element");
  for (std::size_t i = 0; i < n; ++i) {
    if (deg_[i] != G_.identity() && !F_.is_zero(unit_[i]))
      throw std::invalid_argument("algebra: unit must have degree zero");
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec b = basis_vector(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b)
      throw std::invalid_argument("algebra: unit fails on basis vector " + std::to_string(i));
  }
}

const std::vector<std::size_t>& GradedAlgebra::component(const GroupElement& g) const {
  return comp_[G_.index_of(g)];
}

std::vector<GroupElement> GradedAlgebra::support() const {
  std::vector<GroupElement> s;
  for (std::size_t k = 0; k < comp_.size(); ++k)
    if (!comp_[k].empty()) s.push_back(G_.element_at(k));
  return s;
}

bool GradedAlgebra::has_1dim_components() const {
  return std::all_of(comp_.begin(), comp_.end(), [](const auto& c) { return c.size() <= 1; });
}

Vec GradedAlgebra::basis_vector(std::size_t i) const {
  Vec v = zero_vec(F_, dim());
  v[i] = F_.one();
  return v;
}

Vec GradedAlgebra::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  Vec r = zero_vec(F_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (F_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (F_.is_zero(b[j])) continue;
      Scalar ab = F_.mul(a[i], b[j]);
      for (const auto& [k, c] : table_[i * n + j]) r[k] = F_.add(r[k], F_.mul(ab, c));
    }
  }
  return r;
}

Vec GradedAlgebra::power(const Vec& a, std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("algebra power: negative exponent");
  Vec r = unit_, b = a;
  while (e) {
    if (e & 1) r = multiply(r, b);
    e >>= 1;
    if (e) b = multiply(b, b);
  }
  return r;
}

bool GradedAlgebra::is_homogeneous(const Vec& a) const {
  std::optional<GroupElement> d;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (F_.is_zero(a[i])) continue;
    if (d && *d != deg_[i]) return false;
    d = deg_[i];
  }
  return true;
}

Mat GradedAlgebra::left_mult_matrix(const Vec& x) const {
  const std::size_t n = dim();
  Mat m = zero_mat(F_, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = multiply(x, basis_vector(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

std::optional<Vec> GradedAlgebra::inverse(const Vec& x) const {
  auto y = solve(F_, left_mult_matrix(x), unit_);
  if (!y) return std::nullopt;
  if (multiply(*y, x) != unit_ || multiply(x, *y) != unit_) return std::nullopt;
  return y;
}

GradedAlgebra GradedAlgebra::subalgebra(const std::vector<Vec>& basis) const {
  const std::size_t n = dim(), k = basis.size();
  Mat B = zero_mat(F_, n, k);
  std::vector<GroupElement> degs;
  for (std::size_t j = 0; j < k; ++j) {
    if (!is_homogeneous(basis[j]) || vec_is_zero(F_, basis[j]))
      throw std::invalid_argument("subalgebra: basis vector not nonzero homogeneous");
    for (std::size_t i = 0; i < n; ++i) {
      B[i][j] = basis[j][i];
      if (!F_.is_zero(basis[j][i]) && degs.size() == j) degs.push_back(deg_[i]);
    }
  }
  if (rank(F_, B) != k) throw std::invalid_argument("subalgebra: dependent basis");
  auto coords = [&](const Vec& v) {
    auto c = solve(F_, B, v);
    if (!c) throw std::invalid_argument("subalgebra: span is not closed");
    return *c;
  };
  std::vector<SparseVec> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = to_sparse(F_, coords(multiply(basis[i], basis[j])));
  return GradedAlgebra(F_, G_, degs, std::move(table), coords(unit_));
}

AssociativityReport verify_associative(const GradedAlgebra& A) {
  const std::size_t n = A.dim();
  const Field& F = A.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = to_dense(F, A.product(i, j), n);
      for (std::size_t k = 0; k < n; ++k) {
        Vec left = A.multiply(ij, A.basis_vector(k));
        Vec jk = to_dense(F, A.product(j, k), n);
        Vec right = A.multiply(A.basis_vector(i), jk);
        if (left != right) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
    }
  return {};
}

GradedAlgebra identity_component(const GradedAlgebra& A) {
  std::vector<Vec> b;
  for (auto i : A.component(A.group().identity())) b.push_back(A.basis_vector(i));
  return A.subalgebra(b);
}

bool is_commutative(const GradedAlgebra& A) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j)
      if (A.product(i, j) != A.product(j, i)) return false;
  return true;
}

namespace {

// Is the algebra E (all of degree zero) a division algebra?
bool real_quadratic_division(const GradedAlgebra& E) {
  const Field& F = E.field();
  const std::size_t d = E.dim();
  const Vec& one = E.unit();
  std::vector<Vec> pure;
  Mat span = zero_mat(F, d, 1);
  for (std::size_t i = 0; i < d; ++i) span[i][0] = one[i];
  for (std::size_t b = 0; b < d; ++b) {
    Vec w = E.basis_vector(b);
    // w^2 = alpha w + beta 1
    Mat M = zero_mat(F, d, 2);
    for (std::size_t i = 0; i < d; ++i) {
      M[i][0] = w[i];
      M[i][1] = one[i];
    }
    if (rank(F, M) < 2) continue;  // w is a multiple of 1
    auto ab = solve(F, M, E.multiply(w, w));
    if (!ab) return false;
    Scalar half_alpha = F.div((*ab)[0], F.from_int(2));
    Vec u = w;
    for (std::size_t i = 0; i < d; ++i) u[i] = F.sub(u[i], F.mul(half_alpha, one[i]));
    Mat trial = span;
    for (std::size_t i = 0; i < d; ++i) trial[i].push_back(u[i]);
    if (rank(F, trial) > rank(F, span)) {
      span = trial;
      pure.push_back(u);
    }
  }
  if (pure.size() + 1 != d) return false;
  const std::size_t k = pure.size();
  Mat one_col = zero_mat(F, d, 1);
  for (std::size_t i = 0; i < d; ++i) one_col[i][0] = one[i];
  Mat gram = zero_mat(F, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Vec s = E.multiply(pure[i], pure[j]);
      Vec t = E.multiply(pure[j], pure[i]);
      for (std::size_t r = 0; r < d; ++r) s[r] = F.add(s[r], t[r]);
      auto c = solve(F, one_col, s);
      if (!c) return false;
      // -(u_i u_j + u_j u_i)/2, which must be positive definite
      gram[i][j] = gram[j][i] = F.neg(F.div((*c)[0], F.from_int(2)));
    }
  for (const auto& m : leading_minors(F, gram))
    if (!(std::get<Rational>(m) > 0)) return false;
  return true;
}

bool exhaustive_no_zero_divisors(const GradedAlgebra& E) {
  const Field& F = E.field();
  const std::size_t d = E.dim();
  const std::int64_t q = F.ff().size();
  std::int64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= q;
    if (total > (std::int64_t{1} << 16))
      throw Undecided("identity component too large for exhaustive search");
  }
  for (std::int64_t idx = 1; idx < total; ++idx) {
    Vec x = zero_vec(F, d);
    std::int64_t t = idx;
    for (std::size_t i = 0; i < d; ++i, t /= q)
      x[i] = FFElem{static_cast<std::uint32_t>(t % q)};
    if (rank(F, E.left_mult_matrix(x)) != d) return false;
  }
  return true;
}

}  // namespace

bool is_division_algebra_identity_component(const GradedAlgebra& A) {
  GradedAlgebra E = identity_component(A);
  const std::size_t d = E.dim();
  if (d == 1) return true;
  const Field& F = A.field();
  switch (F.kind()) {
    case FieldKind::kComplex:
      return false;  // C is algebraically closed
    case FieldKind::kReal:
      return real_quadratic_division(E);
    case FieldKind::kFinite:
      return exhaustive_no_zero_divisors(E);
    case FieldKind::kRational:
      if (d == 2 && is_commutative(E)) {
        for (std::size_t b = 0; b < 2; ++b) {
          Vec w = E.basis_vector(b);
          Mat M = zero_mat(F, 2, 2);
          for (std::size_t i = 0; i < 2; ++i) {
            M[i][0] = w[i];
            M[i][1] = E.unit()[i];
          }
          if (rank(F, M) < 2) continue;
          auto ab = solve(F, M, E.multiply(w, w));
          const Rational& a = std::get<Rational>((*ab)[0]);
          const Rational& c = std::get<Rational>((*ab)[1]);
          Rational disc = a * a + 4 * c;
          return disc != 0 && !rational_is_nth_power(disc, 2);
        }
      }
      break;
    case FieldKind::kCyclotomic:
      break;
  }
  throw Undecided("division test for a " + std::to_string(d) +
                  "-dimensional identity component over " + F.name() + " is not implemented");
}

bool is_graded_division(const GradedAlgebra& A) {
  if (!is_division_algebra_identity_component(A)) return false;
  for (const auto& g : A.support()) {
    if (!A.inverse(A.basis_vector(A.component(g).front()))) return false;
  }
  return true;
}

namespace {

// Elements of A_g commuting with every s in S.
std::vector<Vec> commutant_in_degree(const GradedAlgebra& A, const GroupElement& g,
                                     const std::vector<Vec>& S) {
  const Field& F = A.field();
  const auto& idx = A.component(g);
  const std::size_t n = A.dim(), k = idx.size();
  if (k == 0) return {};
  Mat rows;
  for (const auto& s : S) {
    std::vector<Vec> cols;
    for (auto m : idx) {
      Vec b = A.basis_vector(m);
      Vec l = A.multiply(b, s), r = A.multiply(s, b);
      for (std::size_t t = 0; t < n; ++t) l[t] = F.sub(l[t], r[t]);
      cols.push_back(std::move(l));
    }
    for (std::size_t t = 0; t < n; ++t) {
      Vec row(k, F.zero());
      bool nz = false;
      for (std::size_t c = 0; c < k; ++c) {
        row[c] = cols[c][t];
        nz = nz || !F.is_zero(row[c]);
      }
      if (nz) rows.push_back(std::move(row));
    }
  }
  std::vector<Vec> out;
  for (const auto& v : nullspace(F, rows, k)) {
    Vec x = zero_vec(F, n);
    for (std::size_t c = 0; c < k; ++c) x[idx[c]] = v[c];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Vec> all_basis_vectors(const GradedAlgebra& A) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < A.dim(); ++i) b.push_back(A.basis_vector(i));
  return b;
}

}  // namespace

std::vector<Vec> center(const GradedAlgebra& A) {
  std::vector<Vec> out;
  const auto basis = all_basis_vectors(A);
  for (const auto& g : A.support())
    for (auto& v : commutant_in_degree(A, g, basis)) out.push_back(std::move(v));
  return out;
}

std::size_t graded_center_e_dim(const GradedAlgebra& A) {
  return commutant_in_degree(A, A.group().identity(), all_basis_vectors(A)).size();
}

std::map<GroupElement, std::vector<Vec>> centralizer(const GradedAlgebra& A,
                                                     const std::vector<Vec>& S) {
  for (const auto& s : S)
    if (!A.is_homogeneous(s)) throw std::invalid_argument("centralizer: inhomogeneous input");
  std::map<GroupElement, std::vector<Vec>> out;
  for (const auto& g : A.support()) {
    auto v = commutant_in_degree(A, g, S);
    if (!v.empty()) out.emplace(g, std::move(v));
  }
  return out;
}

GradedAlgebra tensor_with_trivially_graded(const GradedAlgebra& A, const GradedAlgebra& C) {
  if (!(A.field() == C.field())) throw std::invalid_argument("tensor: field mismatch");
  const Field& F = A.field();
  const std::size_t n = A.dim(), m = C.dim(), N = n * m;
  std::vector<GroupElement> degs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) degs.push_back(A.degree(i));
  std::vector<SparseVec> table(N * N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < m; ++l) {
          SparseVec out;
          for (const auto& [r, a] : A.product(i, j))
            for (const auto& [s, c] : C.product(k, l)) out.emplace_back(r * m + s, F.mul(a, c));
          table[(i * m + k) * N + (j * m + l)] = std::move(out);
        }
  Vec unit = zero_vec(F, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) unit[i * m + k] = F.mul(A.unit()[i], C.unit()[k]);
  return GradedAlgebra(F, A.group(), degs, std::move(table), unit);
}

// --- one-dimensional components -------------------------------------------

std::map<std::pair<GroupElement, GroupElement>, Phase> structure_phases(const GradedAlgebra& A) {
  if (!A.has_1dim_components())
    throw std::invalid_argument("structure phases need one-dimensional components");
  const auto supp = A.support();
  std::map<std::pair<GroupElement, GroupElement>, Phase> out;
  for (const auto& s : supp)
    for (const auto& t : supp) {
      const auto& p = A.product(A.component(s).front(), A.component(t).front());
      if (p.empty())
        throw std::invalid_argument("zero structure constant at " + to_string(s) + "," +
                                    to_string(t));
      auto ph = A.field().root_phase(p.front().second);
      if (!ph)
        throw std::invalid_argument("structure constant " + A.field().to_string(p.front().second) +
                                    " is not a designated root of unity");
      out.emplace(std::make_pair(s, t), *ph);
    }
  return out;
}

namespace {

std::vector<ScalingWitness> iso_search(const GradedAlgebra& A, const GradedAlgebra& B,
                                       bool want_all) {
  if (!(A.field() == B.field()) || !(A.group() == B.group()))
    throw std::invalid_argument("iso: algebras over different fields or groups");
  const auto supp = A.support();
  if (supp != B.support()) return {};
  const FinAbGroup& G = A.group();
  const Field& F = A.field();
  auto ga = structure_phases(A), gb = structure_phases(B);
  auto delta = [&](const GroupElement& s, const GroupElement& t) {
    auto key = std::make_pair(s, t);
    return ga.at(key) - gb.at(key);
  };
  const Subgroup T = Subgroup::generated_by(G, supp);
  if (T.order() != static_cast<std::int64_t>(supp.size()))
    throw std::invalid_argument("iso: support is not a subgroup");
  const Presentation P = T.presentation();
  const FinAbGroup& H = P.group;
  const GroupElement e = G.identity();
  const Phase lam_e = delta(e, e);
  const int m = H.rank();

  std::vector<std::vector<Phase>> cand(m);
  for (int i = 0; i < m; ++i) {
    const int n = H.orders()[i];
    const GroupElement& g = P.images[i];
    Phase phi = lam_e;
    GroupElement cur = e;
    for (int k = 0; k < n; ++k) {
      phi = phi - delta(cur, g);
      cur = G.add(cur, g);
    }
    Phase kappa = lam_e - phi;
    for (int j = 0; j < n; ++j) {
      Phase x(kappa.num + j * kappa.den, kappa.den * n);
      if (F.kind() == FieldKind::kComplex || F.has_root(x)) cand[i].push_back(x);
    }
    if (cand[i].empty()) return {};
  }

  const auto helems = H.elements();
  std::vector<GroupElement> amb;
  for (const auto& h : helems) amb.push_back(P.embed(G, h));
  std::vector<ScalingWitness> found;
  std::vector<std::size_t> choice(m, 0);
  while (true) {
    std::map<GroupElement, Phase> lam;
    lam[e] = lam_e;
    for (std::size_t x = 1; x < helems.size(); ++x) {
      const GroupElement& h = helems[x];
      int i = m - 1;
      while (h[i] == 0) --i;
      GroupElement s = h;
      s[i] -= 1;
      const GroupElement sa = P.embed(G, s);
      lam[amb[x]] = lam.at(sa) + cand[i][choice[i]] - delta(sa, P.images[i]);
    }
    bool ok = true;
    for (const auto& s : supp) {
      for (const auto& t : supp)
        if (lam.at(s) + lam.at(t) - lam.at(G.add(s, t)) != delta(s, t)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) {
      ScalingWitness w;
      w.support = supp;
      for (const auto& s : supp) w.lambda.push_back(lam.at(s));
      found.push_back(std::move(w));
      if (!want_all) return found;
    }
    int i = 0;
    for (; i < m; ++i) {
      if (++choice[i] < cand[i].size()) break;
      choice[i] = 0;
    }
    if (i == m) break;
  }
  return found;
}

// The group beta and mu live on, with the ambient images of its generators.
std::pair<FinAbGroup, std::vector<GroupElement>> support_frame(const GradedAlgebra& A) {
  const auto supp = A.support();
  const FinAbGroup& G = A.group();
  if (static_cast<std::int64_t>(supp.size()) == G.order()) {
    std::vector<GroupElement> gens;
    for (int i = 0; i < G.rank(); ++i) gens.push_back(G.generator(i));
    return {G, gens};
  }
  auto P = Subgroup::generated_by(G, supp).presentation();
  return {P.group, P.images};
}

}  // namespace

std::optional<ScalingWitness> graded_iso_1dim(const GradedAlgebra& A, const GradedAlgebra& B) {
  auto w = iso_search(A, B, false);
  if (w.empty()) return std::nullopt;
  return w.front();
}

std::vector<ScalingWitness> all_graded_isos_1dim(const GradedAlgebra& A, const GradedAlgebra& B) {
  return iso_search(A, B, true);
}

AltBicharacter commutation_bicharacter(const GradedAlgebra& A) {
  auto ph = structure_phases(A);
  auto [K, gens] = support_frame(A);
  std::vector<std::tuple<int, int, Phase>> pairs;
  for (int i = 0; i < K.rank(); ++i)
    for (int j = i + 1; j < K.rank(); ++j)
      pairs.emplace_back(i, j, ph.at({gens[i], gens[j]}) - ph.at({gens[j], gens[i]}));
  return AltBicharacter(K, pairs);
}

std::map<GroupElement, Scalar> mu_values(const GradedAlgebra& A) {
  if (!A.has_1dim_components())
    throw std::invalid_argument("mu needs one-dimensional components");
  const Field& F = A.field();
  const FinAbGroup& G = A.group();
  const std::size_t e_idx = A.component(G.identity()).front();
  const Scalar u = A.unit()[e_idx];
  std::map<GroupElement, Scalar> out;
  for (const auto& t : A.support()) {
    const std::int64_t o = element_order(G, t);
    Vec p = A.power(A.basis_vector(A.component(t).front()), o);
    if (F.is_zero(p[e_idx])) throw std::invalid_argument("mu: nilpotent homogeneous element");
    out.emplace(t, F.nth_power_class(F.div(p[e_idx], u), o));
  }
  return out;
}

MuFunction mu_invariant(const GradedAlgebra& A) {
  auto vals = mu_values(A);
  auto [K, gens] = support_frame(A);
  MuFunction mu{K, {}};
  for (const auto& g : gens) mu.gens.push_back(vals.at(g));
  return mu;
}

}  // namespace gda
