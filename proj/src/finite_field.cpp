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

#include "gda/finite_field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gda/abelian.hpp"

namespace gda {

namespace {

constexpr std::int64_t kMaxFieldSize = std::int64_t{1} << 22;

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Schoolbook product of coefficient vectors over Z/p, reduced mod a monic f.
std::vector<std::int64_t> slow_mulmod(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b,
                                      const std::vector<std::int64_t>& f,
                                      std::int64_t p) {
  const std::size_t l = f.size() - 1;
  std::vector<std::int64_t> r(2 * l, 0);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = r.size(); k-- > l;) {
    std::int64_t c = r[k];
    if (!c) continue;
    for (std::size_t i = 0; i <= l; ++i) r[k - l + i] = mod(r[k - l + i] - c * f[i], p);
  }
  r.resize(l);
  return r;
}

}  // namespace

FiniteField FiniteField::construct(std::int64_t p, int ell, std::int64_t seed) {
  if (!is_prime(p)) throw std::invalid_argument("ff_construct: p is not prime");
  if (ell < 1) throw std::invalid_argument("ff_construct: degree must be positive");
  std::int64_t count = 1;
  for (int i = 0; i < ell; ++i) {
    count *= p;
    if (count > kMaxFieldSize) throw std::invalid_argument("ff_construct: field too large");
  }
  FiniteField prime(p, 1, {0, 1});
  for (std::int64_t step = 0; step < count; ++step) {
    std::int64_t idx = mod(seed + step, count);
    std::vector<std::int64_t> m(ell + 1, 0);
    m[ell] = 1;
    for (int i = 0; i < ell; ++i, idx /= p) m[i] = idx % p;
    std::vector<FFElem> c;
    for (auto v : m) c.push_back(prime.from_int(v));
    if (is_irreducible(FFPoly(&prime, c))) return FiniteField(p, ell, m);
  }
  throw std::logic_error("ff_construct: no irreducible polynomial found");
}

FiniteField::FiniteField(std::int64_t p, int ell, std::vector<std::int64_t> modulus)
    : p_(p), ell_(ell), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("finite field: p is not prime");
  if (ell < 1 || static_cast<int>(modulus_.size()) != ell + 1 || modulus_[ell] != 1)
    throw std::invalid_argument("finite field: modulus must be monic of degree ell");
  for (auto& c : modulus_) {
    if (c < 0 || c >= p) throw std::invalid_argument("finite field: coefficient out of range");
  }
  for (int i = 0; i <= ell; ++i) {
    pw_.push_back(q_);
    if (i < ell) q_ *= p;
    if (q_ > kMaxFieldSize) throw std::invalid_argument("finite field: too large");
  }
  if (ell > 1) {
    FiniteField prime(p, 1, {0, 1});
    std::vector<FFElem> c;
    for (auto v : modulus_) c.push_back(prime.from_int(v));
    if (!is_irreducible(FFPoly(&prime, c)))
      throw std::invalid_argument("finite field: modulus is reducible");
  }

  auto to_vec = [&](std::int64_t idx) {
    std::vector<std::int64_t> v(ell_);
    for (int i = 0; i < ell_; ++i, idx /= p_) v[i] = idx % p_;
    return v;
  };
  auto to_idx = [&](const std::vector<std::int64_t>& v) {
    std::int64_t idx = 0;
    for (int i = ell_; i-- > 0;) idx = idx * p_ + v[i];
    return idx;
  };
  auto slow_pow = [&](std::int64_t a, std::int64_t e) {
    std::vector<std::int64_t> r = to_vec(1), b = to_vec(a);
    while (e) {
      if (e & 1) r = slow_mulmod(r, b, modulus_, p_);
      b = slow_mulmod(b, b, modulus_, p_);
      e >>= 1;
    }
    return to_idx(r);
  };

  const std::int64_t m = q_ - 1;
  const auto ps = prime_divisors(m);
  std::int64_t g = 1;
  for (; g < q_; ++g) {
    bool ok = true;
    for (auto r : ps)
      if (slow_pow(g, m / r) == 1) ok = false;
    if (ok) break;
  }
  prim_ = {static_cast<std::uint32_t>(g)};
  auto ex = std::make_shared<std::vector<std::uint32_t>>(m);
  auto lg = std::make_shared<std::vector<std::uint32_t>>(q_, 0);
  std::vector<std::int64_t> x = to_vec(1), gv = to_vec(g);
  for (std::int64_t k = 0; k < m; ++k) {
    auto idx = static_cast<std::uint32_t>(to_idx(x));
    (*ex)[k] = idx;
    (*lg)[idx] = static_cast<std::uint32_t>(k);
    x = slow_mulmod(x, gv, modulus_, p_);
  }
  exp_ = ex;
  log_ = lg;
}

FFElem FiniteField::from_int(std::int64_t n) const {
  return {static_cast<std::uint32_t>(mod(n, p_))};
}

FFElem FiniteField::from_coeffs(std::span<const std::int64_t> c) const {
  if (static_cast<int>(c.size()) > ell_)
    throw std::invalid_argument("finite field element: too many coefficients");
  std::int64_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p_ + mod(c[i], p_);
  return {static_cast<std::uint32_t>(idx)};
}

std::vector<std::int64_t> FiniteField::coeffs(FFElem a) const {
  std::vector<std::int64_t> v(ell_);
  std::int64_t idx = a.v;
  for (int i = 0; i < ell_; ++i, idx /= p_) v[i] = idx % p_;
  return v;
}

FFElem FiniteField::generator_x() const {
  if (ell_ > 1) return {static_cast<std::uint32_t>(p_)};
  return from_int(-modulus_[0]);
}

FFElem FiniteField::add(FFElem a, FFElem b) const {
  if (ell_ == 1) return {static_cast<std::uint32_t>((a.v + b.v) % p_)};
  std::int64_t x = a.v, y = b.v, r = 0;
  for (int i = 0; i < ell_; ++i, x /= p_, y /= p_) r += ((x % p_ + y % p_) % p_) * pw_[i];
  return {static_cast<std::uint32_t>(r)};
}

FFElem FiniteField::neg(FFElem a) const {
  std::int64_t x = a.v, r = 0;
  for (int i = 0; i < ell_; ++i, x /= p_) r += ((p_ - x % p_) % p_) * pw_[i];
  return {static_cast<std::uint32_t>(r)};
}

FFElem FiniteField::sub(FFElem a, FFElem b) const { return add(a, neg(b)); }

FFElem FiniteField::mul(FFElem a, FFElem b) const {
  if (a.v == 0 || b.v == 0) return zero();
  std::int64_t k = static_cast<std::int64_t>((*log_)[a.v]) + (*log_)[b.v];
  return {(*exp_)[k % (q_ - 1)]};
}

FFElem FiniteField::inv(FFElem a) const {
  if (a.v == 0) throw std::domain_error("finite field: inverse of zero");
  return exp(-log(a));
}

FFElem FiniteField::pow(FFElem a, std::int64_t e) const {
  if (a.v == 0) {
    if (e < 0) throw std::domain_error("finite field: zero to a negative power");
    return e == 0 ? one() : zero();
  }
  const std::int64_t m = q_ - 1;
  return exp(static_cast<std::int64_t>(
      (static_cast<__int128>(log(a)) * mod(e, m)) % m));
}

std::int64_t FiniteField::log(FFElem a) const {
  if (a.v == 0) throw std::domain_error("finite field: log of zero");
  return (*log_)[a.v];
}

FFElem FiniteField::exp(std::int64_t k) const { return {(*exp_)[mod(k, q_ - 1)]}; }

std::int64_t FiniteField::multiplicative_order(FFElem a) const {
  const std::int64_t m = q_ - 1;
  return m / std::gcd(log(a), m);
}

FFElem FiniteField::root_of_unity(std::int64_t d) const {
  if (d <= 0 || (q_ - 1) % d != 0)
    throw std::invalid_argument("finite field: no primitive root of unity of that order");
  return exp((q_ - 1) / d);
}

bool FiniteField::is_nth_power(FFElem a, std::int64_t n) const {
  if (a.v == 0) throw std::invalid_argument("is_nth_power: zero");
  if (n <= 0) throw std::invalid_argument("is_nth_power: exponent must be positive");
  return power_class(a, n) == 0;
}

std::int64_t FiniteField::power_class(FFElem a, std::int64_t n) const {
  if (a.v == 0) throw std::invalid_argument("power class of zero");
  return log(a) % std::gcd(n, q_ - 1);
}

std::string FiniteField::to_string() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (ell_ > 1) os << '^' << ell_;
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

FFPoly::FFPoly(const FiniteField* f, std::vector<FFElem> c) : f_(f), c_(std::move(c)) {
  trim();
}

FFPoly FFPoly::monomial(const FiniteField* f, FFElem c, int deg) {
  std::vector<FFElem> v(deg + 1, f->zero());
  v[deg] = c;
  return FFPoly(f, v);
}

void FFPoly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

FFPoly FFPoly::operator+(const FFPoly& o) const {
  const FiniteField* f = f_ ? f_ : o.f_;
  std::vector<FFElem> r(std::max(c_.size(), o.c_.size()), FFElem{});
  for (std::size_t i = 0; i < r.size(); ++i) {
    FFElem a = i < c_.size() ? c_[i] : FFElem{};
    FFElem b = i < o.c_.size() ? o.c_[i] : FFElem{};
    r[i] = f->add(a, b);
  }
  return FFPoly(f, r);
}

FFPoly FFPoly::operator-(const FFPoly& o) const {
  if (!o.f_) return *this;
  return *this + o.scaled(o.f_->neg(o.f_->one()));
}

FFPoly FFPoly::operator*(const FFPoly& o) const {
  if (is_zero() || o.is_zero()) return FFPoly(f_ ? f_ : o.f_, {});
  std::vector<FFElem> r(c_.size() + o.c_.size() - 1, FFElem{});
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].v == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
  }
  return FFPoly(f_, r);
}

FFPoly FFPoly::scaled(FFElem s) const {
  std::vector<FFElem> r = c_;
  for (auto& x : r) x = f_->mul(x, s);
  return FFPoly(f_, r);
}

std::pair<FFPoly, FFPoly> FFPoly::divmod(const FFPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const FiniteField* f = d.f_;
  std::vector<FFElem> r = c_;
  const int dd = d.degree();
  if (degree() < dd) return {FFPoly(f, {}), *this};
  std::vector<FFElem> q(degree() - dd + 1, FFElem{});
  const FFElem li = f->inv(d.lead());
  for (int k = degree(); k >= dd; --k) {
    FFElem c = f->mul(r[k], li);
    if (c.v == 0) continue;
    q[k - dd] = c;
    for (int i = 0; i <= dd; ++i) r[k - dd + i] = f->sub(r[k - dd + i], f->mul(c, d.c_[i]));
  }
  return {FFPoly(f, q), FFPoly(f, r)};
}

FFPoly FFPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lead()));
}

FFPoly FFPoly::powmod(std::int64_t e, const FFPoly& m) const {
  FFPoly r(m.f_, {m.f_->one()});
  r = r % m;
  FFPoly b = *this % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

FFElem FFPoly::eval(FFElem x) const {
  FFElem r{};
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

FFPoly poly_gcd(FFPoly a, FFPoly b) {
  while (!b.is_zero()) {
    FFPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FFPoly derivative(const FFPoly& f) {
  if (f.degree() < 1) return FFPoly(&f.field(), {});
  std::vector<FFElem> r;
  for (int i = 1; i <= f.degree(); ++i)
    r.push_back(f.field().mul(f.field().from_int(i), f.coeffs()[i]));
  return FFPoly(&f.field(), r);
}

bool is_irreducible(const FFPoly& f_in) {
  if (f_in.degree() < 1) return false;
  if (f_in.degree() == 1) return true;
  const FiniteField* F = &f_in.field();
  FFPoly f = f_in.monic();
  FFPoly x = FFPoly::monomial(F, F->one(), 1);
  FFPoly h = x;
  for (int i = 1; i <= f.degree() / 2; ++i) {
    h = h.powmod(F->size(), f);
    if (poly_gcd(f, h - x).degree() > 0) return false;
  }
  return true;
}

int berlekamp_factor_count(const FFPoly& f_in) {
  if (f_in.degree() < 1) return 0;
  const FiniteField& F = f_in.field();
  FFPoly f = f_in.monic();
  if (poly_gcd(f, derivative(f)).degree() > 0) return 0;
  const int n = f.degree();
  // Row i: coefficients of x^(iQ) mod f, minus e_i.
  std::vector<std::vector<FFElem>> M(n, std::vector<FFElem>(n, FFElem{}));
  FFPoly xq = FFPoly::monomial(&F, F.one(), 1).powmod(F.size(), f);
  FFPoly cur(&F, {F.one()});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= cur.degree(); ++j) M[i][j] = cur.coeffs()[j];
    M[i][i] = F.sub(M[i][i], F.one());
    cur = (cur * xq) % f;
  }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (M[r][col].v) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[rank]);
    FFElem inv = F.inv(M[rank][col]);
    for (auto& x : M[rank]) x = F.mul(x, inv);
    for (int r = 0; r < n; ++r) {
      if (r == rank || M[r][col].v == 0) continue;
      FFElem c = M[r][col];
      for (int k = 0; k < n; ++k) M[r][k] = F.sub(M[r][k], F.mul(c, M[rank][k]));
    }
    ++rank;
  }
  return n - rank;
}

std::vector<std::pair<int, FFPoly>> distinct_degree_factorization(const FFPoly& f_in) {
  std::vector<std::pair<int, FFPoly>> out;
  if (f_in.degree() < 1) return out;
  const FiniteField* F = &f_in.field();
  FFPoly f = f_in.monic();
  FFPoly x = FFPoly::monomial(F, F->one(), 1);
  FFPoly h = x;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = h.powmod(F->size(), f);
    FFPoly g = poly_gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      f = f.divmod(g).first;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.degree(), f);
  return out;
}

bool has_monic_factor_of_degree(const FFPoly& f, int d) {
  if (d < 1 || d > f.degree()) return false;
  const FiniteField* F = &f.field();
  const std::int64_t Q = F->size();
  std::int64_t total = 1;
  for (int i = 0; i < d; ++i) total *= Q;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::vector<FFElem> c(d + 1);
    std::int64_t t = idx;
    for (int i = 0; i < d; ++i, t /= Q) c[i] = {static_cast<std::uint32_t>(t % Q)};
    c[d] = F->one();
    if ((f % FFPoly(F, c)).is_zero()) return true;
  }
  return false;
}

}  // namespace gda
