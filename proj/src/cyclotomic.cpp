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

#include "gda/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace gda {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Returns (quotient, remainder); b nonzero.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    Rational c = a[k] / b[db];
    if (c == 0) continue;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial: n must be positive");
  QPoly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto pd = cyclotomic_polynomial(d);
    QPoly den(pd.begin(), pd.end());
    auto [q, r] = qdivmod(num, den);
    if (!r.empty()) throw std::logic_error("cyclotomic polynomial: inexact division");
    num = q;
  }
  std::vector<BigInt> out;
  for (auto& c : num) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::logic_error("cyclotomic polynomial: non-integral coefficient");
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

Cyclotomic::Cyclotomic(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

std::vector<Rational> Cyclotomic::reduce(std::vector<Rational> v) const {
  const int d = degree();
  for (int k = static_cast<int>(v.size()) - 1; k >= d; --k) {
    Rational c = v[k];
    if (c == 0) continue;
    for (int i = 0; i <= d; ++i) v[k - d + i] -= c * Rational(phi_[i]);
  }
  v.resize(d, Rational(0));
  return v;
}

CycElem Cyclotomic::zero() const { return {std::vector<Rational>(degree(), Rational(0))}; }

CycElem Cyclotomic::one() const { return from_rational(1); }

CycElem Cyclotomic::from_rational(const Rational& r) const {
  CycElem e = zero();
  e.c[0] = r;
  return e;
}

CycElem Cyclotomic::from_coeffs(std::vector<Rational> c) const { return {reduce(std::move(c))}; }

CycElem Cyclotomic::zeta_pow(std::int64_t k) const {
  std::int64_t e = k % n_;
  if (e < 0) e += n_;
  std::vector<Rational> v(e + 1, Rational(0));
  v[e] = 1;
  return from_coeffs(std::move(v));
}

CycElem Cyclotomic::add(const CycElem& a, const CycElem& b) const {
  CycElem r = a;
  for (int i = 0; i < degree(); ++i) r.c[i] += b.c[i];
  return r;
}

CycElem Cyclotomic::sub(const CycElem& a, const CycElem& b) const {
  CycElem r = a;
  for (int i = 0; i < degree(); ++i) r.c[i] -= b.c[i];
  return r;
}

CycElem Cyclotomic::neg(const CycElem& a) const {
  CycElem r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

CycElem Cyclotomic::mul(const CycElem& a, const CycElem& b) const {
  std::vector<Rational> r(2 * degree(), Rational(0));
  for (int i = 0; i < degree(); ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < degree(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return {reduce(std::move(r))};
}

CycElem Cyclotomic::inv(const CycElem& a) const {
  if (is_zero(a)) throw std::domain_error("cyclotomic: inverse of zero");
  // Extended Euclid on (Phi_N, a): track s with s*a = r (mod Phi_N).
  QPoly r0(phi_.begin(), phi_.end()), r1 = a.c;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = qdivmod(r0, r1);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic: modulus not irreducible");
  for (auto& x : s0) x /= r0[0];
  return from_coeffs(s0);
}

CycElem Cyclotomic::pow(const CycElem& a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  CycElem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

bool Cyclotomic::is_zero(const CycElem& a) const {
  for (auto& x : a.c)
    if (x != 0) return false;
  return true;
}

CycElem Cyclotomic::conj(const CycElem& a) const {
  CycElem r = zero();
  for (int i = 0; i < degree(); ++i)
    if (a.c[i] != 0) r = add(r, mul(from_rational(a.c[i]), zeta_pow(-i)));
  return r;
}

bool Cyclotomic::is_rational(const CycElem& a) const {
  for (int i = 1; i < degree(); ++i)
    if (a.c[i] != 0) return false;
  return true;
}

std::string Cyclotomic::to_string(const CycElem& a) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (a.c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << format_rational(a.c[i]);
    if (i) os << "*z^" << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace gda
