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

// Galois fields GF(p^l) = GF(p)[x]/(f) with table-driven multiplication.
//
// An element is stored as the integer sum c_i p^i of its coefficient vector
// (c_0 + c_1 x + ... ), so 0 and 1 are the integers 0 and 1 and the prime
// field is {0, ..., p-1}. Fields are capped at 2^22 elements.

#ifndef GDA_FINITE_FIELD_HPP_
#define GDA_FINITE_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gda {

struct FFElem {
  std::uint32_t v = 0;
  friend auto operator<=>(const FFElem&, const FFElem&) = default;
  friend bool operator==(const FFElem&, const FFElem&) = default;
};

class FiniteField {
 public:
  // Deterministic modulus search: monic degree-l polynomials over GF(p) are
  // visited in index order starting at `seed` (mod p^l) and the first
  // irreducible one is used. Throws std::invalid_argument if p is composite.
  static FiniteField construct(std::int64_t p, int ell, std::int64_t seed = 0);

  // `modulus` holds c_0..c_l with c_l = 1 and must be irreducible.
  FiniteField(std::int64_t p, int ell, std::vector<std::int64_t> modulus);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return ell_; }
  std::int64_t size() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  FFElem zero() const { return {0}; }
  FFElem one() const { return {1}; }
  FFElem from_int(std::int64_t n) const;
  FFElem from_coeffs(std::span<const std::int64_t> c) const;
  std::vector<std::int64_t> coeffs(FFElem a) const;
  // The class of x in GF(p)[x]/(f); equals 0 when l = 1 and f = x.
  FFElem generator_x() const;

  FFElem add(FFElem a, FFElem b) const;
  FFElem sub(FFElem a, FFElem b) const;
  FFElem neg(FFElem a) const;
  FFElem mul(FFElem a, FFElem b) const;
  FFElem inv(FFElem a) const;  // throws std::domain_error for 0
  FFElem div(FFElem a, FFElem b) const { return mul(a, inv(b)); }
  FFElem pow(FFElem a, std::int64_t e) const;
  FFElem frobenius(FFElem a) const { return pow(a, p_); }

  // Least-index element of multiplicative order q - 1.
  FFElem primitive_element() const { return prim_; }
  // Discrete log to the base primitive_element(); a != 0.
  std::int64_t log(FFElem a) const;
  FFElem exp(std::int64_t k) const;
  std::int64_t multiplicative_order(FFElem a) const;
  // primitive_element()^((q-1)/d); requires d | q - 1.
  FFElem root_of_unity(std::int64_t d) const;

  // a in (F^x)^n  <=>  a^((q-1)/gcd(n,q-1)) = 1. Throws for a = 0.
  bool is_nth_power(FFElem a, std::int64_t n) const;
  // log(a) mod gcd(n, q-1): a canonical label of a (F^x)^n.
  std::int64_t power_class(FFElem a, std::int64_t n) const;

  std::string to_string() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.ell_ == b.ell_ && a.modulus_ == b.modulus_;
  }

 private:
  std::int64_t p_;
  int ell_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::int64_t> pw_;  // p^i
  FFElem prim_;
  std::shared_ptr<const std::vector<std::uint32_t>> exp_;  // size q-1
  std::shared_ptr<const std::vector<std::uint32_t>> log_;  // size q
};

// Dense univariate polynomial over a finite field, lowest degree first, no
// trailing zeros (the zero polynomial is empty).
class FFPoly {
 public:
  FFPoly() = default;
  FFPoly(const FiniteField* f, std::vector<FFElem> c);
  static FFPoly monomial(const FiniteField* f, FFElem c, int deg);

  const FiniteField& field() const { return *f_; }
  const std::vector<FFElem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FFElem lead() const { return c_.back(); }

  FFPoly operator+(const FFPoly& o) const;
  FFPoly operator-(const FFPoly& o) const;
  FFPoly operator*(const FFPoly& o) const;
  FFPoly scaled(FFElem s) const;
  // Quotient and remainder; divisor must be nonzero.
  std::pair<FFPoly, FFPoly> divmod(const FFPoly& d) const;
  FFPoly operator%(const FFPoly& d) const { return divmod(d).second; }
  FFPoly monic() const;
  FFPoly powmod(std::int64_t e, const FFPoly& m) const;
  FFElem eval(FFElem x) const;

  friend bool operator==(const FFPoly& a, const FFPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  const FiniteField* f_ = nullptr;
  std::vector<FFElem> c_;
};

FFPoly poly_gcd(FFPoly a, FFPoly b);

// Ben-Or: f is irreducible iff gcd(f, x^(Q^i) - x) = 1 for 1 <= i <= deg/2.
bool is_irreducible(const FFPoly& f);

FFPoly derivative(const FFPoly& f);

// Berlekamp: for squarefree f the number of distinct monic irreducible factors
// is the nullity of Q - I, Q the matrix of g -> g^Q on GF(Q)[x]/(f).
// Returns 0 when f is not squarefree.
int berlekamp_factor_count(const FFPoly& f);

// Distinct-degree factorization of a squarefree monic f: (d, product of the
// irreducible factors of degree d), ascending in d.
std::vector<std::pair<int, FFPoly>> distinct_degree_factorization(const FFPoly& f);

// Exhaustive search for a monic divisor of degree d (test oracle, small only).
bool has_monic_factor_of_degree(const FFPoly& f, int d);

}  // namespace gda

#endif  // GDA_FINITE_FIELD_HPP_
