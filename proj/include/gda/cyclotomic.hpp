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

// Cyclotomic fields Q(zeta_N) = Q[x]/(Phi_N).

#ifndef GDA_CYCLOTOMIC_HPP_
#define GDA_CYCLOTOMIC_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gda/rational.hpp"

namespace gda {

// Residue mod Phi_N as phi(N) rational coefficients, lowest degree first.
struct CycElem {
  std::vector<Rational> c;
  friend bool operator==(const CycElem&, const CycElem&) = default;
};

// Integer coefficients of Phi_N, lowest degree first, by dividing x^N - 1 by
// Phi_d for every proper divisor d of N.
std::vector<BigInt> cyclotomic_polynomial(int n);

class Cyclotomic {
 public:
  explicit Cyclotomic(int n);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<BigInt>& modulus() const { return phi_; }

  CycElem zero() const;
  CycElem one() const;
  CycElem from_rational(const Rational& r) const;
  CycElem from_coeffs(std::vector<Rational> c) const;  // reduced mod Phi_N
  // zeta^k for the designated primitive N-th root zeta = x.
  CycElem zeta_pow(std::int64_t k) const;

  CycElem add(const CycElem& a, const CycElem& b) const;
  CycElem sub(const CycElem& a, const CycElem& b) const;
  CycElem neg(const CycElem& a) const;
  CycElem mul(const CycElem& a, const CycElem& b) const;
  CycElem inv(const CycElem& a) const;  // extended gcd; throws for zero
  CycElem pow(const CycElem& a, std::int64_t e) const;
  bool is_zero(const CycElem& a) const;
  // Complex conjugation, zeta -> zeta^(N-1).
  CycElem conj(const CycElem& a) const;
  // a = r * 1 with r rational.
  bool is_rational(const CycElem& a) const;

  std::string to_string(const CycElem& a) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_; }

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;
  int n_;
  std::vector<BigInt> phi_;
};

}  // namespace gda

#endif  // GDA_CYCLOTOMIC_HPP_
