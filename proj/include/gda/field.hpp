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

// One exact-field interface over rationals, finite fields and cyclotomics.
//
// Two kinds only change the semantics of power classes and roots of unity:
//   kReal     stores rationals but answers questions about R: every positive
//             number is an n-th power, so R^x/(R^x)^n is {+1,-1} or trivial.
//   kComplex  stores Q(zeta_N) but answers questions about C, where every
//             nonzero number is an n-th power.
// Algebras over R (resp. C) whose structure constants are rational (resp.
// cyclotomic) are thereby handled exactly.

#ifndef GDA_FIELD_HPP_
#define GDA_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "gda/cyclotomic.hpp"
#include "gda/finite_field.hpp"
#include "gda/rational.hpp"

namespace gda {

// exp(2 pi i num/den) as a reduced fraction in Q/Z, 0 <= num < den.
struct Phase {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Phase() = default;
  Phase(std::int64_t n, std::int64_t d);

  bool is_trivial() const { return num == 0; }
  // Multiplicative order of the root of unity.
  std::int64_t order() const { return den; }
  Phase operator+(const Phase& o) const;
  Phase operator-() const;
  Phase operator-(const Phase& o) const { return *this + (-o); }
  Phase operator*(std::int64_t k) const;

  friend auto operator<=>(const Phase&, const Phase&) = default;
  friend bool operator==(const Phase&, const Phase&) = default;
};

std::string to_string(const Phase& p);

enum class FieldKind { kRational, kReal, kFinite, kCyclotomic, kComplex };

using Scalar = std::variant<Rational, FFElem, CycElem>;

class Field {
 public:
  static Field rational();
  static Field real();
  static Field finite(FiniteField f);
  static Field cyclotomic(int n);
  // C, with Q(zeta_n) used for storage.
  static Field complex(int n);

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == FieldKind::kFinite; }
  const FiniteField& ff() const;
  const Cyclotomic& cyc() const;
  // 0 for characteristic zero.
  std::int64_t characteristic() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  // Throws std::domain_error if the denominator vanishes in the field.
  Scalar from_rational(const Rational& r) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, std::int64_t e) const;
  bool is_zero(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;
  bool is_one(const Scalar& a) const { return eq(a, one()); }

  // Roots of unity with fixed choices: +-1 over Q and R, g^((q-1)/d) for the
  // primitive element g over GF(q), powers of zeta_N (and -1) over cyclotomics.
  // Largest d such that every d-th root of unity has a designated value.
  std::int64_t root_capacity() const;
  bool has_root(const Phase& ph) const { return root_capacity() % ph.den == 0; }
  Scalar root_of_unity(const Phase& ph) const;  // throws if unavailable
  // The phase of x if x is one of the designated roots.
  std::optional<Phase> root_phase(const Scalar& x) const;

  // x in (F^x)^n. Throws std::invalid_argument for x = 0 and
  // std::domain_error for the cyclotomic kind.
  bool is_nth_power(const Scalar& x, std::int64_t n) const;
  // Canonical representative of x (F^x)^n; equal outputs iff same class.
  Scalar nth_power_class(const Scalar& x, std::int64_t n) const;
  bool same_power_class(const Scalar& a, const Scalar& b, std::int64_t n) const {
    return eq(nth_power_class(a, n), nth_power_class(b, n));
  }
  // a in -4 F^4. Throws for a = 0.
  bool minus4_fourth_power_test(const Scalar& a) const;

  // Multiplicative order of a nonzero element, or 0 when infinite.
  std::int64_t multiplicative_order(const Scalar& x) const;

  std::string to_string(const Scalar& x) const;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  FieldKind kind_ = FieldKind::kRational;
  std::shared_ptr<const FiniteField> ff_;
  std::shared_ptr<const Cyclotomic> cyc_;
};

}  // namespace gda

#endif  // GDA_FIELD_HPP_
