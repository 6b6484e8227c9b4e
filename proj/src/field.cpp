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

#include "gda/field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gda {

Phase::Phase(std::int64_t n, std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("phase: denominator must be positive");
  n %= d;
  if (n < 0) n += d;
  std::int64_t g = std::gcd(n, d);
  if (g == 0) g = d;
  num = n / g;
  den = d / g;
}

Phase Phase::operator+(const Phase& o) const {
  std::int64_t l = std::lcm(den, o.den);
  return Phase(num * (l / den) + o.num * (l / o.den), l);
}

Phase Phase::operator-() const { return Phase(-num, den); }

Phase Phase::operator*(std::int64_t k) const {
  return Phase(static_cast<std::int64_t>((static_cast<__int128>(num) * k) % den), den);
}

std::string to_string(const Phase& p) {
  std::ostringstream os;
  os << "e(" << p.num << '/' << p.den << ')';
  return os.str();
}

namespace {

const Rational& R(const Scalar& s) { return std::get<Rational>(s); }
FFElem E(const Scalar& s) { return std::get<FFElem>(s); }
const CycElem& C(const Scalar& s) { return std::get<CycElem>(s); }

}  // namespace

Field Field::rational() { return Field(); }

Field Field::real() {
  Field f;
  f.kind_ = FieldKind::kReal;
  return f;
}

Field Field::finite(FiniteField ff) {
  Field f;
  f.kind_ = FieldKind::kFinite;
  f.ff_ = std::make_shared<const FiniteField>(std::move(ff));
  return f;
}

Field Field::cyclotomic(int n) {
  Field f;
  f.kind_ = FieldKind::kCyclotomic;
  f.cyc_ = std::make_shared<const Cyclotomic>(n);
  return f;
}

Field Field::complex(int n) {
  Field f = cyclotomic(n);
  f.kind_ = FieldKind::kComplex;
  return f;
}

const FiniteField& Field::ff() const {
  if (!ff_) throw std::logic_error("field is not finite");
  return *ff_;
}

const Cyclotomic& Field::cyc() const {
  if (!cyc_) throw std::logic_error("field is not cyclotomic");
  return *cyc_;
}

std::int64_t Field::characteristic() const { return ff_ ? ff_->characteristic() : 0; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (ff_) return ff_->from_int(n);
  if (cyc_) return cyc_->from_rational(Rational(n));
  return Rational(n);
}

Scalar Field::from_rational(const Rational& r) const {
  if (ff_) {
    const std::int64_t p = ff_->characteristic();
    BigInt num = boost::multiprecision::numerator(r) % p;
    BigInt den = boost::multiprecision::denominator(r) % p;
    if (den == 0) throw std::domain_error("rational has no image in " + ff_->to_string());
    return ff_->div(ff_->from_int(num.convert_to<std::int64_t>()),
                    ff_->from_int(den.convert_to<std::int64_t>()));
  }
  if (cyc_) return cyc_->from_rational(r);
  return r;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (ff_) return ff_->add(E(a), E(b));
  if (cyc_) return cyc_->add(C(a), C(b));
  return R(a) + R(b);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (ff_) return ff_->sub(E(a), E(b));
  if (cyc_) return cyc_->sub(C(a), C(b));
  return R(a) - R(b);
}

Scalar Field::neg(const Scalar& a) const {
  if (ff_) return ff_->neg(E(a));
  if (cyc_) return cyc_->neg(C(a));
  return Rational(-R(a));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (ff_) return ff_->mul(E(a), E(b));
  if (cyc_) return cyc_->mul(C(a), C(b));
  return R(a) * R(b);
}

Scalar Field::inv(const Scalar& a) const {
  if (ff_) return ff_->inv(E(a));
  if (cyc_) return cyc_->inv(C(a));
  if (R(a) == 0) throw std::domain_error("inverse of zero");
  return Rational(1) / R(a);
}

Scalar Field::pow(const Scalar& a, std::int64_t e) const {
  if (ff_) return ff_->pow(E(a), e);
  if (cyc_) return cyc_->pow(C(a), e);
  return rational_pow(R(a), e);
}

bool Field::is_zero(const Scalar& a) const {
  if (ff_) return E(a).v == 0;
  if (cyc_) return cyc_->is_zero(C(a));
  return R(a) == 0;
}

bool Field::eq(const Scalar& a, const Scalar& b) const { return a == b; }

std::int64_t Field::root_capacity() const {
  if (ff_) return ff_->size() - 1;
  if (cyc_) return std::lcm<std::int64_t>(2, cyc_->conductor());
  return 2;
}

Scalar Field::root_of_unity(const Phase& ph) const {
  if (!has_root(ph))
    throw std::domain_error("no designated root of unity " + gda::to_string(ph) + " in " +
                            name());
  if (ff_) return ff_->exp(ph.num * ((ff_->size() - 1) / ph.den));
  if (cyc_) {
    const std::int64_t n = cyc_->conductor();
    if (n % ph.den == 0) return cyc_->zeta_pow(ph.num * (n / ph.den));
    // n odd, den = 2d' with d' | n and num odd: e(num/den) = -zeta^(n/d' * (num-d')/2).
    const std::int64_t dp = ph.den / 2;
    return cyc_->neg(cyc_->zeta_pow((n / dp) * ((ph.num - dp) / 2)));
  }
  return Rational(ph.num == 0 ? 1 : -1);
}

std::optional<Phase> Field::root_phase(const Scalar& x) const {
  if (ff_) {
    if (E(x).v == 0) return std::nullopt;
    return Phase(ff_->log(E(x)), ff_->size() - 1);
  }
  if (cyc_) {
    const std::int64_t cap = root_capacity();
    for (std::int64_t k = 0; k < cap; ++k) {
      Phase ph(k, cap);
      if (C(root_of_unity(ph)) == C(x)) return ph;
    }
    return std::nullopt;
  }
  if (R(x) == 1) return Phase(0, 1);
  if (R(x) == -1) return Phase(1, 2);
  return std::nullopt;
}

bool Field::is_nth_power(const Scalar& x, std::int64_t n) const {
  if (is_zero(x)) throw std::invalid_argument("is_nth_power: zero");
  if (n <= 0) throw std::invalid_argument("is_nth_power: exponent must be positive");
  return is_one(nth_power_class(x, n));
}

Scalar Field::nth_power_class(const Scalar& x, std::int64_t n) const {
  if (is_zero(x)) throw std::invalid_argument("power class of zero");
  if (n <= 0) throw std::invalid_argument("power class exponent must be positive");
  switch (kind_) {
    case FieldKind::kRational:
      return rational_power_class(R(x), n);
    case FieldKind::kReal:
      return Rational((n % 2 == 0 && R(x) < 0) ? -1 : 1);
    case FieldKind::kFinite:
      return ff_->exp(ff_->power_class(E(x), n));
    case FieldKind::kComplex:
      return one();
    case FieldKind::kCyclotomic:
      break;
  }
  throw std::domain_error("power classes are not implemented over " + name());
}

bool Field::minus4_fourth_power_test(const Scalar& a) const {
  if (is_zero(a)) throw std::invalid_argument("minus4_fourth_power_test: zero");
  Scalar m4 = from_int(-4);
  if (is_zero(m4)) return false;  // characteristic 2: -4 F^4 = {0}
  return is_nth_power(div(a, m4), 4);
}

std::int64_t Field::multiplicative_order(const Scalar& x) const {
  if (is_zero(x)) throw std::invalid_argument("multiplicative order of zero");
  if (ff_) return ff_->multiplicative_order(E(x));
  auto ph = root_phase(x);
  return ph ? ph->den : 0;
}

std::string Field::to_string(const Scalar& x) const {
  if (ff_) {
    if (ff_->degree() == 1) return std::to_string(E(x).v);
    std::ostringstream os;
    auto c = ff_->coeffs(E(x));
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
  }
  if (cyc_) return cyc_->to_string(C(x));
  return format_rational(R(x));
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::kRational:
      return "Q";
    case FieldKind::kReal:
      return "R";
    case FieldKind::kFinite:
      return ff_->to_string();
    case FieldKind::kCyclotomic:
      return "Q(zeta_" + std::to_string(cyc_->conductor()) + ")";
    case FieldKind::kComplex:
      return "C";
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.ff_) return *a.ff_ == *b.ff_;
  if (a.cyc_) return *a.cyc_ == *b.cyc_;
  return true;
}

}  // namespace gda
