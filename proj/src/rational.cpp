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

#include "gda/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

namespace gda {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_int(const std::string& s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("malformed integer: " + s);
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  std::string out = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    out += "/" + boost::multiprecision::denominator(r).str();
  return out;
}

std::int64_t factor_bound() {
  if (const char* env = std::getenv("GDA_FACTOR_BOUND")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return v;
  }
  return 1000000;
}

std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n_in) {
  BigInt n = abs(n_in);
  if (n == 0) throw std::invalid_argument("factor_integer: zero");
  const std::int64_t bound = factor_bound();
  std::vector<std::pair<BigInt, int>> out;
  for (std::int64_t d = 2; d <= bound; d += (d == 2 ? 1 : 2)) {
    if (BigInt(d) * d > n) break;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(BigInt(d), e);
  }
  if (n > 1) {
    BigInt b(bound);
    if (n > b * b)
      throw FactorBoundExceeded("cannot factor " + n_in.str() +
                                " within trial-division bound " + b.str());
    out.emplace_back(n, 1);
  }
  return out;
}

RationalFactorization factor_rational(const Rational& x) {
  if (x == 0) throw std::invalid_argument("factor_rational: zero");
  RationalFactorization f;
  f.sign = x < 0 ? -1 : 1;
  std::map<BigInt, int> e;
  for (auto& [p, k] : factor_integer(boost::multiprecision::numerator(x))) e[p] += k;
  for (auto& [p, k] : factor_integer(boost::multiprecision::denominator(x))) e[p] -= k;
  for (auto& [p, k] : e)
    if (k) f.primes.emplace_back(p, k);
  return f;
}

Rational rational_pow(const Rational& x, std::int64_t e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("rational_pow: zero to negative power");
    return rational_pow(Rational(1) / x, -e);
  }
  Rational r = 1, b = x;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational rational_power_class(const Rational& x, std::int64_t n) {
  if (x == 0) throw std::invalid_argument("power class of zero");
  if (n <= 0) throw std::invalid_argument("power class exponent must be positive");
  if (n == 1) return 1;
  auto f = factor_rational(x);
  Rational rep = (n % 2 == 0) ? Rational(f.sign) : Rational(1);
  for (auto& [p, k] : f.primes) {
    std::int64_t r = ((k % n) + n) % n;
    for (std::int64_t i = 0; i < r; ++i) rep *= Rational(p);
  }
  return rep;
}

bool rational_is_nth_power(const Rational& x, std::int64_t n) {
  return rational_power_class(x, n) == 1;
}

}  // namespace gda
