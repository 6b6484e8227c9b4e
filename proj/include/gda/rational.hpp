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

// Arbitrary-precision rationals and power classes in Q^x / (Q^x)^n.

#ifndef GDA_RATIONAL_HPP_
#define GDA_RATIONAL_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gda {

using BigInt = boost::multiprecision::cpp_int;
// Always reduced with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

// "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);

// Raised when trial division cannot certify a factorization below the bound.
class FactorBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Trial-division bound; GDA_FACTOR_BOUND overrides the default of 10^6.
std::int64_t factor_bound();

// Prime factorization of |n| >= 1 by trial division up to factor_bound().
// A cofactor left over is accepted as prime only when it is below the square
// of the bound; otherwise FactorBoundExceeded is thrown.
std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n);

// x = sign * prod p^e with e in Z. Prime list ascending.
struct RationalFactorization {
  int sign = 1;
  std::vector<std::pair<BigInt, int>> primes;
};
RationalFactorization factor_rational(const Rational& x);

// Canonical representative of x (Q^x)^n: the rational sign * prod p^(e mod n),
// with the sign dropped (set to +1) when n is odd. Throws for x = 0.
Rational rational_power_class(const Rational& x, std::int64_t n);
bool rational_is_nth_power(const Rational& x, std::int64_t n);

Rational rational_pow(const Rational& x, std::int64_t e);

}  // namespace gda

#endif  // GDA_RATIONAL_HPP_
