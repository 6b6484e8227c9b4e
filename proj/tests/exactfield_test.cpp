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

#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "gda/abelian.hpp"
#include "gda/field.hpp"

namespace gda {
namespace {

std::vector<std::pair<int, int>> prime_powers_up_to(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    int q = p;
    for (int ell = 1; q <= bound; ++ell, q *= p) out.emplace_back(p, ell);
  }
  return out;
}

FFElem el(std::int64_t v) { return {static_cast<std::uint32_t>(v)}; }

TEST(FiniteField, SmallFields) {
  const auto F2 = FiniteField::construct(2, 1, 5);
  EXPECT_EQ(F2.size(), 2);
  const auto F7 = FiniteField::construct(7, 1);
  EXPECT_EQ(F7.mul(F7.from_int(3), F7.from_int(5)), F7.from_int(1));
  const auto F9 = FiniteField::construct(3, 2, 0);
  EXPECT_EQ(F9.size(), 9);
  for (int v = 0; v < 9; ++v) EXPECT_EQ(F9.pow(el(v), 9), el(v));
}

TEST(FiniteField, DeterministicModulus) {
  EXPECT_EQ(FiniteField::construct(5, 3).modulus(), FiniteField::construct(5, 3).modulus());
}

TEST(FiniteField, AxiomsExhaustive) {
  for (auto [p, ell] : prime_powers_up_to(81)) {
    const auto F = FiniteField::construct(p, ell);
    const int q = static_cast<int>(F.size());
    for (int a = 0; a < q; ++a) {
      if (a != 0) EXPECT_EQ(F.mul(el(a), F.inv(el(a))), F.one());
      EXPECT_EQ(F.add(el(a), F.neg(el(a))), F.zero());
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(F.mul(el(a), el(b)), F.mul(el(b), el(a)));
        if (q <= 27)
          for (int c = 0; c < q; ++c) {
            EXPECT_EQ(F.mul(F.mul(el(a), el(b)), el(c)), F.mul(el(a), F.mul(el(b), el(c))));
            EXPECT_EQ(F.mul(el(a), F.add(el(b), el(c))),
                      F.add(F.mul(el(a), el(b)), F.mul(el(a), el(c))));
          }
      }
    }
  }
}

TEST(FiniteField, NthPowerMatchesEnumeration) {
  for (auto [p, ell] : prime_powers_up_to(121)) {
    const auto F = FiniteField::construct(p, ell);
    const Field Fk = Field::finite(F);
    for (int n = 1; n <= 12; ++n) {
      std::set<std::uint32_t> powers;
      for (int v = 1; v < F.size(); ++v) powers.insert(F.pow(el(v), n).v);
      for (int v = 1; v < F.size(); ++v) {
        EXPECT_EQ(F.is_nth_power(el(v), n), powers.count(v) == 1) << p << "^" << ell << " n=" << n;
        EXPECT_EQ(Fk.is_nth_power(el(v), n), powers.count(v) == 1);
      }
    }
  }
}

TEST(FiniteField, NthPowerExamples) {
  const Field F7 = Field::finite(FiniteField::construct(7, 1));
  EXPECT_TRUE(F7.is_nth_power(F7.one(), 5));
  EXPECT_FALSE(F7.is_nth_power(F7.from_int(3), 3));
  EXPECT_TRUE(F7.is_nth_power(F7.from_int(6), 3));
}

TEST(FiniteField, MultiplicativeOrder) {
  const auto F7 = FiniteField::construct(7, 1);
  EXPECT_EQ(F7.multiplicative_order(F7.one()), 1);
  EXPECT_EQ(F7.multiplicative_order(F7.from_int(3)), 6);
  const auto F4 = FiniteField::construct(2, 2);
  for (int v = 2; v < 4; ++v) EXPECT_EQ(F4.multiplicative_order(el(v)), 3);
}

TEST(FiniteField, BerlekampMatchesTrialDivision) {
  for (auto [p, ell] : prime_powers_up_to(9)) {
    const auto F = FiniteField::construct(p, ell);
    for (int n = 1; n <= 4; ++n)
      for (int v = 1; v < F.size(); ++v) {
        std::vector<FFElem> c(n + 1, F.zero());
        c[0] = F.neg(el(v));
        c[n] = F.one();
        const FFPoly f(&F, c);
        bool has_factor = false;
        for (int d = 1; d <= n / 2; ++d) has_factor = has_factor || has_monic_factor_of_degree(f, d);
        EXPECT_EQ(is_irreducible(f), !has_factor);
        const int count = berlekamp_factor_count(f);
        if (count != 0) EXPECT_EQ(count == 1, !has_factor);
      }
  }
}

TEST(Rational, PowerExamples) {
  const Field Q = Field::rational();
  EXPECT_FALSE(Q.is_nth_power(Q.from_int(8), 2));
  EXPECT_TRUE(Q.is_nth_power(Q.from_int(4), 2));
  EXPECT_TRUE(Q.is_nth_power(Q.from_int(-8), 3));
  EXPECT_FALSE(Q.is_nth_power(Q.from_int(-4), 2));
  EXPECT_TRUE(Q.is_nth_power(Scalar(Rational(9, 4)), 2));
}

TEST(Rational, Minus4FourthPower) {
  const Field Q = Field::rational();
  EXPECT_TRUE(Q.minus4_fourth_power_test(Q.from_int(-4)));
  EXPECT_TRUE(Q.minus4_fourth_power_test(Q.from_int(-64)));
  EXPECT_FALSE(Q.minus4_fourth_power_test(Q.from_int(2)));
}

TEST(Rational, SquareClassIsMultiplicative) {
  const Field Q = Field::rational();
  std::vector<Rational> xs;
  for (int a = -12; a <= 12; ++a)
    if (a != 0) xs.emplace_back(a);
  xs.emplace_back(Rational(3, 8));
  xs.emplace_back(Rational(-5, 18));
  for (const auto& x : xs)
    for (const auto& y : xs) {
      const Scalar cx = Q.nth_power_class(Scalar(x), 2), cy = Q.nth_power_class(Scalar(y), 2);
      EXPECT_TRUE(Q.same_power_class(Scalar(Rational(x * y)), Q.mul(cx, cy), 2));
    }
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(format_rational(parse_rational("6/4")), "3/2");
  EXPECT_EQ(format_rational(parse_rational("-7")), "-7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Real, PowerClassesAreSigns) {
  const Field R = Field::real();
  EXPECT_TRUE(R.is_nth_power(R.from_int(2), 2));
  EXPECT_FALSE(R.is_nth_power(R.from_int(-2), 2));
  EXPECT_TRUE(R.is_nth_power(R.from_int(-2), 3));
  EXPECT_TRUE(R.same_power_class(R.from_int(-3), R.from_int(-1), 4));
}

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(Cyclotomic(1).degree(), 1);
  const Cyclotomic C2(2);
  EXPECT_EQ(C2.zeta_pow(1), C2.from_rational(Rational(-1)));
  const Cyclotomic C4(4);
  EXPECT_EQ(C4.mul(C4.zeta_pow(1), C4.zeta_pow(1)), C4.from_rational(Rational(-1)));
  const Cyclotomic C8(8);
  EXPECT_EQ(C8.pow(C8.zeta_pow(1), 4), C8.from_rational(Rational(-1)));
  const CycElem s = C8.add(C8.zeta_pow(1), C8.zeta_pow(7));
  EXPECT_EQ(C8.mul(s, s), C8.from_rational(Rational(2)));
}

TEST(Cyclotomic, RootOfUnityAndConjugation) {
  for (int N : {3, 4, 5, 8, 9, 12}) {
    const Cyclotomic C(N);
    const CycElem z = C.zeta_pow(1);
    for (int k = 1; k < N; ++k) EXPECT_FALSE(C.pow(z, k) == C.one());
    EXPECT_EQ(C.pow(z, N), C.one());
    // Phi_N(zeta) = 0.
    CycElem acc = C.zero();
    for (std::size_t i = 0; i < C.modulus().size(); ++i)
      acc = C.add(acc, C.mul(C.from_rational(Rational(C.modulus()[i])), C.pow(z, i)));
    EXPECT_TRUE(C.is_zero(acc));
    const CycElem a = C.add(z, C.from_rational(Rational(2)));
    const CycElem b = C.sub(C.pow(z, 2), C.from_rational(Rational(1, 3)));
    EXPECT_EQ(C.conj(C.mul(a, b)), C.mul(C.conj(a), C.conj(b)));
    EXPECT_EQ(C.conj(C.add(a, b)), C.add(C.conj(a), C.conj(b)));
    EXPECT_EQ(C.conj(C.conj(a)), a);
    EXPECT_EQ(C.mul(a, C.inv(a)), C.one());
  }
}

TEST(Field, DesignatedRoots) {
  const Field F = Field::finite(FiniteField::construct(13, 1));
  EXPECT_EQ(F.root_capacity(), 12);
  const Scalar w = F.root_of_unity(Phase(1, 4));
  EXPECT_TRUE(F.eq(F.pow(w, 2), F.from_int(-1)));
  EXPECT_EQ(F.root_phase(w), Phase(1, 4));
  const Field C = Field::complex(12);
  EXPECT_TRUE(C.has_root(Phase(5, 12)));
  EXPECT_FALSE(Field::real().has_root(Phase(1, 4)));
}

}  // namespace
}  // namespace gda
