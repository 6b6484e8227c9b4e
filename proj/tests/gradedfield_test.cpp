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

#include "gda/gradedfield.hpp"

#include <gtest/gtest.h>

namespace gda {
namespace {

GroupElement E(std::vector<int> e) { return GroupElement(std::move(e)); }
FFElem el(std::int64_t v) { return {static_cast<std::uint32_t>(v)}; }
Scalar Q(std::int64_t n) { return Scalar(Rational(n)); }

// Evaluates the polynomial with coefficients `c` (lowest first) at x.
Scalar eval(const Field& F, const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc = F.zero();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

TEST(Binomial, RationalExamples) {
  const Field F = Field::rational();
  const Decision d = binomial_irreducible(F, Q(-4), 4);
  EXPECT_EQ(d.verdict, Verdict::kFalse);
  ASSERT_TRUE(d.factor.has_value());
  // X^2 - 2X + 2 up to the sign of b.
  ASSERT_EQ(d.factor->size(), 3u);
  EXPECT_TRUE(F.eq((*d.factor)[0], Q(2)));
  EXPECT_TRUE(F.eq(F.mul((*d.factor)[1], (*d.factor)[1]), Q(4)));
  EXPECT_EQ(binomial_irreducible(F, Q(2), 3).verdict, Verdict::kTrue);
  EXPECT_EQ(binomial_irreducible(F, Q(8), 3).verdict, Verdict::kFalse);
  EXPECT_EQ(binomial_irreducible(F, Q(-1), 2).verdict, Verdict::kTrue);
  EXPECT_EQ(binomial_irreducible(F, Q(-1), 4).verdict, Verdict::kTrue);
  EXPECT_EQ(binomial_irreducible(F, Q(-64), 8).verdict, Verdict::kFalse);
}

TEST(Binomial, FactorDividesBinomial) {
  const Field F = Field::rational();
  for (std::int64_t a : {-324, -64, -4, 4, 8, 9, 27, 16, 1024})
    for (std::int64_t n : {2, 3, 4, 6, 8, 12}) {
      const Decision d = binomial_irreducible(F, Q(a), n);
      if (!d.factor) continue;
      // Every root of the factor is a root of X^n - a: check via remainder.
      std::vector<Scalar> f = *d.factor;
      std::vector<Scalar> r(n + 1, F.zero());
      r[0] = F.neg(Q(a));
      r[n] = F.one();
      for (std::size_t top = r.size(); top-- >= f.size();) {
        const Scalar c = r[top];
        if (!F.is_zero(c))
          for (std::size_t i = 0; i < f.size(); ++i)
            r[top - (f.size() - 1) + i] = F.sub(r[top - (f.size() - 1) + i], F.mul(c, f[i]));
        if (top == f.size() - 1) break;
      }
      for (std::size_t i = 0; i + 1 < f.size(); ++i) EXPECT_TRUE(F.is_zero(r[i])) << a << " " << n;
    }
}

TEST(Binomial, FiniteFieldExample) {
  const auto F7 = FiniteField::construct(7, 1);
  const Field F = Field::finite(F7);
  EXPECT_EQ(binomial_irreducible(F, F.from_int(3), 3).verdict, Verdict::kTrue);
  EXPECT_TRUE(binomial_irreducible_berlekamp(F7, F7.from_int(3), 3));
}

TEST(Binomial, FiniteFieldFactorsAreRoots) {
  const auto F = FiniteField::construct(13, 1);
  const Field Fk = Field::finite(F);
  for (int n : {2, 3, 4, 6})
    for (int v = 1; v < 13; ++v) {
      const Decision d = binomial_irreducible(Fk, el(v), n);
      if (d.verdict != Verdict::kFalse || !d.factor || d.factor->size() != 2) continue;
      // Linear factor X - y: y^n = alpha.
      const Scalar y = Fk.neg((*d.factor)[0]);
      EXPECT_TRUE(Fk.eq(Fk.pow(y, n), el(v)));
    }
}

TEST(Binomial, RealAndComplex) {
  const Field R = Field::real();
  EXPECT_EQ(binomial_irreducible(R, Q(-1), 2).verdict, Verdict::kTrue);
  EXPECT_EQ(binomial_irreducible(R, Q(-1), 4).verdict, Verdict::kFalse);
  EXPECT_EQ(binomial_irreducible(R, Q(2), 2).verdict, Verdict::kFalse);
  EXPECT_EQ(binomial_irreducible(R, Q(-3), 3).verdict, Verdict::kFalse);
  EXPECT_EQ(binomial_irreducible(Field::cyclotomic(3), Field::cyclotomic(3).from_int(2), 3).verdict,
            Verdict::kUndecided);
}

TEST(NthRoot, Examples) {
  const Field Qf = Field::rational();
  EXPECT_TRUE(Qf.eq(*nth_root(Qf, Scalar(Rational(-27, 8)), 3), Scalar(Rational(-3, 2))));
  EXPECT_FALSE(nth_root(Qf, Q(2), 2).has_value());
  EXPECT_FALSE(nth_root(Qf, Q(-4), 2).has_value());
  const Field F = Field::finite(FiniteField::construct(3, 3));
  for (int v = 1; v < 27; ++v)
    for (int n : {2, 13, 26, 5}) {
      const auto y = nth_root(F, el(v), n);
      EXPECT_EQ(y.has_value(), F.is_nth_power(el(v), n));
      if (y) EXPECT_TRUE(F.eq(F.pow(*y, n), el(v)));
    }
}

TEST(IsField, PPrimaryExamples) {
  const Field Qf = Field::rational();
  EXPECT_EQ(is_field_p_primary({Qf, FinAbGroup({4}), {Q(-4)}}).verdict, Verdict::kFalse);
  EXPECT_EQ(is_field_p_primary({Qf, FinAbGroup({2}), {Q(2)}}).verdict, Verdict::kTrue);
  EXPECT_EQ(is_field_p_primary({Qf, FinAbGroup({3, 3}), {Q(2), Q(3)}}).verdict, Verdict::kUndecided);
  EXPECT_EQ(is_field_p_primary({Qf, FinAbGroup({3, 3}), {Q(2), Q(4)}}).verdict, Verdict::kFalse);
  const Field F7 = Field::finite(FiniteField::construct(7, 1));
  EXPECT_EQ(is_field_p_primary({F7, FinAbGroup({3}), {F7.from_int(3)}}).verdict, Verdict::kTrue);
  const Field R = Field::real();
  EXPECT_EQ(is_field_p_primary({R, FinAbGroup({2}), {Q(-1)}}).verdict, Verdict::kTrue);
  EXPECT_EQ(is_field_p_primary({R, FinAbGroup({2, 2}), {Q(-1), Q(-1)}}).verdict, Verdict::kFalse);
}

TEST(IsField, Exponent2Examples) {
  const Field Qf = Field::rational();
  EXPECT_EQ(is_field_exponent2({Qf, FinAbGroup({2, 2}), {Q(2), Q(3)}}).verdict, Verdict::kTrue);
  // Q(zeta_8) = Q(i, sqrt 2).
  EXPECT_EQ(is_field_exponent2({Qf, FinAbGroup({2, 2}), {Q(-1), Q(2)}}).verdict, Verdict::kTrue);
  const Decision d = is_field_exponent2({Qf, FinAbGroup({2, 2}), {Q(2), Q(8)}});
  EXPECT_EQ(d.verdict, Verdict::kFalse);
  ASSERT_TRUE(d.zero_divisor.has_value());
  const GradedAlgebra A = graded_field_algebra({Qf, FinAbGroup({2, 2}), {Q(2), Q(8)}});
  const Vec w = A.multiply(d.zero_divisor->first, d.zero_divisor->second);
  for (const auto& c : w) EXPECT_TRUE(Qf.is_zero(c));
}

TEST(IsField, Exponent2MatchesExhaustive) {
  for (int q : {3, 5, 7, 11}) {
    const Field F = Field::finite(FiniteField::construct(q, 1));
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b) {
        const GradedFieldSpec s{F, FinAbGroup({2, 2}), {F.from_int(a), F.from_int(b)}};
        const Decision d = is_field_exponent2(s);
        const GradedAlgebra A = graded_field_algebra(s);
        EXPECT_EQ(d.verdict == Verdict::kTrue, is_field_exhaustive(A)) << q << " " << a << " " << b;
        if (d.zero_divisor) {
          const Vec w = A.multiply(d.zero_divisor->first, d.zero_divisor->second);
          for (const auto& c : w) EXPECT_TRUE(F.is_zero(c));
        }
      }
  }
}

TEST(IsField, GeneralExamples) {
  const Field Qf = Field::rational();
  EXPECT_EQ(is_field_general({Qf, FinAbGroup({2, 3}), {Q(2), Q(2)}}).verdict, Verdict::kTrue);
  EXPECT_EQ(is_field_general({Qf, FinAbGroup({6}), {Q(2)}}).verdict, Verdict::kTrue);
  EXPECT_EQ(is_field_general({Qf, FinAbGroup({6}), {Q(4)}}).verdict, Verdict::kFalse);
  EXPECT_EQ(is_field_general({Qf, FinAbGroup({5}), {Q(1)}}).verdict, Verdict::kFalse);
  const Field F5 = Field::finite(FiniteField::construct(5, 1));
  const GradedFieldSpec s{F5, FinAbGroup({2, 2}), {F5.from_int(2), F5.from_int(3)}};
  EXPECT_EQ(is_field_general(s).verdict == Verdict::kTrue, is_field_exhaustive(graded_field_algebra(s)));
}

TEST(IsField, GeneralMatchesExhaustiveOverSmallFields) {
  const std::vector<std::vector<int>> shapes{{2}, {3}, {4}, {5}, {6}, {8}, {9}, {2, 2}, {2, 3}, {4, 2}, {3, 3}};
  for (auto [p, ell] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {2, 2}, {13, 1}}) {
    const auto FF = FiniteField::construct(p, ell);
    const Field F = Field::finite(FF);
    for (const auto& shape : shapes) {
      const FinAbGroup G(shape);
      double size = 1;
      for (int i = 0; i < G.order(); ++i) size *= static_cast<double>(FF.size());
      if (size > 20000) continue;
      const int second = shape.size() > 1 ? static_cast<int>(FF.size()) : 2;
      for (int a = 1; a < FF.size(); ++a)
        for (int b = 1; b < second; ++b) {
          std::vector<Scalar> mu{Scalar(el(a))};
          if (shape.size() > 1) mu.push_back(Scalar(el(b)));
          const GradedFieldSpec s{F, G, mu};
          if (p == 2 && std::all_of(shape.begin(), shape.end(), [](int o) { return o == 2; })) continue;
          const Decision d = is_field_general(s);
          ASSERT_NE(d.verdict, Verdict::kUndecided);
          EXPECT_EQ(d.verdict == Verdict::kTrue, is_field_exhaustive(graded_field_algebra(s)))
              << FF.to_string() << " " << G.to_string() << " " << a << "," << b << ": " << d.reason;
        }
    }
  }
}

TEST(FFGrading, Examples) {
  const Decision d = ff_grading_exists(3, 1, 4);
  EXPECT_EQ(d.verdict, Verdict::kFalse);
  EXPECT_EQ(d.reason, "condition (ii)");
  EXPECT_EQ(ff_grading_exists(7, 1, 3).verdict, Verdict::kTrue);
  const auto mus = ff_grading_mus(7, 1, 3);
  const auto F7 = FiniteField::construct(7, 1);
  std::vector<FFElem> brute;
  for (int v = 1; v < 7; ++v)
    if (binomial_irreducible_berlekamp(F7, el(v), 3)) brute.push_back(el(v));
  EXPECT_EQ(mus, brute);
  EXPECT_EQ(mus, (std::vector<FFElem>{el(2), el(3), el(4), el(5)}));
  EXPECT_TRUE(ff_grading_mus(3, 1, 4).empty());
}

// Existence matches a search for an irreducible X^k - mu.
TEST(FFGrading, MatchesExhaustiveSearch) {
  for (auto [p, ell] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {7, 1}, {3, 2}, {2, 3}, {11, 1}}) {
    const auto F = FiniteField::construct(p, ell);
    for (int k = 1; k <= 12; ++k) {
      std::vector<FFElem> brute;
      for (int v = 1; v < F.size(); ++v)
        if (binomial_irreducible_berlekamp(F, el(v), k)) brute.push_back(el(v));
      EXPECT_EQ(ff_grading_exists(p, ell, k).verdict == Verdict::kTrue, !brute.empty()) << p << "^" << ell << " k=" << k;
      EXPECT_EQ(ff_grading_mus(p, ell, k), brute) << p << "^" << ell << " k=" << k;
    }
  }
}

TEST(Frobenius, Examples) {
  for (auto [p, ell, q] : std::vector<std::tuple<int, int, int>>{{7, 1, 3}, {3, 2, 2}, {2, 2, 3}, {5, 1, 2}}) {
    const GradedAlgebra A = frobenius_grading(p, ell, q);
    EXPECT_EQ(A.dim(), static_cast<std::size_t>(q));
    EXPECT_TRUE(verify_associative(A).ok);
    EXPECT_TRUE(is_graded_division(A));
    EXPECT_TRUE(is_commutative(A));
    EXPECT_TRUE(is_field_exhaustive(A)) << p << " " << ell << " " << q;
    const GaloisCheck g = dual_galois_check(A);
    EXPECT_TRUE(g.ok) << g.reason;
    EXPECT_EQ(g.automorphisms, static_cast<std::size_t>(q));
  }
  EXPECT_THROW(frobenius_grading(7, 1, 5), std::invalid_argument);
}

TEST(Kummer, Examples) {
  const auto F7 = FiniteField::construct(7, 1);
  const KummerResult triv = kummer_grading({F7, 3, {F7.from_int(6)}});
  EXPECT_EQ(triv.k, 1);
  EXPECT_EQ(triv.algebra.dim(), 1u);
  EXPECT_EQ(dual_galois_check(triv.algebra).automorphisms, 1u);

  const KummerResult k3 = kummer_grading({F7, 3, {F7.from_int(3)}});
  EXPECT_EQ(k3.k, 3);
  EXPECT_TRUE(graded_iso_1dim(k3.algebra, frobenius_grading(7, 1, 3)).has_value());

  const auto F5 = FiniteField::construct(5, 1);
  const KummerResult k2 = kummer_grading({F5, 2, {F5.from_int(2), F5.from_int(3)}});
  EXPECT_EQ(k2.k, 2);  // 2 and 3 are both non-squares mod 5
  EXPECT_TRUE(is_field_exhaustive(k2.algebra));

  const KummerResult k4 = kummer_grading({F5, 4, {F5.from_int(2)}});
  EXPECT_EQ(k4.k, 4);
  const GaloisCheck g = dual_galois_check(k4.algebra);
  EXPECT_TRUE(g.ok);
  EXPECT_EQ(g.automorphisms, 4u);
  EXPECT_EQ(g.fixed_dim, 1u);
}

TEST(Kummer, SupportIsCyclic) {
  for (int p : {5, 7}) {
    const auto F = FiniteField::construct(p, 1);
    for (int n = 1; n < p; ++n) {
      if ((p - 1) % n != 0) continue;
      for (int v = 1; v < p; ++v) {
        const KummerResult r = kummer_grading({F, n, {el(v)}});
        EXPECT_EQ(static_cast<std::int64_t>(r.algebra.support().size()), r.k);
        EXPECT_TRUE(is_graded_division(r.algebra));
        if (r.k > 1) EXPECT_TRUE(is_field_exhaustive(r.algebra));
      }
    }
  }
}

TEST(Kummer, RequiresRootsOfUnity) {
  const auto F7 = FiniteField::construct(7, 1);
  EXPECT_THROW(kummer_grading({F7, 4, {F7.from_int(3)}}), std::invalid_argument);
}

}  // namespace
}  // namespace gda
