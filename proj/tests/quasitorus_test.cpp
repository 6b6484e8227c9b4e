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

#include "gda/quasitorus.hpp"

#include <gtest/gtest.h>

#include "gda/realclass.hpp"

namespace gda {
namespace {

GroupElement E(std::vector<int> e) { return GroupElement(std::move(e)); }

Vec A_basis(const GradedAlgebra& A, const GroupElement& t) {
  return A.basis_vector(A.component(t).front());
}

// Every +-1 mu on the generators of K.
std::vector<MuFunction> sign_mus(const Field& F, const FinAbGroup& K) {
  std::vector<MuFunction> out;
  for (int mask = 0; mask < (1 << K.rank()); ++mask) {
    MuFunction mu{K, {}};
    for (int i = 0; i < K.rank(); ++i) mu.gens.push_back(F.from_int((mask >> i) & 1 ? -1 : 1));
    out.push_back(mu);
  }
  return out;
}

TEST(Construct, GroupAlgebraOfZ2) {
  const Field Q = Field::rational();
  const FinAbGroup Z2({2});
  const GradedAlgebra A = construct_quasitorus(Q, AltBicharacter(Z2), MuFunction{Z2, {Q.one()}});
  EXPECT_EQ(A.dim(), 2u);
  EXPECT_TRUE(is_commutative(A));
  const Vec x = A.basis_vector(A.component(E({1})).front());
  EXPECT_EQ(A.multiply(x, x), A.unit());
}

TEST(Construct, Quaternions) {
  const Field R = Field::real();
  const FinAbGroup V({2, 2});
  const GradedAlgebra H = construct_quasitorus(R, AltBicharacter(V, {{0, 1, Phase(1, 2)}}),
                                               MuFunction{V, {R.from_int(-1), R.from_int(-1)}});
  const Vec i = A_basis(H, E({1, 0})), j = A_basis(H, E({0, 1}));
  const Vec minus_one = [&] {
    Vec v = H.unit();
    for (auto& c : v) c = R.neg(c);
    return v;
  }();
  EXPECT_EQ(H.multiply(i, i), minus_one);
  EXPECT_EQ(H.multiply(j, j), minus_one);
  Vec ji = H.multiply(j, i);
  for (auto& c : ji) c = R.neg(c);
  EXPECT_EQ(H.multiply(i, j), ji);
  EXPECT_TRUE(is_graded_division(H));
}

TEST(Construct, QZeta8AsZ4Graded) {
  const Field Q = Field::rational();
  const FinAbGroup Z4({4});
  const GradedAlgebra A = construct_quasitorus(Q, AltBicharacter(Z4), MuFunction{Z4, {Q.from_int(-1)}});
  const Vec x = A.basis_vector(A.component(E({1})).front());
  Vec x4 = A.power(x, 4);
  EXPECT_TRUE(Q.eq(x4[A.component(E({0})).front()], Q.from_int(-1)));
  EXPECT_TRUE(verify_associative(A).ok);
  EXPECT_TRUE(is_graded_division(A));
}

TEST(ValidateMu, Examples) {
  const Field R = Field::real();
  const FinAbGroup Z4({4});
  const auto m = validate_mu(R, AltBicharacter(Z4), MuFunction{Z4, {R.from_int(-1)}});
  EXPECT_TRUE(R.eq(m.at(E({2})), R.from_int(-1)));

  const Field Q = Field::rational();
  const FinAbGroup G({2, 3});
  const auto m2 = validate_mu(Q, AltBicharacter(G), MuFunction{G, {Q.from_int(2), Q.one()}});
  EXPECT_TRUE(Q.same_power_class(m2.at(E({1, 1})), Q.from_int(8), 6));
}

TEST(ValidateMu, RejectsZero) {
  const Field Q = Field::rational();
  const FinAbGroup Z2({2});
  EXPECT_THROW(construct_quasitorus(Q, AltBicharacter(Z2), MuFunction{Z2, {Q.zero()}}),
               std::invalid_argument);
}

TEST(Construct, RejectsMissingRoot) {
  const FinAbGroup G({4, 4});
  const AltBicharacter b(G, {{0, 1, Phase(1, 4)}});
  const Field R = Field::real();
  EXPECT_THROW(construct_quasitorus(R, b, MuFunction{G, {R.one(), R.one()}}), std::invalid_argument);
  const Field C = Field::cyclotomic(4);
  EXPECT_TRUE(is_graded_division(construct_quasitorus(C, b, MuFunction{G, {C.one(), C.one()}})));
}

// Oracles and the invariant round trip over R for every sign datum, |K| <= 8.
TEST(Construct, RealRoundTrip) {
  const Field R = Field::real();
  for (int n = 1; n <= 8; ++n)
    for (const auto& K : groups_of_order(n))
      for (const auto& b : enumerate_bicharacters_pm1(K))
        for (const auto& mu : sign_mus(R, K)) {
          const GradedAlgebra A = construct_quasitorus(R, b, mu);
          ASSERT_TRUE(verify_associative(A).ok);
          ASSERT_TRUE(is_graded_division(A));
          EXPECT_EQ(commutation_bicharacter(A), b);
          const auto expected = validate_mu(R, b, mu);
          for (const auto& [t, m] : mu_values(A)) EXPECT_TRUE(R.eq(m, expected.at(t)));
          EXPECT_EQ(is_commutative(A), b.is_trivial());
        }
}

TEST(Construct, FiniteFieldRoundTrip) {
  const Field F = Field::finite(FiniteField::construct(13, 1));
  for (const auto& K : {FinAbGroup({3}), FinAbGroup({2, 2}), FinAbGroup({4}), FinAbGroup({6, 2})}) {
    for (const auto& b : enumerate_bicharacters_complex(K)) {
      MuFunction mu{K, {}};
      for (int i = 0; i < K.rank(); ++i) mu.gens.push_back(F.from_int(2 + i));
      const GradedAlgebra A = construct_quasitorus(F, b, mu);
      ASSERT_TRUE(verify_associative(A).ok);
      EXPECT_EQ(commutation_bicharacter(A), b);
      const auto expected = validate_mu(F, b, mu);
      for (const auto& [t, m] : mu_values(A)) EXPECT_TRUE(F.eq(m, expected.at(t)));
    }
  }
}

// mu_i r^{o(a_i)} gives a graded-isomorphic algebra.
TEST(Construct, ScalingIndependence) {
  const Field F = Field::finite(FiniteField::construct(7, 1));
  const FinAbGroup K({3, 2});
  for (const auto& b : enumerate_bicharacters_complex(K))
    for (int r = 1; r < 7; ++r) {
      MuFunction mu{K, {F.from_int(3), F.from_int(5)}};
      MuFunction scaled = mu;
      for (int i = 0; i < K.rank(); ++i)
        scaled.gens[i] = F.mul(mu.gens[i], F.pow(F.from_int(r), K.orders()[i]));
      EXPECT_TRUE(graded_iso_1dim(construct_quasitorus(F, b, mu), construct_quasitorus(F, b, scaled)));
    }
}

TEST(PrimaryDecompose, Examples) {
  const Field Q = Field::rational();
  const FinAbGroup Z6({6});
  const GradedAlgebra A = construct_quasitorus(Q, AltBicharacter(Z6), MuFunction{Z6, {Q.one()}});
  const auto parts = primary_decompose(A);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, 2);
  EXPECT_EQ(parts[0].second.support(), (std::vector<GroupElement>{E({0}), E({3})}));
  EXPECT_EQ(parts[1].second.support(), (std::vector<GroupElement>{E({0}), E({2}), E({4})}));
  EXPECT_TRUE(primary_tensor_map_is_iso(A));

  const FinAbGroup G({2, 3});
  const auto p2 = primary_decompose(construct_quasitorus(Q, AltBicharacter(G), MuFunction{G, {Q.from_int(2), Q.from_int(5)}}));
  ASSERT_EQ(p2.size(), 2u);
  EXPECT_EQ(p2[0].second.dim(), 2u);
  EXPECT_EQ(p2[1].second.dim(), 3u);
}

TEST(PrimaryDecompose, NoncommutativeOverCyclotomic) {
  const Field C = Field::cyclotomic(12);
  const FinAbGroup K({2, 2, 3, 3});
  const AltBicharacter b(K, {{0, 1, Phase(1, 2)}, {2, 3, Phase(1, 3)}});
  const GradedAlgebra A = construct_quasitorus(C, b, MuFunction{K, {C.one(), C.one(), C.one(), C.one()}});
  EXPECT_TRUE(primary_tensor_map_is_iso(A));
}

TEST(Radical, Examples) {
  const FinAbGroup V({2, 2});
  EXPECT_EQ(AltBicharacter(V).radical().order(), 4);
  EXPECT_EQ(AltBicharacter(V, {{0, 1, Phase(1, 2)}}).radical().order(), 1);
  const FinAbGroup G({4, 2});
  const AltBicharacter b(G, {{0, 1, Phase(1, 2)}});
  std::vector<GroupElement> filt;
  for (const auto& s : G.elements()) {
    bool in = true;
    for (const auto& t : G.elements()) in = in && b(s, t).is_trivial();
    if (in) filt.push_back(s);
  }
  EXPECT_EQ(radical(b).elements(), filt);
  EXPECT_EQ(filt, (std::vector<GroupElement>{E({0, 0}), E({2, 0})}));
}

}  // namespace
}  // namespace gda
