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

#include "gda/graded_algebra.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "gda/quasitorus.hpp"
#include "gda/realclass.hpp"

namespace gda {
namespace {

GroupElement E(std::vector<int> e) { return GroupElement(std::move(e)); }

GradedAlgebra group_algebra(const Field& F, const FinAbGroup& G) {
  return construct_quasitorus(F, AltBicharacter(G), MuFunction{G, std::vector<Scalar>(G.rank(), F.one())});
}

// Q[x]/(x^2), deg x = 1 in Z_2.
GradedAlgebra dual_numbers() {
  const Field Q = Field::rational();
  const FinAbGroup G({2});
  std::vector<SparseVec> t(4);
  t[0] = {{0, Q.one()}};
  t[1] = {{1, Q.one()}};
  t[2] = {{1, Q.one()}};
  Vec unit{Q.one(), Q.zero()};
  return GradedAlgebra(Q, G, {E({0}), E({1})}, t, unit);
}

RealClassLabel find_label(const FinAbGroup& T, RealItem item, const std::function<bool(const RealClassLabel&)>& pred) {
  for (const auto& l : labels_for_support(T))
    if (l.item == item && pred(l)) return l;
  throw std::logic_error("label not found");
}

GradedAlgebra quaternions_as_item3() {
  const FinAbGroup T({2});
  return construct_item(find_label(T, RealItem::kThreeA, [&](const RealClassLabel& l) {
    return l.nu.at(E({1})) == -1;
  }));
}

TEST(Associativity, GroupAlgebra) {
  EXPECT_TRUE(verify_associative(group_algebra(Field::rational(), FinAbGroup({2}))).ok);
}

TEST(Associativity, BrokenTableHasWitness) {
  const Field Q = Field::rational();
  const FinAbGroup G(std::vector<int>{});
  // Basis 1, x, y with x x = y, x y = 0, y x = x, y y = 0.
  std::vector<SparseVec> t(9);
  for (std::size_t i = 0; i < 3; ++i) {
    t[i] = {{i, Q.one()}};
    t[i * 3] = {{i, Q.one()}};
  }
  t[1 * 3 + 1] = {{2, Q.one()}};
  t[2 * 3 + 1] = {{1, Q.one()}};
  const GradedAlgebra A(Q, G, {G.identity(), G.identity(), G.identity()}, t,
                        Vec{Q.one(), Q.zero(), Q.zero()});
  const auto r = verify_associative(A);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(Construction, RejectsDegreeViolation) {
  const Field Q = Field::rational();
  std::vector<SparseVec> t(4);
  t[0] = {{0, Q.one()}};
  t[1] = {{1, Q.one()}};
  t[2] = {{1, Q.one()}};
  t[3] = {{1, Q.one()}};  // x x lands in degree 1, not 0
  EXPECT_THROW(GradedAlgebra(Q, FinAbGroup({2}), {E({0}), E({1})}, t, Vec{Q.one(), Q.zero()}),
               std::invalid_argument);
}

TEST(GradedDivision, Examples) {
  EXPECT_TRUE(is_graded_division(group_algebra(Field::rational(), FinAbGroup({2}))));
  EXPECT_FALSE(is_graded_division(dual_numbers()));
  EXPECT_TRUE(is_graded_division(quaternions_as_item3()));
}

TEST(Center, Examples) {
  const GradedAlgebra A = group_algebra(Field::rational(), FinAbGroup({2}));
  EXPECT_EQ(identity_component(A).dim(), 1u);
  EXPECT_EQ(center(A).size(), 2u);
  EXPECT_EQ(graded_center_e_dim(A), 1u);

  const GradedAlgebra H = quaternions_as_item3();
  EXPECT_EQ(identity_component(H).dim(), 2u);
  EXPECT_EQ(graded_center_e_dim(H), 1u);

  const FinAbGroup V({2, 2});
  const AltBicharacter b(V, {{0, 1, Phase(1, 2)}});
  const SignMap one{{E({0, 0}), 1}, {E({0, 1}), 1}, {E({1, 0}), 1}, {E({1, 1}), -1}};
  ASSERT_TRUE(is_quadratic_form(b, one));
  const GradedAlgebra M = real_quasitorus(b, one);
  EXPECT_EQ(center(M).size(), 1u);
}

TEST(Iso1Dim, Examples) {
  const Field R = Field::real();
  const FinAbGroup Z2({2});
  const GradedAlgebra A = group_algebra(R, Z2);
  const auto id = graded_iso_1dim(A, A);
  ASSERT_TRUE(id.has_value());
  const GradedAlgebra C = construct_quasitorus(R, AltBicharacter(Z2), MuFunction{Z2, {R.from_int(-1)}});
  EXPECT_FALSE(graded_iso_1dim(A, C).has_value());

  const FinAbGroup Z4({4});
  const GradedAlgebra D = group_algebra(R, Z4);
  const auto all = all_graded_isos_1dim(D, D);
  const std::vector<Phase> flip{Phase(0, 1), Phase(1, 2), Phase(0, 1), Phase(1, 2)};
  EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const ScalingWitness& w) { return w.lambda == flip; }));
}

TEST(Invariants, CommutativeGroupAlgebra) {
  const Field Q = Field::rational();
  const GradedAlgebra A = group_algebra(Q, FinAbGroup({2, 3}));
  EXPECT_TRUE(commutation_bicharacter(A).is_trivial());
  for (const auto& [t, m] : mu_values(A)) EXPECT_TRUE(Q.is_one(m));
}

TEST(Invariants, QuaternionsZ2xZ2) {
  const GradedAlgebra H = real_quasitorus(
      AltBicharacter(FinAbGroup({2, 2}), {{0, 1, Phase(1, 2)}}),
      {{E({0, 0}), 1}, {E({0, 1}), -1}, {E({1, 0}), -1}, {E({1, 1}), -1}});
  const AltBicharacter b = commutation_bicharacter(H);
  EXPECT_EQ(b(E({1, 0}), E({0, 1})), Phase(1, 2));
  const Field R = Field::real();
  for (const auto& [t, m] : mu_values(H))
    if (!t.is_zero()) EXPECT_TRUE(R.eq(m, R.from_int(-1)));
}

TEST(Invariants, Z4NegativeMu) {
  const Field R = Field::real();
  const FinAbGroup Z4({4});
  const GradedAlgebra A = construct_quasitorus(R, AltBicharacter(Z4), MuFunction{Z4, {R.from_int(-1)}});
  const auto mu = mu_values(A);
  EXPECT_TRUE(R.eq(mu.at(E({1})), R.from_int(-1)));
  EXPECT_TRUE(R.eq(mu.at(E({2})), R.from_int(-1)));
}

TEST(GradedDivision, SupportIsSubgroup) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& T : groups_of_order(n))
      for (const auto& l : labels_for_support(T)) {
        const GradedAlgebra A = construct_item(l);
        ASSERT_TRUE(is_graded_division(A));
        const auto sup = A.support();
        for (const auto& g : sup)
          for (const auto& h : sup) EXPECT_TRUE(std::binary_search(sup.begin(), sup.end(), A.group().sub(g, h)));
      }
}

// Inverses of invertible elements of A_H stay in A_H.
TEST(GradedDivision, InversesStayInSubgroupPart) {
  std::mt19937 rng(20260401);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int n : {2, 4, 8})
    for (const auto& T : groups_of_order(n))
      for (const auto& l : labels_for_support(T)) {
        const GradedAlgebra A = construct_item(l);
        if (A.dim() > 16) continue;
        const Field& F = A.field();
        for (const auto& H : all_subgroups(A.group())) {
          for (int trial = 0; trial < 3; ++trial) {
            Vec x = zero_vec(F, A.dim());
            for (std::size_t i = 0; i < A.dim(); ++i)
              if (H.contains(A.degree(i))) x[i] = F.from_int(coef(rng));
            const auto inv = A.inverse(x);
            if (!inv) continue;
            for (std::size_t i = 0; i < A.dim(); ++i)
              if (!F.is_zero((*inv)[i])) EXPECT_TRUE(H.contains(A.degree(i)));
          }
        }
      }
}

TEST(Tensor, WithQuaternions) {
  const FinAbGroup Z2({2});
  const GradedAlgebra A = group_algebra(Field::real(), Z2);
  const GradedAlgebra B = tensor_with_trivially_graded(A, quaternions(FinAbGroup(std::vector<int>{})));
  EXPECT_EQ(B.dim(), 8u);
  EXPECT_TRUE(verify_associative(B).ok);
  EXPECT_EQ(B.component(E({1})).size(), 4u);
}

}  // namespace
}  // namespace gda
