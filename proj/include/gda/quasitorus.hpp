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

// Quantum quasitori D(K, beta, mu): the graded-division algebras with
// one-dimensional homogeneous components.
//
// D(K, beta, mu) is generated by X_1, ..., X_m (deg X_i = a_i, the factor
// generators of K) subject to X_i X_j = beta(a_i, a_j) X_j X_i and
// X_i^{o(a_i)} = mu_i. The basis vector with index idx is X^n = X_1^{n_1} ...
// X_m^{n_m} where n = K.element_at(idx), and
//
//   X^a X^b = prod_{i>j} beta(a_i, a_j)^{a_i b_j}
//             * prod_i mu_i^{floor((a_i + b_i) / o(a_i))} * X^{(a+b) mod o}.

#ifndef GDA_QUASITORUS_HPP_
#define GDA_QUASITORUS_HPP_

#include <map>
#include <utility>
#include <vector>

#include "gda/bicharacter.hpp"
#include "gda/graded_algebra.hpp"

namespace gda {

// Throws std::invalid_argument if beta and mu live on different groups, a
// value of beta has no designated root in F, or some mu_i is zero.
GradedAlgebra construct_quasitorus(const Field& F, const AltBicharacter& beta,
                                   const MuFunction& mu);

// mu(g) for every g in K, as canonical class representatives in
// F^x/(F^x)^{o(g)}, computed from the generator values by the power rules
// for p-parts and coprime parts. Each value is evaluated along two factor
// orders; a disagreement raises std::logic_error.
std::map<GroupElement, Scalar> validate_mu(const Field& F, const AltBicharacter& beta,
                                           const MuFunction& mu);

// The graded subalgebras supported on the p-torsion of Supp(A), one per
// prime dividing |Supp(A)|. Throws std::logic_error if the product map from
// their tensor product to A is not an isomorphism.
std::vector<std::pair<std::int64_t, GradedAlgebra>> primary_decompose(const GradedAlgebra& A);

// The multiplication map from the tensor product of the primary parts is an
// isomorphism: images of basis tensors are nonzero, land in distinct
// components, and parts for different primes commute.
bool primary_tensor_map_is_iso(const GradedAlgebra& A);

inline Subgroup radical(const AltBicharacter& beta) { return beta.radical(); }

}  // namespace gda

#endif  // GDA_QUASITORUS_HPP_
