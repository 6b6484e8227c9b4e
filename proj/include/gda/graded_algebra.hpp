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

// Structure-constant algebras graded by a finite abelian group, and the
// brute-force oracles used to certify every construction in the library.

#ifndef GDA_GRADED_ALGEBRA_HPP_
#define GDA_GRADED_ALGEBRA_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gda/abelian.hpp"
#include "gda/bicharacter.hpp"
#include "gda/field.hpp"
#include "gda/linalg.hpp"

namespace gda {

// Raised when an oracle cannot reach a verdict over the given field.
class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sorted by basis index, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  // table[i * n + j] = b_i b_j. Throws std::invalid_argument when a product
  // leaves its degree, an index is out of range, or `unit` is not a two-sided
  // unit of degree zero.
  GradedAlgebra(Field F, FinAbGroup G, std::vector<GroupElement> degrees,
                std::vector<SparseVec> table, Vec unit);

  const Field& field() const { return F_; }
  const FinAbGroup& group() const { return G_; }
  std::size_t dim() const { return deg_.size(); }
  const std::vector<GroupElement>& degrees() const { return deg_; }
  const GroupElement& degree(std::size_t i) const { return deg_[i]; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const Vec& unit() const { return unit_; }

  // Basis indices of A_g, ascending.
  const std::vector<std::size_t>& component(const GroupElement& g) const;
  // Degrees with a nonzero component, ascending.
  std::vector<GroupElement> support() const;
  // True when every nonzero component is one-dimensional.
  bool has_1dim_components() const;

  Vec basis_vector(std::size_t i) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec power(const Vec& a, std::int64_t e) const;
  bool is_homogeneous(const Vec& a) const;
  // Matrix of y -> x y.
  Mat left_mult_matrix(const Vec& x) const;
  // Two-sided inverse if x is invertible.
  std::optional<Vec> inverse(const Vec& x) const;

  // Graded subalgebra spanned by homogeneous vectors; the new basis is the
  // given list in order. Throws std::invalid_argument if not closed, not
  // homogeneous, dependent, or missing the unit.
  GradedAlgebra subalgebra(const std::vector<Vec>& basis) const;

 private:
  Field F_;
  FinAbGroup G_;
  std::vector<GroupElement> deg_;
  std::vector<SparseVec> table_;
  Vec unit_;
  std::vector<std::vector<std::size_t>> comp_;  // by group index
};

SparseVec to_sparse(const Field& F, const Vec& v);

struct AssociativityReport {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> witness;  // (i, j, k) failing
};
AssociativityReport verify_associative(const GradedAlgebra& A);

// Every nonzero homogeneous element is invertible. Decided by: A_e is a
// division algebra, and each nonzero component contains an invertible
// element (then A_g = A_e u). The A_e test is exact over R-kind (quadratic
// algebra with a definite norm), C-kind, finite fields (exhaustive) and one-
// or two-dimensional commutative A_e over Q; otherwise Undecided is thrown.
bool is_graded_division(const GradedAlgebra& A);
// The A_e part of the above.
bool is_division_algebra_identity_component(const GradedAlgebra& A);

GradedAlgebra identity_component(const GradedAlgebra& A);
// Basis of Z(A), built from homogeneous pieces.
std::vector<Vec> center(const GradedAlgebra& A);
std::size_t graded_center_e_dim(const GradedAlgebra& A);
// Elements commuting with every element of `S`; S must consist of
// homogeneous vectors, so the answer is graded and returned per degree.
std::map<GroupElement, std::vector<Vec>> centralizer(const GradedAlgebra& A,
                                                     const std::vector<Vec>& S);
bool is_commutative(const GradedAlgebra& A);

// b_i (x) c_j with degree deg(b_i); the grading of C is forgotten.
GradedAlgebra tensor_with_trivially_graded(const GradedAlgebra& A, const GradedAlgebra& C);

// --- one-dimensional components -------------------------------------------

// For Supp = T with A_t = F X_t: the phase gamma(s,t) with X_s X_t =
// e(gamma) X_{s+t}. Throws std::invalid_argument if a component is not
// one-dimensional or a constant is not a designated root of unity.
std::map<std::pair<GroupElement, GroupElement>, Phase> structure_phases(const GradedAlgebra& A);

// Degree-preserving isomorphism X_t -> lambda_t X'_t, lambda_t = e(phase).
struct ScalingWitness {
  std::vector<GroupElement> support;
  std::vector<Phase> lambda;
};
std::optional<ScalingWitness> graded_iso_1dim(const GradedAlgebra& A, const GradedAlgebra& B);
std::vector<ScalingWitness> all_graded_isos_1dim(const GradedAlgebra& A, const GradedAlgebra& B);

// beta(s,t) from X_s X_t = beta(s,t) X_t X_s, on the presentation of the
// support (on G itself when Supp(A) = G).
AltBicharacter commutation_bicharacter(const GradedAlgebra& A);
// mu(t) for every t in the support: the class of the scalar X_t^{o(t)} in
// F^x/(F^x)^{o(t)}, keyed by ambient group element.
std::map<GroupElement, Scalar> mu_values(const GradedAlgebra& A);
// mu on the generators of the group returned by commutation_bicharacter().
MuFunction mu_invariant(const GradedAlgebra& A);

}  // namespace gda

#endif  // GDA_GRADED_ALGEBRA_HPP_
