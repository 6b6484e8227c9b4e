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

// Gradings on fields.
//
// A graded-field with support G = Z_{n_1} x ... x Z_{n_m} and identity
// component F is F[X_1]/(X_1^{n_1} - mu_1) (x) ... (x) F[X_m]/(X_m^{n_m} - mu_m).
// This module decides when such an algebra is a field (over Q, R and finite
// fields), when a finite field extension admits a grading, and builds the
// Frobenius-eigenspace and Kummer gradings explicitly.

#ifndef GDA_GRADEDFIELD_HPP_
#define GDA_GRADEDFIELD_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gda/abelian.hpp"
#include "gda/graded_algebra.hpp"

namespace gda {

enum class Verdict { kFalse, kTrue, kUndecided };
std::string to_string(Verdict v);

struct Decision {
  Verdict verdict = Verdict::kUndecided;
  std::string reason;
  // A proper monic factor of a reducible binomial, lowest degree first.
  std::optional<std::vector<Scalar>> factor;
  // u, v nonzero with u v = 0 in the graded-field algebra.
  std::optional<std::pair<Vec, Vec>> zero_divisor;
};

// Some y with y^n = x, when one exists in F (Q, R with rational roots only,
// finite fields).
std::optional<Scalar> nth_root(const Field& F, const Scalar& x, std::int64_t n);

// X^n - alpha is irreducible over F iff (i) alpha is not a p-th power for
// each prime p | n and (ii) alpha is not in -4 F^4 when 4 | n. On a false
// verdict, `factor` carries X^{n/p} - alpha^{1/p} or X^2 - 2bX + 2b^2 when
// the root is available.
Decision binomial_irreducible(const Field& F, const Scalar& alpha, std::int64_t n);
// Independent oracle over GF(q): X^n - alpha is irreducible iff it is
// squarefree and Berlekamp finds a single factor.
bool binomial_irreducible_berlekamp(const FiniteField& F, FFElem alpha, std::int64_t n);

struct GradedFieldSpec {
  Field field;
  FinAbGroup group;
  std::vector<Scalar> mu;  // one per cyclic factor
};

// The structure-constant algebra of the spec (trivial commutation).
GradedAlgebra graded_field_algebra(const GradedFieldSpec& spec);

// Exhaustive test over a finite field: every nonzero element is invertible.
// Throws std::invalid_argument for infinite fields or more than 2^20 elements.
bool is_field_exhaustive(const GradedAlgebra& A);
// Some pair u, v != 0 with u v = 0, by exhaustive search (finite fields).
std::optional<std::pair<Vec, Vec>> find_zero_divisor(const GradedAlgebra& A);

// All n_i = 2, char F != 2: a field iff the square classes of mu_1..mu_m are
// independent. Q: GF(2)-rank of (sign, prime exponents mod 2); GF(q): the
// quadratic character; R: the sign. A dependency yields an explicit zero
// divisor (prod X_i - y)(prod X_i + y) with y^2 = prod mu_i.
Decision is_field_exponent2(const GradedFieldSpec& spec);

// G a p-group. First the necessary test |U (F^x)^p / (F^x)^p| = p^m on the
// classes of the mu_i, then the binomial steps of the tower F = K_0 < K_1 <
// ... with K_i = K_{i-1}[X_i]/(X_i^{n_i} - mu_i). Over GF(q) the tower is
// tracked by degree alone (K_i = GF(q^{d_i})); over R the second proper step
// is always reducible; over Q only single steps and exponent 2 are decided.
Decision is_field_p_primary(const GradedFieldSpec& spec);

// Splits each factor into prime-power parts (X^{n/p^k} has p^k-th power mu)
// and combines the verdicts of the parts: a field iff every part is.
Decision is_field_general(const GradedFieldSpec& spec);

// Existence of a Z_k-grading on GF(p^{l k}) with identity component GF(p^l):
// (i) each prime q | k divides p^l - 1, (ii) 4 | k implies 4 | p^l - 1.
// `reason` names the failing condition.
Decision ff_grading_exists(std::int64_t p, int ell, std::int64_t k);
// mu in GF(p^l)^x with mu^{m/q} != 1 for every prime q | k, m = p^l - 1;
// empty when no grading exists. The field is FiniteField::construct(p, l).
std::vector<FFElem> ff_grading_mus(std::int64_t p, int ell, std::int64_t k);

// Z_q-grading of GF(p^{q l}) over GF(p^l) by the eigenspaces of x -> x^{p^l}
// for the eigenvalues zeta^i, zeta = the designated primitive q-th root.
// Basis vector i spans the eigenspace for zeta^i; basis vector 0 is 1.
// Throws std::invalid_argument unless q is prime and divides p^l - 1.
GradedAlgebra frobenius_grading(std::int64_t p, int ell, std::int64_t q);

struct KummerSpec {
  FiniteField base;
  std::int64_t n = 1;
  std::vector<FFElem> lambda_gens;  // Lambda = <gens> (F^x)^n
};
struct KummerResult {
  GradedAlgebra algebra;  // basis alpha^j, degree j in Z_k
  std::int64_t k = 1;     // |Lambda / (F^x)^n|
  FFElem a;               // alpha^n = a, a generates Lambda modulo n-th powers
};
// F(alpha) with alpha^n = a realized in GF(q^k) and graded by
// Lambda/(F^x)^n = Z_k, component j = F alpha^j. Throws std::invalid_argument
// unless n divides q - 1.
KummerResult kummer_grading(const KummerSpec& spec);

struct GaloisCheck {
  bool ok = false;
  std::size_t automorphisms = 0;  // distinct characters acting on A
  std::size_t fixed_dim = 0;      // common fixed space
  std::string reason;
};
// For A graded by G over a finite field F holding a primitive exp(G)-th
// root: each character chi of G acts by x -> chi(g) x on A_g. Checks these
// are |G| distinct algebra automorphisms with common fixed space F.
GaloisCheck dual_galois_check(const GradedAlgebra& A);

}  // namespace gda

#endif  // GDA_GRADEDFIELD_HPP_
