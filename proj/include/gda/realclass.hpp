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

// Finite-dimensional real graded-division algebras with abelian support.
//
// Every such algebra with support T is isomorphic to exactly one of
//   (1)  D(T, beta, mu)                 A_e = R
//   (2)  D(T, beta, mu) (x) H           A_e = H, H trivially graded
//   (3)  a real form of M_2(C(K,beta))  A_e = C, not central; [T:K] = 2
//   (4)  D(T, beta) over C              A_e = C, central; beta ~ beta^-1
// where beta is an alternating bicharacter and mu a +-1 quadratic form on
// T_[2] whose polarization is beta. Item (3) is parametrized by K, a sign
// bicharacter on K with T^[2] in rad beta, and an admissible sign map nu:
// on T_[2] \ K_[2] when K is a direct summand of T (3a), otherwise an
// equivalence class of maps on T \ K (3b).
//
// "Real" algebras are built over Field::real(): all structure constants lie
// in {0, +-1}, since R^x/(R^x)^n = {+-1}. Item (4) uses Field::complex(N).

#ifndef GDA_REALCLASS_HPP_
#define GDA_REALCLASS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gda/abelian.hpp"
#include "gda/bicharacter.hpp"
#include "gda/graded_algebra.hpp"

namespace gda {

// Sign-valued map on a finite set of group elements.
using SignMap = std::map<GroupElement, int>;

std::vector<AltBicharacter> enumerate_bicharacters_pm1(const FinAbGroup& T);
std::vector<AltBicharacter> enumerate_bicharacters_complex(const FinAbGroup& T);

// beta(g,h) as +-1; throws std::invalid_argument if beta is not sign valued
// at (g,h).
int sign_of(const AltBicharacter& beta, const GroupElement& g, const GroupElement& h);

// mu(e) = 1 and mu(g+h) = beta(g,h) mu(g) mu(h) on T_[2].
bool is_quadratic_form(const AltBicharacter& beta, const SignMap& mu);
// All quadratic forms on T_[2] with polarization beta, from free values on
// the basis (n_i/2) a_i, i with n_i even. Ordered by those basis values.
std::vector<SignMap> enumerate_quadratic_forms(const AltBicharacter& beta);
// The same set by filtering all 2^(|T_[2]|-1) candidate maps; test oracle.
std::vector<SignMap> quadratic_forms_by_filter(const AltBicharacter& beta);

// D(T, beta, mu) over Field::real(), X_i^{n_i} = mu((n_i/2) a_i) for even
// n_i and 1 otherwise.
GradedAlgebra real_quasitorus(const AltBicharacter& beta, const SignMap& mu);
// Real quaternions, trivially graded by `G`: basis 1, i, j, k.
GradedAlgebra quaternions(const FinAbGroup& G);

// --- item (3) ------------------------------------------------------------

// K of index 2 in T with a sign bicharacter on K's presentation.
class IndexTwoData {
 public:
  // Throws std::invalid_argument unless [T:K] = 2, beta is sign valued on
  // K's presentation group and T^[2] is contained in rad beta.
  IndexTwoData(FinAbGroup T, Subgroup K, AltBicharacter beta);

  const FinAbGroup& T() const { return T_; }
  const Subgroup& K() const { return K_; }
  const Presentation& K_presentation() const { return Kp_; }
  const AltBicharacter& beta() const { return beta_; }
  bool direct_summand() const { return summand_; }

  // beta on elements of K given in T coordinates.
  int beta_at(const GroupElement& g, const GroupElement& h) const;
  // Coordinates of an element of K in the presentation group.
  const GroupElement& coords(const GroupElement& k) const;

  // T \ K (case b) or T_[2] \ K_[2] (case a), ascending.
  std::vector<GroupElement> nu_domain() const;
  // K_[2], ascending.
  std::vector<GroupElement> k2() const { return k2_; }

 private:
  FinAbGroup T_;
  Subgroup K_;
  Presentation Kp_;
  AltBicharacter beta_;
  bool summand_ = false;
  std::map<GroupElement, GroupElement> coords_;
  std::vector<GroupElement> k2_;
};

// nu(t+g+h) nu(t) = nu(t+g) nu(t+h) beta(g,h) for t in the domain, g in K
// (K_[2] in case a) and h in K_[2].
bool is_admissible(const IndexTwoData& d, const SignMap& nu);
// Case (a): all admissible maps on T_[2] \ K_[2]. Case (b): one canonical
// representative per equivalence class, normalized to +1 at the least
// element of each K_[2]-coset. Both by exhaustive filtering.
std::vector<SignMap> enumerate_admissible(const IndexTwoData& d);
// Canonical representative of the class of nu (identity in case a).
SignMap canonical_nu(const IndexTwoData& d, const SignMap& nu);

// Transport (mu_{t0}, delta_{t0}) to t0 + g: mu(h) -> mu(h) beta(g,h),
// delta -> delta mu(g). g must lie in K_[2] when delta is used (case a).
std::pair<SignMap, int> change_base_point(const IndexTwoData& d, const SignMap& mu, int delta,
                                          const GroupElement& g);
// The choice-free nu from data relative to t0 (mu = mu_{t0} on K_[2]).
// Case (a): nu(t) = delta mu(t - t0). Case (b): the canonical class
// representative obtained by transporting mu to every coset. Throws
// std::invalid_argument if mu is not a quadratic form for beta on K_[2] or
// t0 is not in the domain.
SignMap canonicalize_item3(const IndexTwoData& d, const GroupElement& t0, const SignMap& mu,
                           int delta);
// mu = nu_{t0}: h -> nu(t0+h) nu(t0), and delta = nu(t0).
std::pair<SignMap, int> item3_data_at(const IndexTwoData& d, const GroupElement& t0,
                                      const SignMap& nu);

// Real form of M_2(C), C the complexification of D(K, beta, mu_{t0}), with
// basis Y_t, J Y_t for t in T (in T's element order). Y_s = diag(X_s, X_s),
// Y_{t0+s} = [[0, X_{2 t0} X_s], [lambda X_s, 0]], J = diag(i, -i), where
// lambda = delta in case (a) and 1 in case (b). Structure constants are
// obtained by multiplying these matrices over Q(i).
GradedAlgebra construct_item3(const IndexTwoData& d, const GroupElement& t0, const SignMap& mu,
                              int delta);

// For d = (aI + bJ) Y_t: Y_t J = -J Y_t, (J Y_t)^2 = Y_t^2 and Y_t^2 is a
// nonzero central element, which makes every nonzero element of A_t
// invertible. Checked on the structure-constant table.
bool square_central_check(const GradedAlgebra& A, const GroupElement& t);

// --- labels and the census -----------------------------------------------

enum class RealItem { kOne, kTwo, kThreeA, kThreeB, kFour };
std::string item_tag(RealItem it);

struct RealClassLabel {
  RealItem item = RealItem::kOne;
  FinAbGroup T;               // support group
  AltBicharacter beta;        // on T, or on K's presentation for item (3)
  SignMap mu;                 // items (1), (2): on T_[2]
  std::vector<GroupElement> K_gens;  // item (3), in T coordinates
  SignMap nu;                 // item (3), canonical
};

GradedAlgebra construct_item(const RealClassLabel& label);
// IndexTwoData of an item (3) label.
IndexTwoData item3_data(const RealClassLabel& label);

// Invariants read off the algebra alone: stratum (dim_R A_e, A_e central),
// K = Supp Cent(A_e), the commutation signs on K, and sign data of squares
// (items 1-3), or the pair {beta, beta^-1} (item 4).
struct RealInvariants {
  int dim_e = 0;        // over R
  bool e_central = false;
  bool e_commutative = false;
  std::vector<GroupElement> support;
  std::vector<GroupElement> cent_support;  // Supp Cent_A(A_e)
  std::string beta;     // canonical text
  std::string squares;  // canonical text

  std::string key() const;
};
RealInvariants real_invariants(const GradedAlgebra& A);

struct VerifiedEntry {
  RealClassLabel label;
  GradedAlgebra algebra;
  bool associative = false;
  bool graded_division = false;
  bool graded_central = false;    // Z(A)_e = R (items 1-3), C (item 4)
  bool stratum_ok = false;        // invariants match the item
  RealInvariants invariants;
};

// All labels with support exactly T, ordered by item then parameters.
std::vector<RealClassLabel> labels_for_support(const FinAbGroup& T);
// Constructs and checks one label (oracles always run).
VerifiedEntry verify_label(const RealClassLabel& label);

struct Stratum {
  Subgroup subgroup;     // of the bounding group
  Presentation presentation;
  std::vector<VerifiedEntry> entries;
};
// Every subgroup T of G with its labels. `jobs` > 1 distributes strata over
// threads; results are merged in subgroup order. `item` = 0 keeps all items,
// otherwise only 1..4.
std::vector<Stratum> classify_all(const FinAbGroup& G, int jobs = 1, int item = 0);

}  // namespace gda

#endif  // GDA_REALCLASS_HPP_
