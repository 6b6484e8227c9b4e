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

// Finite abelian groups presented as Z_{n_1} x ... x Z_{n_m}.
//
// Everything is written additively. A group is a fixed list of cyclic factor
// orders; two presentations of isomorphic groups compare unequal, and
// `normalized()` / `primary_form()` give canonical presentations when that
// matters. Elements are exponent tuples and are numbered in mixed radix with
// the first coordinate most significant, so element indices sort the same way
// as exponent tuples do.

#ifndef GDA_ABELIAN_HPP_
#define GDA_ABELIAN_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gda {

struct GroupElement {
  std::vector<int> exps;

  GroupElement() = default;
  explicit GroupElement(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  int operator[](std::size_t i) const { return exps[i]; }
  int& operator[](std::size_t i) { return exps[i]; }
  bool is_zero() const;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& g);

class FinAbGroup {
 public:
  FinAbGroup() = default;
  // Each order must be >= 1. Order-1 factors are kept.
  explicit FinAbGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  std::int64_t order() const { return size_; }
  std::int64_t exponent() const;

  GroupElement identity() const;
  GroupElement generator(int i) const;
  bool is_element(const GroupElement& g) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, std::int64_t k) const;

  std::size_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::size_t index) const;
  std::vector<GroupElement> elements() const;

  // Index arithmetic, used by dense structure-constant tables.
  std::size_t add_index(std::size_t a, std::size_t b) const;
  std::size_t neg_index(std::size_t a) const;

  // Invariant-factor form d_1 | d_2 | ... | d_r with d_i > 1.
  FinAbGroup normalized() const;
  // Prime-power cyclic factors, 2-primary first then odd primes ascending,
  // ascending exponent within a prime.
  FinAbGroup primary_form() const;

  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<int> orders_;
  std::vector<std::size_t> stride_;
  std::int64_t size_ = 1;
};

// Least n >= 1 with n*g = 0.
std::int64_t element_order(const FinAbGroup& G, const GroupElement& g);

class Subgroup;

// A basis of a (sub)group: elements g_i with the subgroup equal to the
// internal direct sum of the cyclic groups <g_i>. `group` has orders o(g_i).
struct Presentation {
  FinAbGroup group;
  std::vector<GroupElement> images;  // image of the i-th generator

  // Image of an element of `group` in the ambient group.
  GroupElement embed(const FinAbGroup& ambient, const GroupElement& x) const;
};

class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup generated_by(const FinAbGroup& ambient,
                               std::vector<GroupElement> gens);
  static Subgroup trivial(const FinAbGroup& ambient);
  static Subgroup whole(const FinAbGroup& ambient);

  const FinAbGroup& ambient() const { return ambient_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  // Ambient indices of the elements, ascending.
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::vector<GroupElement> elements() const;
  std::int64_t order() const { return static_cast<std::int64_t>(indices_.size()); }
  bool contains(const GroupElement& g) const;
  bool contains_index(std::size_t i) const { return member_[i] != 0; }
  bool is_subgroup_of(const Subgroup& other) const;
  std::int64_t index_in_ambient() const { return ambient_.order() / order(); }

  // Prime-power basis, ordered like FinAbGroup::primary_form().
  Presentation presentation() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.indices_ == b.indices_;
  }

 private:
  FinAbGroup ambient_;
  std::vector<GroupElement> gens_;
  std::vector<std::size_t> indices_;
  std::vector<char> member_;
};

bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);

// Elements of p-power order. Throws std::invalid_argument if p is not prime.
Subgroup torsion_p_part(const FinAbGroup& G, std::int64_t p);
// G_[2] = { g : 2g = 0 }.
Subgroup two_torsion(const FinAbGroup& G);
// G^[2] = { 2g }.
Subgroup squares(const FinAbGroup& G);
// Same two operations relative to a subgroup K (K_[2], K^[2]).
Subgroup two_torsion(const Subgroup& K);
Subgroup squares(const Subgroup& K);

// Kernels of the surjections T -> Z_2, ordered by the character's values on
// the generators. Empty if |T| is odd.
std::vector<Subgroup> index2_subgroups(const FinAbGroup& T);

// For K of index 2 in T and t0 outside K: true iff 2*t0 lies in K^[2], which
// holds iff K is a direct summand of T. Throws std::invalid_argument if K does
// not have index 2 or t0 lies in K.
bool is_direct_summand(const Subgroup& K, const GroupElement& t0);

// Cosets of K in its ambient group, each sorted, ordered by least element.
std::vector<std::vector<GroupElement>> coset_decomposition(const Subgroup& K);

struct Quotient {
  FinAbGroup group;                 // T/K with a prime-power presentation
  std::vector<GroupElement> lifts;  // lifts[i] maps to generator i
  std::vector<std::size_t> projection;  // ambient index -> quotient index

  GroupElement project(const FinAbGroup& T, const GroupElement& t) const;
};

Quotient quotient_group(const Subgroup& K);

// Every subgroup of G, ordered by (order, sorted index list).
std::vector<Subgroup> all_subgroups(const FinAbGroup& G);

// One primary_form() presentation per isomorphism class of abelian groups of
// order n, in lexicographic order of the factor lists.
std::vector<FinAbGroup> groups_of_order(std::int64_t n);

}  // namespace gda

#endif  // GDA_ABELIAN_HPP_
