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

// Alternating bicharacters K x K -> roots of unity, and mu data on generators.

#ifndef GDA_BICHARACTER_HPP_
#define GDA_BICHARACTER_HPP_

#include <string>
#include <tuple>
#include <vector>

#include "gda/abelian.hpp"
#include "gda/field.hpp"

namespace gda {

// Determined by the phases beta(a_i, a_j), i < j, on the factor generators a_i
// of K. Each such phase must be killed by both o(a_i) and o(a_j).
class AltBicharacter {
 public:
  AltBicharacter() = default;
  explicit AltBicharacter(FinAbGroup K);  // trivial
  // `pairs` lists (i, j, phase) with i != j; unspecified pairs are trivial.
  // Throws std::invalid_argument on an order violation or conflicting input.
  AltBicharacter(FinAbGroup K, const std::vector<std::tuple<int, int, Phase>>& pairs);

  const FinAbGroup& group() const { return K_; }
  Phase generator_value(int i, int j) const;
  Phase operator()(const GroupElement& g, const GroupElement& h) const;

  bool is_trivial() const;
  // Every value is +-1.
  bool is_sign_valued() const;
  AltBicharacter inverse() const;
  // rad beta = { s : beta(s, t) = 1 for all t }.
  Subgroup radical() const;

  std::string to_string() const;

  friend bool operator==(const AltBicharacter&, const AltBicharacter&) = default;
  friend auto operator<=>(const AltBicharacter& a, const AltBicharacter& b) {
    return std::tie(a.K_.orders(), a.v_) <=> std::tie(b.K_.orders(), b.v_);
  }

 private:
  std::size_t slot(int i, int j) const;  // i < j
  FinAbGroup K_;
  std::vector<Phase> v_;  // row-major upper triangle
};

// Builds the bicharacter of K from an arbitrary evaluation function by
// reading it on generator pairs.
template <typename Fn>
AltBicharacter bicharacter_from(const FinAbGroup& K, Fn&& beta) {
  std::vector<std::tuple<int, int, Phase>> pairs;
  for (int i = 0; i < K.rank(); ++i)
    for (int j = i + 1; j < K.rank(); ++j)
      pairs.emplace_back(i, j, beta(K.generator(i), K.generator(j)));
  return AltBicharacter(K, pairs);
}

// mu on the factor generators of K: gens[i] stands for its class in
// F^x / (F^x)^{o(a_i)}.
struct MuFunction {
  FinAbGroup group;
  std::vector<Scalar> gens;
};

}  // namespace gda

#endif  // GDA_BICHARACTER_HPP_
