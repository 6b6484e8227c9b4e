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

// JSON descriptors for fields, groups, bicharacters and algebras.
//
//   field     {"kind":"Q"} | {"kind":"R"} | {"kind":"C","conductor":N}
//             | {"kind":"cyclotomic","conductor":N}
//             | {"kind":"GF","p":7,"ell":2,"modulus":[c0,...,1]}
//   scalar    "p/q" over Q and R; coefficient array over GF; array of "p/q"
//             over cyclotomic and C (powers of zeta, length phi(N))
//   group     {"orders":[4,2]}, elements as integer arrays
//   algebra   {"field","group","degrees":[[..]..],"unit":[[i,c]..],
//              "entries":[{"i","j","k","c"}..]}
//
// Objects are written with sorted keys and the algebra basis is ordered by
// degree, so equal algebras serialize to identical bytes. Integers that may
// exceed 64 bits always travel as strings.

#ifndef GDA_JSON_IO_HPP_
#define GDA_JSON_IO_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gda/bicharacter.hpp"
#include "gda/graded_algebra.hpp"
#include "gda/gradedfield.hpp"
#include "gda/realclass.hpp"

namespace gda {

using json = nlohmann::json;

// Structurally invalid descriptor (wrong types, missing keys).
class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json field_to_json(const Field& F);
Field field_from_json(const json& j);
// "Q", "R", "C(N)", "Q(zeta_N)", "GF(p)", "GF(p^l)".
Field field_from_text(const std::string& s);

json scalar_to_json(const Field& F, const Scalar& x);
Scalar scalar_from_json(const Field& F, const json& j);
// Integer, "p/q" or, over GF(p^l), the base-p digit encoding of the
// coefficients (c_0 least significant).
Scalar scalar_from_text(const Field& F, const std::string& s);

json group_to_json(const FinAbGroup& G);
FinAbGroup group_from_json(const json& j);
// "4,2"; "1" or "" for the trivial group.
FinAbGroup group_from_text(const std::string& s);
json element_to_json(const GroupElement& g);
GroupElement element_from_json(const FinAbGroup& G, const json& j);

json phase_to_json(const Phase& p);
Phase phase_from_json(const json& j);
// [[i, j, "num/den"], ...] over nontrivial generator pairs i < j.
json beta_to_json(const AltBicharacter& beta);
AltBicharacter beta_from_json(const FinAbGroup& K, const json& j);
// [[i, value], ...], one per factor.
json mu_to_json(const Field& F, const MuFunction& mu);
MuFunction mu_from_json(const Field& F, const FinAbGroup& K, const json& j);

// {"field","group","beta","mu"}; beta and mu default to trivial and 1.
struct QuasitorusSpec {
  Field field;
  AltBicharacter beta;
  MuFunction mu;
};
json quasitorus_spec_to_json(const QuasitorusSpec& s);
QuasitorusSpec quasitorus_spec_from_json(const json& j);

json algebra_to_json(const GradedAlgebra& A);
GradedAlgebra algebra_from_json(const json& j);

json sign_map_to_json(const SignMap& m);
json label_to_json(const RealClassLabel& label);
json invariants_to_json(const RealInvariants& inv);

json decision_to_json(const Field& F, const Decision& d);

// Text with a trailing newline: two-space indentation, sorted keys.
std::string dump_canonical(const json& j);

}  // namespace gda

#endif  // GDA_JSON_IO_HPP_
