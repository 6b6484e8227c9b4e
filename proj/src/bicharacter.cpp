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

#include "gda/bicharacter.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gda {

AltBicharacter::AltBicharacter(FinAbGroup K) : K_(std::move(K)) {
  const std::size_t m = K_.rank();
  v_.assign(m * (m - (m ? 1 : 0)) / 2, Phase());
}

AltBicharacter::AltBicharacter(FinAbGroup K,
                               const std::vector<std::tuple<int, int, Phase>>& pairs)
    : AltBicharacter(std::move(K)) {
  std::vector<char> seen(v_.size(), 0);
  for (auto [i, j, ph] : pairs) {
    if (i < 0 || j < 0 || i >= K_.rank() || j >= K_.rank() || i == j)
      throw std::invalid_argument("bicharacter: bad generator pair");
    if (i > j) {
      std::swap(i, j);
      ph = -ph;
    }
    const std::int64_t g = std::gcd(K_.orders()[i], K_.orders()[j]);
    if (g % ph.den != 0)
      throw std::invalid_argument("bicharacter: value " + gda::to_string(ph) +
                                  " on generators " + std::to_string(i) + "," +
                                  std::to_string(j) + " violates the order condition");
    std::size_t s = slot(i, j);
    if (seen[s] && v_[s] != ph) throw std::invalid_argument("bicharacter: conflicting values");
    seen[s] = 1;
    v_[s] = ph;
  }
}

std::size_t AltBicharacter::slot(int i, int j) const {
  const int m = K_.rank();
  return static_cast<std::size_t>(i * (2 * m - i - 1) / 2 + (j - i - 1));
}

Phase AltBicharacter::generator_value(int i, int j) const {
  if (i == j) return Phase();
  if (i < j) return v_[slot(i, j)];
  return -v_[slot(j, i)];
}

Phase AltBicharacter::operator()(const GroupElement& g, const GroupElement& h) const {
  Phase r;
  for (int i = 0; i < K_.rank(); ++i)
    for (int j = i + 1; j < K_.rank(); ++j) {
      const Phase& k = v_[slot(i, j)];
      if (k.is_trivial()) continue;
      std::int64_t c = static_cast<std::int64_t>(g[i]) * h[j] -
                       static_cast<std::int64_t>(g[j]) * h[i];
      r = r + k * c;
    }
  return r;
}

bool AltBicharacter::is_trivial() const {
  for (auto& p : v_)
    if (!p.is_trivial()) return false;
  return true;
}

bool AltBicharacter::is_sign_valued() const {
  for (auto& p : v_)
    if (p.den > 2) return false;
  return true;
}

AltBicharacter AltBicharacter::inverse() const {
  AltBicharacter b = *this;
  for (auto& p : b.v_) p = -p;
  return b;
}

Subgroup AltBicharacter::radical() const {
  std::vector<GroupElement> rad;
  for (const auto& s : K_.elements()) {
    bool ok = true;
    for (int i = 0; i < K_.rank() && ok; ++i)
      if (!(*this)(s, K_.generator(i)).is_trivial()) ok = false;
    if (ok) rad.push_back(s);
  }
  return Subgroup::generated_by(K_, rad);
}

std::string AltBicharacter::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < K_.rank(); ++i)
    for (int j = i + 1; j < K_.rank(); ++j) {
      if (!first) os << ", ";
      first = false;
      os << '(' << i << ',' << j << "):" << gda::to_string(v_[slot(i, j)]);
    }
  os << '}';
  return os.str();
}

}  // namespace gda
