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

#include "gda/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gda {

bool GroupElement::is_zero() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) os << ',';
    os << g[i];
  }
  os << ')';
  return os.str();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// (prime, exponent) pairs of n.
std::vector<std::pair<std::int64_t, int>> factor_small(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Orders sorted by the primary convention: 2-primary first, odd primes
// ascending, ascending within a prime.
bool primary_less(std::int64_t a, std::int64_t b) {
  auto pa = factor_small(a), pb = factor_small(b);
  std::int64_t p = pa.empty() ? 1 : pa.front().first;
  std::int64_t q = pb.empty() ? 1 : pb.front().first;
  auto key = [](std::int64_t prime) { return prime == 2 ? 0 : prime; };
  if (p != q) return key(p) < key(q);
  return a < b;
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  stride_.assign(orders_.size(), 1);
  size_ = 1;
  for (int n : orders_)
    if (n < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
  for (std::size_t i = orders_.size(); i-- > 0;) {
    stride_[i] = static_cast<std::size_t>(size_);
    size_ *= orders_[i];
  }
}

std::int64_t FinAbGroup::exponent() const {
  std::int64_t e = 1;
  for (int n : orders_) e = std::lcm(e, static_cast<std::int64_t>(n));
  return e;
}

GroupElement FinAbGroup::identity() const {
  return GroupElement(std::vector<int>(orders_.size(), 0));
}

GroupElement FinAbGroup::generator(int i) const {
  GroupElement g = identity();
  g[i] = orders_[i] > 1 ? 1 : 0;
  return g;
}

bool FinAbGroup::is_element(const GroupElement& g) const {
  if (g.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < 0 || g[i] >= orders_[i]) return false;
  return true;
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = a;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    r[i] = static_cast<int>((a[i] + b[i]) % orders_[i]);
  return r;
}

GroupElement FinAbGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

GroupElement FinAbGroup::neg(const GroupElement& a) const {
  GroupElement r = a;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    r[i] = static_cast<int>(mod(-a[i], orders_[i]));
  return r;
}

GroupElement FinAbGroup::scale(const GroupElement& a, std::int64_t k) const {
  GroupElement r = a;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    r[i] = static_cast<int>(mod(static_cast<std::int64_t>(a[i]) * mod(k, orders_[i]),
                                orders_[i]));
  return r;
}

std::size_t FinAbGroup::index_of(const GroupElement& g) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    idx += static_cast<std::size_t>(g[i]) * stride_[i];
  return idx;
}

GroupElement FinAbGroup::element_at(std::size_t index) const {
  GroupElement g = identity();
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    g[i] = static_cast<int>(index / stride_[i]);
    index %= stride_[i];
  }
  return g;
}

std::vector<GroupElement> FinAbGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(size_); ++i)
    out.push_back(element_at(i));
  return out;
}

std::size_t FinAbGroup::add_index(std::size_t a, std::size_t b) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::size_t x = a / stride_[i], y = b / stride_[i];
    a %= stride_[i];
    b %= stride_[i];
    r += ((x + y) % static_cast<std::size_t>(orders_[i])) * stride_[i];
  }
  return r;
}

std::size_t FinAbGroup::neg_index(std::size_t a) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::size_t n = static_cast<std::size_t>(orders_[i]);
    std::size_t x = a / stride_[i];
    a %= stride_[i];
    r += ((n - x) % n) * stride_[i];
  }
  return r;
}

FinAbGroup FinAbGroup::primary_form() const {
  std::vector<std::int64_t> pp;
  for (int n : orders_)
    for (auto [p, e] : factor_small(n)) pp.push_back(ipow(p, e));
  std::stable_sort(pp.begin(), pp.end(), primary_less);
  return FinAbGroup(std::vector<int>(pp.begin(), pp.end()));
}

FinAbGroup FinAbGroup::normalized() const {
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (int n : orders_)
    for (auto [p, e] : factor_small(n)) by_prime[p].push_back(ipow(p, e));
  std::size_t r = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    r = std::max(r, v.size());
  }
  std::vector<int> d(r, 1);
  for (auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) d[r - 1 - i] *= static_cast<int>(v[i]);
  return FinAbGroup(d);
}

std::string FinAbGroup::to_string() const {
  std::ostringstream os;
  if (orders_.empty()) return "1";
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << 'x';
    os << 'Z' << orders_[i];
  }
  return os.str();
}

std::int64_t element_order(const FinAbGroup& G, const GroupElement& g) {
  std::int64_t o = 1;
  for (int i = 0; i < G.rank(); ++i) {
    std::int64_t n = G.orders()[i];
    o = std::lcm(o, n / std::gcd(n, static_cast<std::int64_t>(g[i])));
  }
  return o;
}

GroupElement Presentation::embed(const FinAbGroup& ambient,
                                 const GroupElement& x) const {
  GroupElement r = ambient.identity();
  for (std::size_t i = 0; i < images.size(); ++i)
    r = ambient.add(r, ambient.scale(images[i], x[i]));
  return r;
}

namespace {

// Indices of <S, x> given the member mask of S.
std::vector<char> join_cyclic(const FinAbGroup& G, const std::vector<char>& mask,
                              std::size_t x) {
  std::vector<char> out = mask;
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) base.push_back(i);
  std::size_t mult = x;
  while (!mask[mult]) {
    for (std::size_t b : base) out[G.add_index(b, mult)] = 1;
    mult = G.add_index(mult, x);
  }
  return out;
}

std::int64_t order_modulo(const FinAbGroup& G, std::size_t x,
                          const std::vector<char>& mask) {
  std::int64_t k = 1;
  std::size_t m = x;
  while (!mask[m]) {
    m = G.add_index(m, x);
    ++k;
  }
  return k;
}

bool is_prime_power_of(std::int64_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Elements g_i of S with S/H = (+)_i <g_i + H>, each of prime-power order
// modulo H, in primary order.
struct Decomposition {
  std::vector<std::size_t> gens;
  std::vector<std::int64_t> orders;
};

Decomposition decompose(const FinAbGroup& G, const std::vector<char>& s_mask,
                        const std::vector<char>& h_mask) {
  std::int64_t s_size = std::count(s_mask.begin(), s_mask.end(), 1);
  std::int64_t h_size = std::count(h_mask.begin(), h_mask.end(), 1);
  auto ps = prime_divisors(s_size / h_size);
  std::sort(ps.begin(), ps.end(), [](std::int64_t a, std::int64_t b) {
    return (a == 2 ? 0 : a) < (b == 2 ? 0 : b);
  });
  Decomposition out;
  std::vector<char> cur = h_mask;
  for (std::int64_t p : ps) {
    std::vector<std::size_t> cands;
    for (std::size_t i = 0; i < s_mask.size(); ++i)
      if (s_mask[i] && is_prime_power_of(order_modulo(G, i, h_mask), p))
        cands.push_back(i);
    std::vector<std::pair<std::int64_t, std::size_t>> chosen;
    for (;;) {
      std::int64_t best = 1;
      for (std::size_t c : cands) best = std::max(best, order_modulo(G, c, cur));
      if (best == 1) break;
      std::size_t pick = s_mask.size();
      for (std::size_t c : cands) {
        if (order_modulo(G, c, cur) == best && order_modulo(G, c, h_mask) == best) {
          pick = c;
          break;
        }
      }
      if (pick == s_mask.size())
        throw std::logic_error("basis decomposition: no lift of maximal order");
      cur = join_cyclic(G, cur, pick);
      chosen.emplace_back(best, pick);
    }
    std::stable_sort(chosen.begin(), chosen.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto [o, g] : chosen) {
      out.gens.push_back(g);
      out.orders.push_back(o);
    }
  }
  return out;
}

}  // namespace

Subgroup Subgroup::generated_by(const FinAbGroup& ambient,
                                std::vector<GroupElement> gens) {
  Subgroup s;
  s.ambient_ = ambient;
  s.member_.assign(static_cast<std::size_t>(ambient.order()), 0);
  s.member_[0] = 1;
  for (const auto& g : gens) {
    if (!ambient.is_element(g))
      throw std::invalid_argument("generator is not an element of the group");
    s.member_ = join_cyclic(ambient, s.member_, ambient.index_of(g));
  }
  s.gens_ = std::move(gens);
  for (std::size_t i = 0; i < s.member_.size(); ++i)
    if (s.member_[i]) s.indices_.push_back(i);
  return s;
}

Subgroup Subgroup::trivial(const FinAbGroup& ambient) {
  return generated_by(ambient, {});
}

Subgroup Subgroup::whole(const FinAbGroup& ambient) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < ambient.rank(); ++i) gens.push_back(ambient.generator(i));
  return generated_by(ambient, gens);
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (std::size_t i : indices_) out.push_back(ambient_.element_at(i));
  return out;
}

bool Subgroup::contains(const GroupElement& g) const {
  return ambient_.is_element(g) && member_[ambient_.index_of(g)] != 0;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!(ambient_ == other.ambient_)) return false;
  return std::all_of(indices_.begin(), indices_.end(),
                     [&](std::size_t i) { return other.contains_index(i); });
}

Presentation Subgroup::presentation() const {
  std::vector<char> trivial(member_.size(), 0);
  trivial[0] = 1;
  Decomposition d = decompose(ambient_, member_, trivial);
  Presentation p;
  p.group = FinAbGroup(std::vector<int>(d.orders.begin(), d.orders.end()));
  for (std::size_t g : d.gens) p.images.push_back(ambient_.element_at(g));
  return p;
}

namespace {

// Subgroup with the given (closed) member set, generated greedily.
Subgroup filter(const FinAbGroup& ambient, const std::vector<std::size_t>& idx) {
  std::vector<char> mask(static_cast<std::size_t>(ambient.order()), 0);
  mask[0] = 1;
  std::vector<GroupElement> gens;
  for (std::size_t i : idx) {
    if (mask[i]) continue;
    mask = join_cyclic(ambient, mask, i);
    gens.push_back(ambient.element_at(i));
  }
  Subgroup s = Subgroup::generated_by(ambient, gens);
  if (static_cast<std::size_t>(s.order()) != idx.size())
    throw std::logic_error("filtered element set is not a subgroup");
  return s;
}

}  // namespace

Subgroup torsion_p_part(const FinAbGroup& G, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("torsion_p_part: p is not prime");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < static_cast<std::size_t>(G.order()); ++i)
    if (is_prime_power_of(element_order(G, G.element_at(i)), p)) idx.push_back(i);
  return filter(G, idx);
}

Subgroup two_torsion(const FinAbGroup& G) { return two_torsion(Subgroup::whole(G)); }
Subgroup squares(const FinAbGroup& G) { return squares(Subgroup::whole(G)); }

Subgroup two_torsion(const Subgroup& K) {
  const FinAbGroup& G = K.ambient();
  std::vector<std::size_t> idx;
  for (std::size_t i : K.indices())
    if (G.add_index(i, i) == 0) idx.push_back(i);
  return filter(G, idx);
}

Subgroup squares(const Subgroup& K) {
  const FinAbGroup& G = K.ambient();
  std::vector<std::size_t> idx;
  for (std::size_t i : K.indices()) idx.push_back(G.add_index(i, i));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return filter(G, idx);
}

std::vector<Subgroup> index2_subgroups(const FinAbGroup& T) {
  std::vector<int> even;
  for (int i = 0; i < T.rank(); ++i)
    if (T.orders()[i] % 2 == 0) even.push_back(i);
  std::vector<Subgroup> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << even.size()); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t x = 0; x < static_cast<std::size_t>(T.order()); ++x) {
      GroupElement g = T.element_at(x);
      int parity = 0;
      for (std::size_t b = 0; b < even.size(); ++b)
        if (mask >> b & 1) parity ^= g[even[b]] & 1;
      if (!parity) idx.push_back(x);
    }
    out.push_back(filter(T, idx));
  }
  return out;
}

bool is_direct_summand(const Subgroup& K, const GroupElement& t0) {
  const FinAbGroup& T = K.ambient();
  if (K.index_in_ambient() != 2)
    throw std::invalid_argument("is_direct_summand: K must have index 2");
  if (K.contains(t0))
    throw std::invalid_argument("is_direct_summand: t0 must lie outside K");
  Subgroup sq = squares(K);
  auto test = [&](std::size_t t) { return sq.contains_index(T.add_index(t, t)); };
  bool verdict = test(T.index_of(t0));
  for (std::size_t t = 0; t < static_cast<std::size_t>(T.order()); ++t)
    if (!K.contains_index(t) && test(t) != verdict)
      throw std::logic_error("is_direct_summand: criterion depends on t0");
  return verdict;
}

std::vector<std::vector<GroupElement>> coset_decomposition(const Subgroup& K) {
  const FinAbGroup& T = K.ambient();
  std::vector<char> seen(static_cast<std::size_t>(T.order()), 0);
  std::vector<std::vector<GroupElement>> out;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    if (seen[t]) continue;
    std::vector<std::size_t> coset;
    for (std::size_t k : K.indices()) coset.push_back(T.add_index(t, k));
    std::sort(coset.begin(), coset.end());
    std::vector<GroupElement> elems;
    for (std::size_t c : coset) {
      seen[c] = 1;
      elems.push_back(T.element_at(c));
    }
    out.push_back(std::move(elems));
  }
  return out;
}

GroupElement Quotient::project(const FinAbGroup& T, const GroupElement& t) const {
  return group.element_at(projection[T.index_of(t)]);
}

Quotient quotient_group(const Subgroup& K) {
  const FinAbGroup& T = K.ambient();
  std::vector<char> all(static_cast<std::size_t>(T.order()), 1);
  std::vector<char> kmask(all.size(), 0);
  for (std::size_t k : K.indices()) kmask[k] = 1;
  Decomposition d = decompose(T, all, kmask);
  Quotient q;
  q.group = FinAbGroup(std::vector<int>(d.orders.begin(), d.orders.end()));
  for (std::size_t g : d.gens) q.lifts.push_back(T.element_at(g));
  q.projection.assign(all.size(), 0);
  for (std::size_t c = 0; c < static_cast<std::size_t>(q.group.order()); ++c) {
    GroupElement coords = q.group.element_at(c);
    std::size_t base = 0;
    for (std::size_t i = 0; i < d.gens.size(); ++i)
      for (int r = 0; r < coords[i]; ++r) base = T.add_index(base, d.gens[i]);
    for (std::size_t k : K.indices()) q.projection[T.add_index(base, k)] = c;
  }
  return q;
}

std::vector<Subgroup> all_subgroups(const FinAbGroup& G) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> found{Subgroup::trivial(G)};
  seen.insert(found[0].indices());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t x = 0; x < static_cast<std::size_t>(G.order()); ++x) {
      if (found[i].contains_index(x)) continue;
      std::vector<GroupElement> gens = found[i].generators();
      gens.push_back(G.element_at(x));
      Subgroup s = Subgroup::generated_by(G, gens);
      if (seen.insert(s.indices()).second) found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.indices() < b.indices();
  });
  return found;
}

namespace {

// Partitions of e into non-increasing parts.
void partitions(int e, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(e, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(e - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FinAbGroup> groups_of_order(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("groups_of_order: n must be positive");
  std::vector<std::vector<int>> acc{{}};
  for (auto [p, e] : factor_small(n)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<int>> next;
    for (const auto& a : acc)
      for (const auto& part : parts) {
        auto v = a;
        for (auto it = part.rbegin(); it != part.rend(); ++it)
          v.push_back(static_cast<int>(ipow(p, *it)));
        next.push_back(std::move(v));
      }
    acc = std::move(next);
  }
  std::vector<FinAbGroup> out;
  for (auto& v : acc) out.push_back(FinAbGroup(v).primary_form());
  std::sort(out.begin(), out.end(),
            [](const FinAbGroup& a, const FinAbGroup& b) { return a.orders() < b.orders(); });
  return out;
}

}  // namespace gda
