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

#include "gda/linalg.hpp"

namespace gda {

Vec zero_vec(const Field& F, std::size_t n) { return Vec(n, F.zero()); }

Mat zero_mat(const Field& F, std::size_t rows, std::size_t cols) {
  return Mat(rows, zero_vec(F, cols));
}

std::vector<std::size_t> rref(const Field& F, Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!F.is_zero(m[i][c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Scalar inv = F.inv(m[r][c]);
    for (auto& x : m[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || F.is_zero(m[i][c])) continue;
      Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!F.is_zero(m[r][k])) m[i][k] = F.sub(m[i][k], F.mul(f, m[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& F, Mat m) { return rref(F, m).size(); }

std::vector<Vec> nullspace(const Field& F, Mat m, std::size_t cols) {
  auto piv = rref(F, m);
  std::vector<char> is_piv(cols, 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v = zero_vec(F, cols);
    v[f] = F.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(m[i][f]);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  Mat aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(F, aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vec x = zero_vec(F, cols);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
  return x;
}

Scalar determinant(const Field& F, Mat m) {
  const std::size_t n = m.size();
  Scalar det = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!F.is_zero(m[i][c])) {
        piv = i;
        break;
      }
    if (piv == n) return F.zero();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = F.neg(det);
    }
    det = F.mul(det, m[c][c]);
    Scalar inv = F.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (F.is_zero(m[i][c])) continue;
      Scalar f = F.mul(m[i][c], inv);
      for (std::size_t k = c; k < n; ++k) m[i][k] = F.sub(m[i][k], F.mul(f, m[c][k]));
    }
  }
  return det;
}

std::vector<Scalar> leading_minors(const Field& F, const Mat& m) {
  std::vector<Scalar> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Mat sub(k, Vec(k, F.zero()));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    out.push_back(determinant(F, sub));
  }
  return out;
}

}  // namespace gda
