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

// Dense exact Gaussian elimination over a Field.

#ifndef GDA_LINALG_HPP_
#define GDA_LINALG_HPP_

#include <optional>
#include <vector>

#include "gda/field.hpp"

namespace gda {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

Vec zero_vec(const Field& F, std::size_t n);
Mat zero_mat(const Field& F, std::size_t rows, std::size_t cols);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& F, Mat& m);
std::size_t rank(const Field& F, Mat m);
// Basis of { x : m x = 0 }; `cols` is needed when m has no rows.
std::vector<Vec> nullspace(const Field& F, Mat m, std::size_t cols);
// Some x with m x = b, if any.
std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b);
// Leading principal minors, top-left k x k for k = 1..n.
std::vector<Scalar> leading_minors(const Field& F, const Mat& m);
Scalar determinant(const Field& F, Mat m);

}  // namespace gda

#endif  // GDA_LINALG_HPP_
