/*
 * Copyright 2026 The RITR Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <span>
#include <vector>

namespace ritr {

using Index = Eigen::Index;
using NodeId = std::int64_t;

// Row-major so that row gathers/scatters over node ids touch contiguous
// memory.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// Rows of `m` at `rows`, in the given order.
Matrix gather_rows(const Matrix& m, std::span<const NodeId> rows);

// Writes src row i into dst row rows[i].
void scatter_rows(Matrix& dst, std::span<const NodeId> rows, const Matrix& src);

// Adds src row i into dst row rows[i].
void scatter_add_rows(Matrix& dst, std::span<const NodeId> rows, const Matrix& src);

bool all_finite(const Matrix& m);

// Keeps large freed blocks in the heap for reuse instead of returning them
// to the OS. Dense N x N temporaries are allocated every iteration and
// would otherwise be page-faulted in from scratch each time. No-op outside
// glibc. Call once at program start.
void tune_allocator();

}  // namespace ritr
