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

#include "ritr/linalg.hpp"

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "ritr/error.hpp"

#include <string>

namespace ritr {

namespace {

void check_row(NodeId row, Index rows) {
  if (row < 0 || row >= rows) {
    throw RangeError("row index " + std::to_string(row) + " out of range [0, " +
                     std::to_string(rows) + ")");
  }
}

}  // namespace

Matrix gather_rows(const Matrix& m, std::span<const NodeId> rows) {
  Matrix out(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_row(rows[i], m.rows());
    out.row(static_cast<Index>(i)) = m.row(rows[i]);
  }
  return out;
}

void scatter_rows(Matrix& dst, std::span<const NodeId> rows, const Matrix& src) {
  if (src.rows() != static_cast<Index>(rows.size()) || src.cols() != dst.cols()) {
    throw ShapeError("scatter_rows: source shape does not match index list");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_row(rows[i], dst.rows());
    dst.row(rows[i]) = src.row(static_cast<Index>(i));
  }
}

void scatter_add_rows(Matrix& dst, std::span<const NodeId> rows, const Matrix& src) {
  if (src.rows() != static_cast<Index>(rows.size()) || src.cols() != dst.cols()) {
    throw ShapeError("scatter_add_rows: source shape does not match index list");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_row(rows[i], dst.rows());
    dst.row(rows[i]) += src.row(static_cast<Index>(i));
  }
}

bool all_finite(const Matrix& m) {
  // x * 0 is NaN exactly when x is NaN or infinite; the sum propagates it.
  const double* p = m.data();
  const Index n = m.size();
  double acc = 0.0;
  for (Index i = 0; i < n; ++i) acc += p[i] * 0.0;
  return acc == 0.0;
}

void tune_allocator() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_MAX, 0);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
}

}  // namespace ritr
