// Copyright 2026 The Authors.
//
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

#ifndef TRIMAT_GF2_HPP
#define TRIMAT_GF2_HPP

#include <cstdint>
#include <vector>

#include "trimat/element_set.hpp"

namespace trimat {

/// Dense GF(2) matrix stored column-major; bit i of cols[j] is entry (i, j).
/// At most 64 rows.
struct BitMatrix {
  int rows = 0;
  std::vector<std::uint64_t> cols;

  int num_cols() const { return static_cast<int>(cols.size()); }
  bool at(int r, int c) const { return (cols[static_cast<std::size_t>(c)] >> r) & 1U; }

  /// Throws ValidationError on ragged rows, non-bit entries or > 64 rows.
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);
  std::vector<std::vector<int>> to_rows() const;

  int rank_of(const ElementSet& columns) const;
  int rank() const { return rank_of(ElementSet::full(num_cols())); }

  bool operator==(const BitMatrix&) const = default;
};

/// Basis of the cycle space (kernel) as supports over the columns.
std::vector<ElementSet> cycle_space_basis(const BitMatrix& a);

/// Matrix whose rows span the orthogonal complement of the row space of a:
/// a representation of the dual matroid on the same columns.
BitMatrix dual_representation(const BitMatrix& a);

/// Keeps the listed columns, in order.
BitMatrix select_columns(const BitMatrix& a, const std::vector<int>& keep);

/// Representation of M/C\D. Columns of the result are the surviving
/// columns in increasing order.
BitMatrix minor_representation(const BitMatrix& a, const ElementSet& contract, const ElementSet& del);

/// Drops dependent rows so that rows == rank.
BitMatrix row_reduced(const BitMatrix& a);

}  // namespace trimat

#endif  // TRIMAT_GF2_HPP
