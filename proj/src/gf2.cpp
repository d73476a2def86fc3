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

#include "trimat/gf2.hpp"

#include <bit>
#include <string>

#include "trimat/error.hpp"

namespace trimat {

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  BitMatrix m;
  if (rows.size() > 64) throw ValidationError("linear_gf2: at most 64 rows supported");
  m.rows = static_cast<int>(rows.size());
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  m.cols.assign(width, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width)
      throw ValidationError("linear_gf2: row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(width));
    for (std::size_t j = 0; j < width; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1)
        throw ValidationError("linear_gf2: entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not a bit");
      if (v) m.cols[j] |= std::uint64_t{1} << i;
    }
  }
  return m;
}

std::vector<std::vector<int>> BitMatrix::to_rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rows), std::vector<int>(cols.size(), 0));
  for (int i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = static_cast<int>((cols[j] >> i) & 1U);
  return out;
}

int BitMatrix::rank_of(const ElementSet& columns) const {
  std::uint64_t basis[64] = {};
  int r = 0;
  for (int c : columns) {
    std::uint64_t v = cols[static_cast<std::size_t>(c)];
    while (v) {
      const int b = 63 - std::countl_zero(v);
      if (!basis[b]) {
        basis[b] = v;
        ++r;
        break;
      }
      v ^= basis[b];
    }
  }
  return r;
}

std::vector<ElementSet> cycle_space_basis(const BitMatrix& a) {
  // Column elimination tracking which original columns were combined.
  std::uint64_t basis[64] = {};
  ElementSet combo[64];
  std::vector<ElementSet> cycles;
  for (int c = 0; c < a.num_cols(); ++c) {
    std::uint64_t v = a.cols[static_cast<std::size_t>(c)];
    ElementSet used = ElementSet::single(c);
    while (v) {
      const int b = 63 - std::countl_zero(v);
      if (!basis[b]) break;
      v ^= basis[b];
      used ^= combo[b];
    }
    if (v) {
      const int b = 63 - std::countl_zero(v);
      basis[b] = v;
      combo[b] = used;
    } else {
      cycles.push_back(used);
    }
  }
  return cycles;
}

BitMatrix dual_representation(const BitMatrix& a) {
  const std::vector<ElementSet> cycles = cycle_space_basis(a);
  if (cycles.size() > 64) throw ValidationError("dual representation needs more than 64 rows");
  BitMatrix d;
  d.rows = static_cast<int>(cycles.size());
  d.cols.assign(a.cols.size(), 0);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (int c : cycles[i]) d.cols[static_cast<std::size_t>(c)] |= std::uint64_t{1} << i;
  return d;
}

BitMatrix select_columns(const BitMatrix& a, const std::vector<int>& keep) {
  BitMatrix out;
  out.rows = a.rows;
  out.cols.reserve(keep.size());
  for (int c : keep) out.cols.push_back(a.cols[static_cast<std::size_t>(c)]);
  return out;
}

namespace {

std::uint64_t drop_bit(std::uint64_t v, int i) {
  const std::uint64_t low = v & ((std::uint64_t{1} << i) - 1);
  const std::uint64_t high = i == 63 ? 0 : (v >> (i + 1)) << i;
  return low | high;
}

}  // namespace

BitMatrix minor_representation(const BitMatrix& a, const ElementSet& contract, const ElementSet& del) {
  BitMatrix m = a;
  for (int c : contract) {
    const std::uint64_t v = m.cols[static_cast<std::size_t>(c)];
    if (!v) continue;  // loop: contraction is deletion
    const int pivot = std::countr_zero(v);
    const std::uint64_t rest = v & ~(std::uint64_t{1} << pivot);
    for (auto& col : m.cols) {
      if ((col >> pivot) & 1U) col ^= rest;
      col = drop_bit(col, pivot);
    }
    --m.rows;
  }
  std::vector<int> keep;
  for (int c = 0; c < a.num_cols(); ++c)
    if (!contract.test(c) && !del.test(c)) keep.push_back(c);
  return select_columns(m, keep);
}

BitMatrix row_reduced(const BitMatrix& a) {
  // Transpose to rows, eliminate, transpose back.
  std::vector<ElementSet> rows(static_cast<std::size_t>(a.rows));
  for (int c = 0; c < a.num_cols(); ++c)
    for (int i = 0; i < a.rows; ++i)
      if (a.at(i, c)) rows[static_cast<std::size_t>(i)].set(c);
  std::vector<ElementSet> basis;
  for (ElementSet r : rows) {
    for (const ElementSet& b : basis)
      if (r.test(b.first())) r ^= b;
    if (r.empty()) continue;
    for (ElementSet& b : basis)
      if (b.test(r.first())) b ^= r;
    basis.push_back(r);
  }
  BitMatrix out;
  out.rows = static_cast<int>(basis.size());
  out.cols.assign(a.cols.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int c : basis[i]) out.cols[static_cast<std::size_t>(c)] |= std::uint64_t{1} << i;
  return out;
}

}  // namespace trimat
