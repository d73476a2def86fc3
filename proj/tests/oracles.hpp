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

// Brute-force reference implementations used as test oracles. They share no
// code with the library: rank functions are plain callables on bitmasks.

#ifndef TRIMAT_TESTS_ORACLES_HPP
#define TRIMAT_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "trimat/matroid.hpp"

namespace oracle {

using Mask = std::uint32_t;
using RankFn = std::function<int(Mask)>;

inline int popcount(Mask m) { return std::popcount(m); }

/// GF(2) rank of the chosen columns of a row-major 0/1 matrix.
inline int gf2_rank(const std::vector<std::vector<int>>& rows, Mask cols) {
  std::vector<std::vector<int>> m;
  for (const auto& r : rows) {
    std::vector<int> row;
    for (int j = 0; j < static_cast<int>(r.size()); ++j)
      if (cols >> j & 1U) row.push_back(r[j] & 1);
    m.push_back(row);
  }
  if (m.empty() || m[0].empty()) return 0;
  const int R = static_cast<int>(m.size());
  const int C = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < C && rank < R; ++c) {
    int p = rank;
    while (p < R && !m[p][c]) ++p;
    if (p == R) continue;
    std::swap(m[p], m[rank]);
    for (int i = 0; i < R; ++i)
      if (i != rank && m[i][c])
        for (int j = 0; j < C; ++j) m[i][j] ^= m[rank][j];
    ++rank;
  }
  return rank;
}

/// |V| minus the number of components of the spanning subgraph on `edges`.
inline int graph_rank(int vertices, const std::vector<std::pair<int, int>>& edges, Mask sel) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (sel >> i & 1U) {
      adj[edges[i].first].push_back(edges[i].second);
      adj[edges[i].second].push_back(edges[i].first);
    }
  std::vector<int> seen(static_cast<std::size_t>(vertices), 0);
  int comps = 0;
  for (int s = 0; s < vertices; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          st.push_back(w);
        }
    }
  }
  return vertices - comps;
}

inline RankFn of(const trimat::Matroid& m) {
  return [m](Mask a) {
    trimat::ElementSet s(a, 0);
    return m.rank_unchecked(s);
  };
}

inline std::vector<Mask> circuits(const RankFn& r, int n) {
  std::vector<Mask> out;
  for (Mask a = 1; a < (Mask{1} << n); ++a) {
    const int k = popcount(a);
    if (r(a) != k - 1) continue;
    bool minimal = true;
    for (int e = 0; e < n && minimal; ++e)
      if (a >> e & 1U) minimal = r(a & ~(Mask{1} << e)) == k - 1;
    if (minimal) out.push_back(a);
  }
  return out;
}

inline bool rank_axioms(const RankFn& r, int n) {
  const Mask full = (Mask{1} << n) - 1;
  std::vector<int> rk(std::size_t{1} << n);
  for (Mask a = 0; a <= full; ++a) rk[a] = r(a);
  if (rk[0] != 0) return false;
  for (Mask a = 0; a <= full; ++a)
    for (int e = 0; e < n; ++e) {
      if (a >> e & 1U) continue;
      const int d = rk[a | (Mask{1} << e)] - rk[a];
      if (d < 0 || d > 1) return false;
    }
  for (Mask a = 0; a <= full; ++a)
    for (Mask b = a; b <= full; ++b)
      if (rk[a] + rk[b] < rk[a | b] + rk[a & b]) return false;
  return true;
}

inline int lambda(const RankFn& r, int n, Mask a) {
  const Mask full = (Mask{1} << n) - 1;
  return r(a) + r(full & ~a) - r(full);
}

/// Tutte 3-connectivity: no k-separation for k < 3.
inline bool three_connected(const RankFn& r, int n) {
  const Mask full = (Mask{1} << n) - 1;
  for (Mask a = 1; a < full; ++a) {
    const int sa = popcount(a);
    const int sb = n - sa;
    const int l = lambda(r, n, a);
    if (l < 1 && sa >= 1 && sb >= 1) return false;
    if (l < 2 && sa >= 2 && sb >= 2) return false;
  }
  return true;
}

inline RankFn dual(const RankFn& r, int n) {
  const Mask full = (Mask{1} << n) - 1;
  const int rf = r(full);
  return [r, full, rf](Mask a) { return popcount(a) + r(full & ~a) - rf; };
}

/// Rank function of M/C\D re-indexed on the surviving elements (in order).
inline RankFn minor(const RankFn& r, int n, Mask c, Mask d) {
  std::vector<int> keep;
  for (int e = 0; e < n; ++e)
    if (!((c | d) >> e & 1U)) keep.push_back(e);
  const int rc = r(c);
  return [r, keep, c, rc](Mask a) {
    Mask lifted = c;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
      if (a >> i & 1U) lifted |= Mask{1} << keep[i];
    return r(lifted) - rc;
  };
}

/// Isomorphism by trying every bijection (n <= 9).
inline bool isomorphic(const RankFn& r1, int n1, const RankFn& r2, int n2) {
  if (n1 != n2) return false;
  const int n = n1;
  const Mask full = (Mask{1} << n) - 1;
  std::vector<int> t1(std::size_t{1} << n), t2(std::size_t{1} << n);
  for (Mask a = 0; a <= full; ++a) {
    t1[a] = r1(a);
    t2[a] = r2(a);
  }
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Mask a = 0; a <= full && ok; ++a) {
      Mask b = 0;
      for (int e = 0; e < n; ++e)
        if (a >> e & 1U) b |= Mask{1} << p[e];
      ok = t1[a] == t2[b];
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Does M (n elements) have a minor isomorphic to N (k elements)? Tries
/// every (C, D) split; small inputs only.
inline bool has_minor(const RankFn& m, int n, const RankFn& nn, int k) {
  const Mask full = (Mask{1} << n) - 1;
  for (Mask rem = 0; rem <= full; ++rem) {
    if (n - popcount(rem) != k) continue;
    for (Mask c = rem;; c = (c - 1) & rem) {
      if (isomorphic(minor(m, n, c, rem & ~c), k, nn, k)) return true;
      if (c == 0) break;
    }
  }
  return false;
}

}  // namespace oracle

#endif  // TRIMAT_TESTS_ORACLES_HPP
