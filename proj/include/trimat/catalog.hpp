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
// Exhaustive catalogs of small 3-connected graphs and binary matroids,
// deduplicated by isomorphism class and optionally persisted to disk.

#ifndef TRIMAT_CATALOG_HPP
#define TRIMAT_CATALOG_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "trimat/graph.hpp"
#include "trimat/matroid.hpp"
#include "trimat/minors.hpp"

namespace trimat {

struct CatalogEntry {
  /// Isomorphism-class certificate (graph form for graph catalogs).
  std::string key;
  Matroid matroid;
  /// Key of the entry this one was grown from (empty for seeds) and the move.
  std::string parent;
  std::string move;
};

/// Simple 3-connected graphs on 4..max_vertices vertices (max <= 9), grown
/// from wheels by edge additions and vertex splits. Ordered by vertex
/// count, edge count, then key.
std::vector<CatalogEntry> gen_graphs_3c(int max_vertices, int workers = 1);

/// Simple cosimple 3-connected binary matroids with at most max_elements
/// elements (<= 12), from the reduced forms [I_r | D]. Ordered by size,
/// rank, then key.
std::vector<CatalogEntry> gen_binary_3c(int max_elements, int workers = 1);

/// The underlying simple graph of a cycle matroid entry.
Graph entry_graph(const CatalogEntry& e);

struct FilterNote {
  std::string key;
  std::string note;
};

/// Entries with an n-minor. Budget-limited searches are dropped and noted.
std::vector<CatalogEntry> filter_with_minor(const std::vector<CatalogEntry>& entries, const Matroid& n,
                                            const MinorOptions& opt = {}, std::vector<FilterNote>* notes = nullptr);

enum class CatalogKind { Graphs3c, Binary3c };
std::string to_string(CatalogKind k);

/// Bumped whenever generation changes; part of the file name and header.
inline constexpr int kCatalogVersion = 1;

/// Loads the catalog for (kind, bound) from dir, generating and saving it
/// when the file is missing, stale or force_regen is set.
std::vector<CatalogEntry> load_or_build(CatalogKind kind, int bound, const std::filesystem::path& dir,
                                        bool force_regen = false, int workers = 1);

/// File image: a JSON header line, then one matroid descriptor per line.
std::string catalog_text(CatalogKind kind, int bound, const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> parse_catalog(const std::string& text, CatalogKind kind, int bound);

/// SHA-free content fingerprint (FNV-1a, hex) used in report headers.
std::string fingerprint(const std::string& text);

}  // namespace trimat

#endif  // TRIMAT_CATALOG_HPP
