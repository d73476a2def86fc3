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
#include "trimat/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "trimat/error.hpp"
#include "trimat/gf2.hpp"
#include "trimat/io.hpp"
#include "trimat/structure.hpp"
#include "parallel.hpp"

namespace trimat {

namespace {

using detail::parallel_for;

Matroid graph_matroid(const Graph& g) {
  std::vector<LabeledEdge> es;
  for (auto [u, v] : g.edges) es.push_back({u, v, std::to_string(u) + "-" + std::to_string(v)});
  return graphic(g.vertices, es);
}

Graph wheel_graph(int spokes) {
  Graph g;
  g.vertices = spokes + 1;
  for (int i = 1; i <= spokes; ++i) {
    g.edges.emplace_back(0, i);
    g.edges.emplace_back(i, i % spokes + 1);
  }
  return g;
}

struct Child {
  Graph g;
  std::string key;
  std::string move;
};

// Edge additions, and vertex splits while below the vertex bound. A split
// replaces v by an edge vv' and hands v' at least two of v's neighbours.
std::vector<Child> graph_children(const Graph& g, int max_vertices) {
  std::vector<Child> out;
  const auto adj = g.adjacency();
  for (int u = 0; u < g.vertices; ++u)
    for (int v = u + 1; v < g.vertices; ++v) {
      if ((adj[u] >> v) & 1U) continue;
      Graph h = g;
      h.edges.emplace_back(u, v);
      out.push_back({h, graph_canonical_form(h), "add " + std::to_string(u) + "-" + std::to_string(v)});
    }
  if (g.vertices >= max_vertices) return out;
  for (int v = 0; v < g.vertices; ++v) {
    std::vector<int> nb;
    for (int w = 0; w < g.vertices; ++w)
      if ((adj[v] >> w) & 1U) nb.push_back(w);
    const int d = static_cast<int>(nb.size());
    if (d < 4) continue;
    // Masks over nb with the last neighbour fixed on v's side (each split once).
    for (std::uint32_t mask = 0; mask < (1U << (d - 1)); ++mask) {
      const int moved = std::popcount(mask);
      if (moved < 2 || d - moved < 2) continue;
      Graph h;
      h.vertices = g.vertices + 1;
      const int nv = g.vertices;
      for (auto [a, b] : g.edges) {
        const int other = a == v ? b : (b == v ? a : -1);
        if (other < 0) {
          h.edges.emplace_back(a, b);
          continue;
        }
        const auto pos = std::find(nb.begin(), nb.end(), other) - nb.begin();
        const bool to_new = (mask >> pos) & 1U;
        h.edges.emplace_back(to_new ? nv : v, other);
      }
      h.edges.emplace_back(v, nv);
      if (!is_3_vertex_connected(h)) continue;
      out.push_back({h, graph_canonical_form(h), "split " + std::to_string(v)});
    }
  }
  return out;
}

BitMatrix reduced_form(int r, const std::vector<std::uint64_t>& d) {
  BitMatrix a;
  a.rows = r;
  for (int i = 0; i < r; ++i) a.cols.push_back(std::uint64_t{1} << i);
  a.cols.insert(a.cols.end(), d.begin(), d.end());
  return a;
}

// No coloops, no series pairs (simplicity holds by construction).
bool cosimple(const BitMatrix& a) {
  const int n = a.num_cols();
  const int r = a.rank();
  const ElementSet all = ElementSet::full(n);
  for (int e = 0; e < n; ++e) {
    if (a.rank_of(all.without(e)) < r) return false;
    for (int f = e + 1; f < n; ++f)
      if (a.rank_of(all.without(e).without(f)) < r) return false;
  }
  return true;
}

// Images of every r-bit vector under each permutation of the r rows.
std::vector<std::vector<std::uint16_t>> row_permutation_tables(int r) {
  std::vector<int> p(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<std::uint16_t>> out;
  do {
    std::vector<std::uint16_t> t(std::size_t{1} << r);
    for (std::uint32_t v = 0; v < (1U << r); ++v) {
      std::uint32_t w = 0;
      for (int i = 0; i < r; ++i)
        if ((v >> i) & 1U) w |= 1U << p[static_cast<std::size_t>(i)];
      t[v] = static_cast<std::uint16_t>(w);
    }
    out.push_back(std::move(t));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Row permutations of [I | D] permute the identity block too, so only the
// lexicographically least column set in each orbit needs examining.
bool least_in_orbit(const std::vector<std::uint64_t>& d, const std::vector<std::vector<std::uint16_t>>& tables) {
  std::vector<std::uint64_t> img(d.size());
  for (const auto& t : tables) {
    for (std::size_t i = 0; i < d.size(); ++i) img[i] = t[d[i]];
    std::sort(img.begin(), img.end());
    if (img < d) return false;
  }
  return true;
}

template <typename F>
void for_each_combination(int pool, int k, F&& f) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  if (k > pool) return;
  while (true) {
    f(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == pool - k + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<std::string> element_labels(int n) {
  std::vector<std::string> l;
  for (int i = 1; i <= n; ++i) l.push_back("e" + std::to_string(i));
  return l;
}

std::string catalog_file(CatalogKind kind, int bound) {
  return to_string(kind) + "-v" + std::to_string(kCatalogVersion) + "-b" + std::to_string(bound) + ".jsonl";
}

}  // namespace

std::vector<CatalogEntry> gen_graphs_3c(int max_vertices, int workers) {
  if (max_vertices < 4 || max_vertices > 9) throw ValidationError("gen_graphs_3c: max_vertices must be in [4, 9]");
  struct Item {
    Graph g;
    std::string key, parent, move;
  };
  // Work proceeds by (vertices, edges) level; every move raises the level.
  std::map<std::pair<int, int>, std::vector<Item>> levels;
  std::set<std::string> seen;
  for (int s = 3; s + 1 <= max_vertices; ++s) {
    Graph w = wheel_graph(s);
    std::string k = graph_canonical_form(w);
    seen.insert(k);
    levels[{w.vertices, w.num_edges()}].push_back({w, k, "", "wheel W" + std::to_string(s)});
  }
  std::vector<Item> done;
  while (!levels.empty()) {
    auto node = levels.extract(levels.begin());
    auto& items = node.mapped();
    std::vector<std::vector<Child>> kids(items.size());
    parallel_for(items.size(), workers, [&](std::size_t i) { kids[i] = graph_children(items[i].g, max_vertices); });
    for (std::size_t i = 0; i < items.size(); ++i)
      for (auto& c : kids[i]) {
        if (!seen.insert(c.key).second) continue;
        levels[{c.g.vertices, c.g.num_edges()}].push_back({std::move(c.g), c.key, items[i].key, c.move});
      }
    for (auto& it : items) done.push_back(std::move(it));
  }
  std::sort(done.begin(), done.end(), [](const Item& a, const Item& b) {
    return std::tuple(a.g.vertices, a.g.num_edges(), a.key) < std::tuple(b.g.vertices, b.g.num_edges(), b.key);
  });
  std::vector<CatalogEntry> out;
  for (auto& it : done) out.push_back({it.key, graph_matroid(it.g), it.parent, it.move});
  return out;
}

std::vector<CatalogEntry> gen_binary_3c(int max_elements, int workers) {
  if (max_elements < 1 || max_elements > 12) throw ValidationError("gen_binary_3c: max_elements must be in [1, 12]");
  struct Found {
    std::string key;
    std::size_t index;
    int r;
    std::vector<std::uint64_t> d;
  };
  std::vector<CatalogEntry> out;
  for (int n = 4; n <= max_elements; ++n)
    for (int r = 2; r <= n - 2; ++r) {
      if (r > 12) break;
      std::vector<std::uint64_t> pool;
      for (std::uint64_t v = 1; v < (std::uint64_t{1} << r); ++v)
        if (std::popcount(v) >= 2) pool.push_back(v);
      std::vector<std::vector<std::uint64_t>> cands;
      const auto tables = r <= 8 ? row_permutation_tables(r) : std::vector<std::vector<std::uint16_t>>{};
      for_each_combination(static_cast<int>(pool.size()), n - r, [&](const std::vector<int>& c) {
        std::vector<std::uint64_t> d;
        std::uint64_t cover = 0;
        for (int i : c) {
          d.push_back(pool[static_cast<std::size_t>(i)]);
          cover |= pool[static_cast<std::size_t>(i)];
        }
        // A row of D that is zero leaves a coloop.
        if (cover == (std::uint64_t{1} << r) - 1 && least_in_orbit(d, tables)) cands.push_back(std::move(d));
      });
      std::vector<std::optional<std::string>> keys(cands.size());
      parallel_for(cands.size(), workers, [&](std::size_t i) {
        const BitMatrix a = reduced_form(r, cands[i]);
        if (!cosimple(a)) return;
        const Matroid m = linear_gf2(a, element_labels(n));
        if (!is_3connected(m)) return;
        keys[i] = canonical_key(m);
      });
      std::map<std::string, std::size_t> first;
      for (std::size_t i = 0; i < cands.size(); ++i)
        if (keys[i]) first.emplace(*keys[i], i);
      for (const auto& [key, i] : first)
        out.push_back({key, linear_gf2(reduced_form(r, cands[i]), element_labels(n)), "", "[I_" + std::to_string(r) + "|D]"});
    }
  return out;
}

Graph entry_graph(const CatalogEntry& e) {
  auto g = graph_representation(e.matroid);
  if (!g) throw DomainError("entry_graph: entry is not graphic");
  return *g;
}

std::vector<CatalogEntry> filter_with_minor(const std::vector<CatalogEntry>& entries, const Matroid& n,
                                            const MinorOptions& opt, std::vector<FilterNote>* notes) {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries) {
    const auto r = find_minor(e.matroid, n, opt);
    if (r.status == SearchStatus::Found) out.push_back(e);
    if (r.status == SearchStatus::Budget && notes) notes->push_back({e.key, r.note});
  }
  return out;
}

std::string to_string(CatalogKind k) { return k == CatalogKind::Graphs3c ? "graphs3c" : "binary3c"; }

std::string catalog_text(CatalogKind kind, int bound, const std::vector<CatalogEntry>& entries) {
  std::map<int, int> counts;
  for (const auto& e : entries) {
    const int size = kind == CatalogKind::Graphs3c ? entry_graph(e).vertices : e.matroid.size();
    ++counts[size];
  }
  Json header;
  header["catalog"] = to_string(kind);
  header["version"] = kCatalogVersion;
  header["bound"] = bound;
  Json c = Json::object();
  for (auto [k, v] : counts) c[std::to_string(k)] = v;
  header["counts"] = c;
  header["entries"] = entries.size();
  std::string out = header.dump() + "\n";
  for (const auto& e : entries) {
    Json j = descriptor(e.matroid);
    j["key"] = e.key;
    j["parent"] = e.parent;
    j["move"] = e.move;
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<CatalogEntry> parse_catalog(const std::string& text, CatalogKind kind, int bound) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("catalog: empty file");
  Json header;
  try {
    header = Json::parse(line);
  } catch (const Json::parse_error&) {
    throw ValidationError("catalog: malformed header");
  }
  if (header.value("catalog", "") != to_string(kind) || header.value("version", -1) != kCatalogVersion ||
      header.value("bound", -1) != bound)
    throw ValidationError("catalog: header does not match the requested catalog");
  std::vector<CatalogEntry> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error&) {
      throw ValidationError("catalog: malformed entry line " + std::to_string(out.size() + 2));
    }
    out.push_back({j.value("key", ""), build(j), j.value("parent", ""), j.value("move", "")});
  }
  if (header.value("entries", std::size_t{0}) != out.size()) throw ValidationError("catalog: entry count mismatch");
  return out;
}

std::vector<CatalogEntry> load_or_build(CatalogKind kind, int bound, const std::filesystem::path& dir,
                                        bool force_regen, int workers) {
  const auto path = dir / catalog_file(kind, bound);
  if (!force_regen && std::filesystem::exists(path)) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    try {
      return parse_catalog(ss.str(), kind, bound);
    } catch (const ValidationError&) {
      // Stale or damaged: fall through and regenerate.
    }
  }
  auto entries = kind == CatalogKind::Graphs3c ? gen_graphs_3c(bound, workers) : gen_binary_3c(bound, workers);
  std::filesystem::create_directories(dir);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << catalog_text(kind, bound, entries);
  }
  std::filesystem::rename(tmp, path);
  return entries;
}

std::string fingerprint(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace trimat
