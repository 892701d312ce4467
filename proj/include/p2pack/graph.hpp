#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "p2pack/errors.hpp"

namespace p2pack {

using Vertex = std::uint32_t;
using VertexSet = std::set<Vertex>;

/// Undirected edge, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds from an edge list. Duplicate edges (in either orientation) are
  /// merged; self-loops and out-of-range endpoints throw InputError.
  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const auto& [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    std::size_t total = 0;
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      total += list.size();
    }
    m_ = total / 2;
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// All edges, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= adj_.size())
      throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                       std::to_string(adj_.size()) + ")");
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Subgraph induced on a vertex subset, re-indexed densely in ascending order
/// of the original ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original_id;  // new id -> id in the parent graph
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> old_to_new(g.vertex_count(), UINT32_MAX);
  std::vector<Vertex> original(keep.begin(), keep.end());
  for (Vertex i = 0; i < original.size(); ++i) {
    g.check_vertex(original[i]);
    old_to_new[original[i]] = i;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (old_to_new[u] != UINT32_MAX && old_to_new[v] != UINT32_MAX)
      edges.emplace_back(old_to_new[u], old_to_new[v]);
  return {Graph(original.size(), edges), std::move(original)};
}

/// N(S): vertices outside S adjacent to some vertex of S.
inline VertexSet neighbors_of_set(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!s.contains(w)) out.insert(w);
  return out;
}

/// Connected components of G - removed, ordered by smallest member.
inline std::vector<VertexSet> components_outside(const Graph& g, const VertexSet& removed) {
  for (Vertex v : removed) g.check_vertex(v);
  const auto n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// A path on three vertices. e1 and e2 are the endpoints (kept with e1 < e2),
/// mid is the middle vertex.
struct P2Path {
  Vertex e1 = 0;
  Vertex mid = 0;
  Vertex e2 = 0;

  constexpr P2Path() = default;
  constexpr P2Path(Vertex a, Vertex m, Vertex b)
      : e1(a < b ? a : b), mid(m), e2(a < b ? b : a) {}

  constexpr std::array<Vertex, 3> vertices() const { return {e1, mid, e2}; }
  constexpr Vertex min_vertex() const { return e1 < mid ? e1 : mid; }
  constexpr bool contains(Vertex v) const { return v == e1 || v == mid || v == e2; }
  std::array<Edge, 2> edges() const { return {make_edge(e1, mid), make_edge(mid, e2)}; }

  friend constexpr auto operator<=>(const P2Path&, const P2Path&) = default;
};

inline bool is_p2_in(const Graph& g, const P2Path& p) {
  const auto n = g.vertex_count();
  if (p.e1 >= n || p.mid >= n || p.e2 >= n) return false;
  if (p.e1 == p.mid || p.mid == p.e2 || p.e1 == p.e2) return false;
  return g.has_edge(p.e1, p.mid) && g.has_edge(p.mid, p.e2);
}

/// A set of pairwise vertex-disjoint P2s, kept sorted by smallest vertex.
class Packing {
 public:
  Packing() = default;

  explicit Packing(std::span<const P2Path> paths) {
    for (const auto& p : paths) add(p);
  }
  Packing(std::initializer_list<P2Path> paths)
      : Packing(std::span<const P2Path>(paths.begin(), paths.size())) {}

  void add(const P2Path& p) {
    if (p.e1 == p.mid || p.mid == p.e2 || p.e1 == p.e2)
      throw InputError("P2 with repeated vertex");
    for (Vertex v : p.vertices())
      if (covered_.contains(v))
        throw InputError("vertex " + std::to_string(v) + " already covered");
    covered_.insert({p.e1, p.mid, p.e2});
    auto at = std::lower_bound(paths_.begin(), paths_.end(), p, by_min_vertex);
    paths_.insert(at, p);
  }

  void remove(const P2Path& p) {
    auto at = std::find(paths_.begin(), paths_.end(), p);
    if (at == paths_.end()) throw InputError("path not in packing");
    paths_.erase(at);
    for (Vertex v : p.vertices()) covered_.erase(v);
  }

  std::size_t size() const noexcept { return paths_.size(); }
  bool empty() const noexcept { return paths_.empty(); }
  const std::vector<P2Path>& paths() const noexcept { return paths_; }
  const VertexSet& covered() const noexcept { return covered_; }
  bool covers(Vertex v) const { return covered_.contains(v); }
  bool contains_path(const P2Path& p) const {
    return std::find(paths_.begin(), paths_.end(), p) != paths_.end();
  }

  VertexSet midpoints() const {
    VertexSet out;
    for (const auto& p : paths_) out.insert(p.mid);
    return out;
  }

  friend bool operator==(const Packing& a, const Packing& b) { return a.paths_ == b.paths_; }

 private:
  static bool by_min_vertex(const P2Path& a, const P2Path& b) {
    return a.min_vertex() < b.min_vertex();
  }

  std::vector<P2Path> paths_;
  VertexSet covered_;
};

/// Describes why p is not a packing of g, or nullopt when it is one.
inline std::optional<std::string> packing_violation(const Graph& g, const Packing& p) {
  VertexSet seen;
  for (const auto& path : p.paths()) {
    if (!is_p2_in(g, path))
      return "(" + std::to_string(path.e1) + "," + std::to_string(path.mid) + "," +
             std::to_string(path.e2) + ") is not a P2 of the graph";
    for (Vertex v : path.vertices())
      if (!seen.insert(v).second) return "vertex " + std::to_string(v) + " used twice";
  }
  if (seen != p.covered()) return "covered set out of sync with paths";
  return std::nullopt;
}

inline bool is_valid_packing(const Graph& g, const Packing& p) {
  return !packing_violation(g, p).has_value();
}

/// True when G - V(P) contains no P2, i.e. every leftover component has at
/// most two vertices.
inline bool is_maximal(const Graph& g, const Packing& p) {
  for (const auto& comp : components_outside(g, p.covered()))
    if (comp.size() >= 3) return false;
  return true;
}

}  // namespace p2pack
