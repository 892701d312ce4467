#pragma once

// Rebuilding a whole packing from only its midpoints or only its endpoint
// pairs. Both reduce to a bipartite matching.

#include <optional>
#include <span>
#include <vector>

#include "p2pack/bipartite.hpp"
#include "p2pack/errors.hpp"
#include "p2pack/graph.hpp"

namespace p2pack {

/// A packing whose midpoint set is exactly `mids`, if one exists. Each
/// midpoint gets two slots that must be matched to distinct non-midpoint
/// neighbours.
inline std::optional<Packing> packing_from_midpoints(const Graph& g, const VertexSet& mids) {
  for (Vertex v : mids) g.check_vertex(v);
  const std::vector<Vertex> centers(mids.begin(), mids.end());
  BipartiteGraph b(2 * centers.size(), g.vertex_count());
  for (std::uint32_t i = 0; i < centers.size(); ++i) {
    for (Vertex w : g.neighbors(centers[i])) {
      if (mids.contains(w)) continue;
      b.add_edge(2 * i, w);
      b.add_edge(2 * i + 1, w);
    }
  }
  const Matching m = max_matching(b);
  if (m.size() != b.left_count()) return std::nullopt;
  Packing out;
  for (std::uint32_t i = 0; i < centers.size(); ++i)
    out.add(P2Path(m.left_mate[2 * i], centers[i], m.left_mate[2 * i + 1]));
  return out;
}

/// A packing in which pair i supplies the two endpoints of path i, if one
/// exists. Midpoints are drawn from the common neighbours of each pair,
/// excluding every endpoint of every pair.
inline std::optional<Packing> packing_from_endpoint_pairs(const Graph& g,
                                                          std::span<const Edge> pairs) {
  VertexSet endpoints;
  for (const auto& [a, b] : pairs) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (!endpoints.insert(a).second || !endpoints.insert(b).second)
      throw InputError("endpoint pairs reuse vertex");
  }
  BipartiteGraph bg(pairs.size(), g.vertex_count());
  for (std::uint32_t i = 0; i < pairs.size(); ++i) {
    const auto na = g.neighbors(pairs[i].first);
    for (Vertex v : na)
      if (!endpoints.contains(v) && g.has_edge(pairs[i].second, v)) bg.add_edge(i, v);
  }
  const Matching m = max_matching(bg);
  if (m.size() != pairs.size()) return std::nullopt;
  Packing out;
  for (std::uint32_t i = 0; i < pairs.size(); ++i)
    out.add(P2Path(pairs[i].first, m.left_mate[i], pairs[i].second));
  return out;
}

}  // namespace p2pack
