#pragma once

// Maximal packings, the Q0/Q1 leftover structure, and the two local
// exchange rules that drive it to a fixpoint.

#include <cstddef>
#include <optional>
#include <vector>

#include "p2pack/errors.hpp"
#include "p2pack/graph.hpp"

namespace p2pack {

/// Components of G - V(P) for a maximal P: singletons (Q0) and single edges (Q1).
struct LeftoverClassification {
  VertexSet q0;
  std::vector<Edge> q1;  // sorted

  friend bool operator==(const LeftoverClassification&, const LeftoverClassification&) = default;
};

struct PackingState {
  Packing packing;
  LeftoverClassification leftover;
};

/// Extends `base` greedily: every uncovered vertex, in ascending order, that
/// still has two uncovered neighbours becomes the midpoint of a new P2 with
/// its two smallest such neighbours. One pass suffices for maximality.
inline Packing greedy_maximal(const Graph& g, Packing base) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (base.covers(v)) continue;
    Vertex first = 0;
    int found = 0;
    for (Vertex w : g.neighbors(v)) {
      if (base.covers(w)) continue;
      if (found == 0) {
        first = w;
        found = 1;
      } else {
        base.add(P2Path(first, v, w));
        found = 2;
        break;
      }
    }
  }
  return base;
}

inline LeftoverClassification classify_leftover(const Graph& g, const Packing& p) {
  LeftoverClassification lc;
  for (const auto& comp : components_outside(g, p.covered())) {
    if (comp.size() == 1) {
      lc.q0.insert(*comp.begin());
    } else if (comp.size() == 2) {
      lc.q1.push_back(make_edge(*comp.begin(), *comp.rbegin()));
    } else {
      throw ContractViolation("packing is not maximal: leftover component of size " +
                              std::to_string(comp.size()) + " at vertex " +
                              std::to_string(*comp.begin()));
    }
  }
  return lc;
}

namespace detail {

inline std::vector<Vertex> q0_neighbors(const Graph& g, const VertexSet& q0, Vertex x) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(x))
    if (q0.contains(w)) out.push_back(w);
  return out;
}

// For every vertex, the index into lc.q1 of the Q1-edge containing it, or -1.
inline std::vector<int> q1_owner(const Graph& g, const LeftoverClassification& lc) {
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < lc.q1.size(); ++i) {
    owner[lc.q1[i].first] = static_cast<int>(i);
    owner[lc.q1[i].second] = static_cast<int>(i);
  }
  return owner;
}

inline Vertex third_vertex(const P2Path& l, Vertex a, Vertex b) {
  for (Vertex v : l.vertices())
    if (v != a && v != b) return v;
  throw InternalError("third_vertex: arguments not on path");
}

}  // namespace detail

/// One Rule 1 exchange without re-maximalisation. Looks for a path L with
/// distinct Q0-vertices w ~ pb and u ~ pa (pa != pb) and replaces L by
/// (w, pb, pc). pb must stay path-adjacent to the third vertex pc, which
/// forces pa to be an endpoint of L. Candidates are tried lexicographically
/// by (pb, w, pa, u).
inline std::optional<Packing> rule1_transform(const Graph& g, const Packing& p,
                                              const LeftoverClassification& lc) {
  for (const auto& l : p.paths()) {
    auto verts = l.vertices();
    std::sort(verts.begin(), verts.end());
    for (Vertex pb : verts) {
      const auto ws = detail::q0_neighbors(g, lc.q0, pb);
      for (Vertex w : ws) {
        for (Vertex pa : verts) {
          if (pa == pb || pa == l.mid) continue;
          for (Vertex u : detail::q0_neighbors(g, lc.q0, pa)) {
            if (u == w) continue;
            const Vertex pc = detail::third_vertex(l, pa, pb);
            Packing next = p;
            next.remove(l);
            next.add(P2Path(w, pb, pc));
            return next;
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// One Rule 2 exchange without re-maximalisation. Looks for a path L and two
/// different Q1-edges {u1,u2}, {w1,w2} with u1 ~ pa, w1 ~ pb, pa != pb, and
/// replaces L by (u2, u1, pa) and (w2, w1, pb).
inline std::optional<Packing> rule2_transform(const Graph& g, const Packing& p,
                                              const LeftoverClassification& lc) {
  const auto owner = detail::q1_owner(g, lc);
  struct Attach {
    int edge;
    Vertex near;  // endpoint adjacent to the path vertex
  };
  auto attachments = [&](Vertex x) {
    std::vector<Attach> out;
    for (Vertex y : g.neighbors(x))
      if (owner[y] >= 0) out.push_back({owner[y], y});
    std::sort(out.begin(), out.end(), [](const Attach& a, const Attach& b) {
      return a.edge != b.edge ? a.edge < b.edge : a.near < b.near;
    });
    return out;
  };
  auto other_end = [&](const Attach& a) {
    const auto& e = lc.q1[static_cast<std::size_t>(a.edge)];
    return e.first == a.near ? e.second : e.first;
  };
  for (const auto& l : p.paths()) {
    auto verts = l.vertices();
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < 3; ++i) {
      const auto at_a = attachments(verts[i]);
      if (at_a.empty()) continue;
      for (std::size_t j = i + 1; j < 3; ++j) {
        const auto at_b = attachments(verts[j]);
        for (const auto& a : at_a) {
          for (const auto& b : at_b) {
            if (a.edge == b.edge) continue;
            Packing next = p;
            next.remove(l);
            next.add(P2Path(other_end(a), a.near, verts[i]));
            next.add(P2Path(other_end(b), b.near, verts[j]));
            return next;
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// Rule 1 followed by re-maximalisation and re-classification.
inline std::optional<PackingState> apply_rule1(const Graph& g, const Packing& p,
                                               const LeftoverClassification& lc) {
  auto moved = rule1_transform(g, p, lc);
  if (!moved) return std::nullopt;
  Packing next = greedy_maximal(g, std::move(*moved));
  auto leftover = classify_leftover(g, next);
  return PackingState{std::move(next), std::move(leftover)};
}

/// Rule 2 followed by re-maximalisation and re-classification.
inline std::optional<PackingState> apply_rule2(const Graph& g, const Packing& p,
                                               const LeftoverClassification& lc) {
  auto moved = rule2_transform(g, p, lc);
  if (!moved) return std::nullopt;
  Packing next = greedy_maximal(g, std::move(*moved));
  auto leftover = classify_leftover(g, next);
  return PackingState{std::move(next), std::move(leftover)};
}

struct ReduceOutcome {
  Packing packing;
  LeftoverClassification leftover;
  std::size_t rule1_applications = 0;
  std::size_t rule2_applications = 0;
};

/// Applies Rule 1 (preferred) and Rule 2 until neither fires.
inline ReduceOutcome reduce_exhaustive(const Graph& g, Packing p) {
  ReduceOutcome out{p, classify_leftover(g, p)};
  const std::size_t n = g.vertex_count();
  const std::size_t limit = 2 * n * (n / 3 + 1) + 2;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > limit) throw InternalError("reduce_exhaustive did not reach a fixpoint");
    if (auto next = apply_rule1(g, out.packing, out.leftover)) {
      out.packing = std::move(next->packing);
      out.leftover = std::move(next->leftover);
      ++out.rule1_applications;
      continue;
    }
    if (auto next = apply_rule2(g, out.packing, out.leftover)) {
      out.packing = std::move(next->packing);
      out.leftover = std::move(next->leftover);
      ++out.rule2_applications;
      continue;
    }
    return out;
  }
}

/// Attachment invariants for every path of a maximal packing: Q0-vertices (resp.
/// Q1-edges) touching a path either all hang off one path vertex, or the
/// path touches only a single one of them.
inline bool check_properties(const Graph& g, const Packing& p, const LeftoverClassification& lc) {
  const auto owner = detail::q1_owner(g, lc);
  for (const auto& l : p.paths()) {
    VertexSet q0_touching, q0_attach, q1_attach;
    std::set<int> q1_touching;
    for (Vertex x : l.vertices()) {
      for (Vertex y : g.neighbors(x)) {
        if (lc.q0.contains(y)) {
          q0_touching.insert(y);
          q0_attach.insert(x);
        }
        if (owner[y] >= 0) {
          q1_touching.insert(owner[y]);
          q1_attach.insert(x);
        }
      }
    }
    if (q0_touching.size() > 1 && q0_attach.size() != 1) return false;  // many Q0, one attachment
    if (q0_attach.size() > 1 && q0_touching.size() != 1) return false;  // many attachments, one Q0
    if (q1_touching.size() > 1 && q1_attach.size() != 1) return false;  // many Q1, one attachment
    if (q1_attach.size() > 1 && q1_touching.size() != 1) return false;  // many attachments, one Q1
  }
  return true;
}

}  // namespace p2pack
