#pragma once

// Exact reference algorithms for small graphs and machine checks of the
// exchange arguments behind the vertex-reuse bound. Everything here refuses
// inputs above its size cap instead of approximating.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "p2pack/errors.hpp"
#include "p2pack/graph.hpp"

namespace p2pack {

inline constexpr std::size_t kDefaultOracleCap = 20;
inline constexpr std::size_t kEnumerationCap = 14;
// Hard ceiling for the subset DP table (2^28 bytes).
inline constexpr std::size_t kDpHardCeiling = 28;

struct OracleResult {
  std::size_t size = 0;
  Packing witness;
};

namespace detail {

struct MaskedPath {
  std::uint64_t mask;
  P2Path path;
};

// Every P2 of g in ascending P2Path order.
inline std::vector<MaskedPath> all_p2s(const Graph& g) {
  std::vector<MaskedPath> out;
  for (Vertex mid = 0; mid < g.vertex_count(); ++mid) {
    const auto nb = g.neighbors(mid);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const P2Path p(nb[a], mid, nb[b]);
        out.push_back({(1ULL << p.e1) | (1ULL << p.mid) | (1ULL << p.e2), p});
      }
  }
  std::sort(out.begin(), out.end(),
            [](const MaskedPath& x, const MaskedPath& y) { return x.path < y.path; });
  return out;
}

inline std::uint64_t mask_of(const P2Path& p) {
  return (1ULL << p.e1) | (1ULL << p.mid) | (1ULL << p.e2);
}

}  // namespace detail

/// Maximum P2-packing by dynamic programming over vertex subsets: the lowest
/// vertex of S is either skipped or covered by a P2 inside S.
inline OracleResult max_packing_dp(const Graph& g, std::size_t cap = kDefaultOracleCap) {
  const std::size_t n = g.vertex_count();
  if (n > cap || n > kDpHardCeiling)
    throw RefusalError("max_packing_dp: " + std::to_string(n) + " vertices exceeds cap " +
                       std::to_string(std::min(cap, kDpHardCeiling)));
  // Paths whose lowest vertex is v.
  std::vector<std::vector<detail::MaskedPath>> by_low(n);
  for (const auto& mp : detail::all_p2s(g))
    by_low[static_cast<std::size_t>(std::countr_zero(mp.mask))].push_back(mp);

  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((1ULL << n) - 1);
  std::vector<std::uint8_t> best(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    const auto v = static_cast<std::size_t>(std::countr_zero(s));
    std::uint8_t b = best[s & (s - 1)];
    for (const auto& mp : by_low[v]) {
      const auto t = static_cast<std::uint32_t>(mp.mask);
      if ((t & s) == t) b = std::max<std::uint8_t>(b, static_cast<std::uint8_t>(1 + best[s ^ t]));
    }
    best[s] = b;
    if (s == full) break;
  }

  OracleResult out;
  out.size = best[full];
  std::uint32_t s = full;
  while (s != 0) {
    const auto v = static_cast<std::size_t>(std::countr_zero(s));
    if (best[s] == best[s & (s - 1)]) {
      s &= s - 1;
      continue;
    }
    bool moved = false;
    for (const auto& mp : by_low[v]) {
      const auto t = static_cast<std::uint32_t>(mp.mask);
      if ((t & s) == t && best[s] == 1 + best[s ^ t]) {
        out.witness.add(mp.path);
        s ^= t;
        moved = true;
        break;
      }
    }
    if (!moved) throw InternalError("max_packing_dp: witness reconstruction failed");
  }
  return out;
}

/// Visits every packing of exactly `size` P2s. Paths inside each packing are
/// chosen in ascending P2Path order, so each packing is visited once and the
/// visiting order is fixed. fn returns true to stop early.
inline void for_each_packing(const Graph& g, std::size_t size,
                             const std::function<bool(const std::vector<P2Path>&)>& fn,
                             std::size_t cap = kEnumerationCap) {
  if (g.vertex_count() > cap)
    throw RefusalError("enumerate_packings: " + std::to_string(g.vertex_count()) +
                       " vertices exceeds cap " + std::to_string(cap));
  const auto all = detail::all_p2s(g);
  std::vector<P2Path> chosen;
  bool stop = false;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t used) {
    if (chosen.size() == size) {
      stop = fn(chosen);
      return;
    }
    for (std::size_t i = from; i < all.size() && !stop; ++i) {
      if (all[i].mask & used) continue;
      if (all.size() - i < size - chosen.size()) break;
      chosen.push_back(all[i].path);
      rec(i + 1, used | all[i].mask);
      chosen.pop_back();
    }
  };
  rec(0, 0);
}

inline std::vector<Packing> enumerate_packings(const Graph& g, std::size_t size,
                                               std::size_t cap = kEnumerationCap) {
  std::vector<Packing> out;
  for_each_packing(
      g, size,
      [&](const std::vector<P2Path>& paths) {
        out.emplace_back(paths);
        return false;
      },
      cap);
  return out;
}

/// The (j+1)-packings that reuse the most whole paths of P (q1_family), and
/// among those the ones sharing the most edges with P (q2_family).
struct ExtremalFamilies {
  std::vector<std::vector<P2Path>> q1_family;
  std::vector<std::vector<P2Path>> q2_family;
  std::size_t reused_paths = 0;  // priority-1 optimum
  std::size_t shared_edges = 0;  // priority-2 optimum within q1_family
};

inline ExtremalFamilies extremal_family(const Graph& g, const Packing& p,
                                        std::size_t cap = kEnumerationCap) {
  std::set<Edge> p_edges;
  for (const auto& path : p.paths())
    for (const auto& e : path.edges()) p_edges.insert(e);

  ExtremalFamilies out;
  std::vector<std::size_t> overlap;
  bool any = false;
  for_each_packing(
      g, p.size() + 1,
      [&](const std::vector<P2Path>& q) {
        std::size_t reuse = 0, shared = 0;
        for (const auto& path : q) {
          if (p.contains_path(path)) ++reuse;
          for (const auto& e : path.edges()) shared += p_edges.contains(e) ? 1 : 0;
        }
        if (!any || reuse > out.reused_paths) {
          any = true;
          out.reused_paths = reuse;
          out.q1_family.clear();
          overlap.clear();
        }
        if (reuse == out.reused_paths) {
          out.q1_family.push_back(q);
          overlap.push_back(shared);
        }
        return false;
      },
      cap);
  if (!any) return out;
  out.shared_edges = *std::max_element(overlap.begin(), overlap.end());
  for (std::size_t i = 0; i < out.q1_family.size(); ++i)
    if (overlap[i] == out.shared_edges) out.q2_family.push_back(out.q1_family[i]);
  return out;
}

/// Path-neighbours of v on p (v must lie on p).
inline std::vector<Vertex> path_neighbors(const P2Path& p, Vertex v) {
  if (v == p.mid) return {p.e1, p.e2};
  return {p.mid};
}

/// q is foldable on p: the midpoint of q lies on p and one of its
/// path-neighbours on p is not covered by Q.
inline bool is_foldable(const P2Path& q, const P2Path& p, const VertexSet& q_cover) {
  if (!p.contains(q.mid)) return false;
  for (Vertex w : path_neighbors(p, q.mid))
    if (!q_cover.contains(w)) return true;
  return false;
}

/// q is shiftable on p with respect to its endpoint `end`: that endpoint lies
/// on p and one of its path-neighbours on p is not covered by Q.
inline bool is_shiftable(const P2Path& q, Vertex end, const P2Path& p, const VertexSet& q_cover) {
  if (end != q.e1 && end != q.e2) return false;
  if (!p.contains(end)) return false;
  for (Vertex w : path_neighbors(p, end))
    if (!q_cover.contains(w)) return true;
  return false;
}

struct Section3Violation {
  char check;  // 'a'..'e'
  std::string detail;
};

struct Section3Report {
  std::size_t j = 0;
  std::size_t q1_size = 0;
  std::size_t q2_size = 0;
  std::size_t best_reuse = 0;  // max |V(P) n V(Q)| over q2_family
  std::size_t checks = 0;
  std::vector<Section3Violation> violations;

  bool vacuous() const { return q1_size == 0; }
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string path_str(const P2Path& p) {
  return "(" + std::to_string(p.e1) + "," + std::to_string(p.mid) + "," + std::to_string(p.e2) +
         ")";
}

inline std::string packing_str(const std::vector<P2Path>& q) {
  std::string s = "{";
  for (const auto& p : q) s += path_str(p);
  return s + "}";
}

}  // namespace detail

/// Checks, against every extremal (j+1)-packing, the structural claims that
/// lead to the 2.5j reuse bound:
///   a) each p in P keeps >= 2 vertices in V(Q)            (all of q1_family)
///   b) each p not in Q meets >= 2 distinct paths of Q     (all of q1_family)
///   c) no q is foldable on any p                          (all of q2_family)
///   d) if |V(p) n V(Q)| = 2, a cut vertex is a Q-endpoint (all of q2_family)
///   e) some Q in q2_family has |V(P) n V(Q)| >= ceil(2.5 j)
inline Section3Report verify_section3(const Graph& g, const Packing& p,
                                      std::size_t cap = kEnumerationCap) {
  if (!is_maximal(g, p)) throw ContractViolation("verify_section3: packing is not maximal");
  Section3Report rep;
  rep.j = p.size();
  const auto fam = extremal_family(g, p, cap);
  rep.q1_size = fam.q1_family.size();
  rep.q2_size = fam.q2_family.size();
  if (fam.q1_family.empty()) return rep;

  auto cover_of = [](const std::vector<P2Path>& q) {
    VertexSet c;
    for (const auto& path : q) c.insert({path.e1, path.mid, path.e2});
    return c;
  };
  auto fail = [&](char check, const std::vector<P2Path>& q, const std::string& what) {
    rep.violations.push_back({check, what + " in Q=" + detail::packing_str(q)});
  };

  for (const auto& q : fam.q1_family) {
    const auto cover = cover_of(q);
    for (const auto& path : p.paths()) {
      std::size_t inside = 0;
      for (Vertex v : path.vertices()) inside += cover.contains(v) ? 1 : 0;
      ++rep.checks;
      if (inside < 2) fail('a', q, "p=" + detail::path_str(path) + " keeps <2 vertices");
      if (std::find(q.begin(), q.end(), path) != q.end()) continue;
      std::size_t meeting = 0;
      for (const auto& qq : q)
        meeting += (detail::mask_of(qq) & detail::mask_of(path)) ? 1 : 0;
      ++rep.checks;
      if (meeting < 2) fail('b', q, "p=" + detail::path_str(path) + " meets <2 paths");
    }
  }

  const std::size_t bound = (5 * rep.j + 1) / 2;  // ceil(2.5 j)
  for (const auto& q : fam.q2_family) {
    const auto cover = cover_of(q);
    VertexSet ends;
    for (const auto& qq : q) ends.insert({qq.e1, qq.e2});
    std::size_t reuse = 0;
    for (const auto& path : p.paths()) {
      std::vector<Vertex> cut;
      for (Vertex v : path.vertices())
        if (cover.contains(v)) cut.push_back(v);
      reuse += cut.size();
      for (const auto& qq : q) {
        ++rep.checks;
        if (is_foldable(qq, path, cover))
          fail('c', q, "q=" + detail::path_str(qq) + " foldable on p=" + detail::path_str(path));
      }
      if (cut.size() == 2) {
        ++rep.checks;
        if (!ends.contains(cut[0]) && !ends.contains(cut[1]))
          fail('d', q, "p=" + detail::path_str(path) + " cut only at Q-midpoints");
      }
    }
    rep.best_reuse = std::max(rep.best_reuse, reuse);
  }
  ++rep.checks;
  if (rep.best_reuse < bound)
    rep.violations.push_back({'e', "best reuse " + std::to_string(rep.best_reuse) + " < " +
                                       std::to_string(bound)});
  return rep;
}

struct TotalEdgeCover {
  std::size_t size = 0;
  std::vector<Edge> edges;
};

/// True when every component of (V, cover) has at least two edges and no
/// vertex is left uncovered.
inline bool is_total_edge_cover(const Graph& g, const std::vector<Edge>& cover) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<char> touched(n, 0);
  for (const auto& [u, v] : cover) {
    if (!g.has_edge(u, v)) return false;
    touched[u] = touched[v] = 1;
    parent[find(u)] = find(v);
  }
  std::vector<std::size_t> edges_in(n, 0);
  for (const auto& [u, v] : cover) ++edges_in[find(u)];
  for (std::size_t v = 0; v < n; ++v) {
    if (!touched[v]) return false;
    if (edges_in[find(v)] < 2) return false;
  }
  return true;
}

/// Smallest total edge cover by trying edge subsets in increasing size.
inline TotalEdgeCover min_total_edge_cover_bruteforce(const Graph& g,
                                                      std::size_t cap = kDefaultOracleCap) {
  const auto edges = g.edges();
  const std::size_t m = edges.size(), n = g.vertex_count();
  if (m > cap || m > 62)
    throw RefusalError("min_total_edge_cover_bruteforce: " + std::to_string(m) +
                       " edges exceeds cap " + std::to_string(cap));
  for (const auto& comp : components_outside(g, {}))
    if (comp.size() < 3)
      throw InputError("no total edge cover: component of size " + std::to_string(comp.size()));
  if (n == 0) return {};

  std::vector<Edge> subset;
  for (std::size_t r = (n + 1) / 2; r <= m; ++r) {
    // Gosper's hack over r-subsets in ascending mask order.
    std::uint64_t s = (r == 64) ? ~0ULL : (1ULL << r) - 1;
    const std::uint64_t limit = 1ULL << m;
    while (s < limit) {
      subset.clear();
      for (std::uint64_t t = s; t; t &= t - 1)
        subset.push_back(edges[static_cast<std::size_t>(std::countr_zero(t))]);
      if (is_total_edge_cover(g, subset)) return {r, subset};
      const std::uint64_t c = s & -s;
      const std::uint64_t hi = s + c;
      s = (((hi ^ s) >> 2) / c) | hi;
    }
  }
  throw InternalError("min_total_edge_cover_bruteforce: no cover found");
}

}  // namespace p2pack
