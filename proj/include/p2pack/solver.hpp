#pragma once

// The iterative-compression driver: maximal packing, exhaustive Rules 1-2,
// crown reductions, then one augmentation step at a time. Also the
// stand-alone kernelization and the total-edge-cover dual.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "p2pack/augmentation.hpp"
#include "p2pack/crown.hpp"
#include "p2pack/errors.hpp"
#include "p2pack/graph.hpp"
#include "p2pack/instance.hpp"
#include "p2pack/packing_reduce.hpp"

namespace p2pack {

/// Called for every crown reduction with the instance before and after it.
using CrownObserver =
    std::function<void(const Instance& before, const CrownDecomposition&, const Instance& after)>;

namespace detail {

// Deletes every component with at most two vertices; none of them can host
// a P2. Returns the lift record when anything was removed.
inline std::optional<LiftRecord> drop_small_components(Graph& g) {
  VertexSet keep;
  for (const auto& comp : components_outside(g, {}))
    if (comp.size() >= 3) keep.insert(comp.begin(), comp.end());
  if (keep.size() == g.vertex_count()) return std::nullopt;
  auto sub = induced_subgraph(g, keep);
  g = std::move(sub.graph);
  return LiftRecord{std::move(sub.original_id), {}};
}

// Shared state of solve() and kernelize().
struct Reducer {
  Graph graph;
  std::int64_t k;
  std::vector<LiftRecord> chain;
  std::vector<KernelEvent> trace;
  SolveStats stats;

  void cleanup() {
    const auto before = graph.vertex_count();
    if (auto rec = drop_small_components(graph)) {
      chain.push_back(std::move(*rec));
      trace.push_back({KernelEvent::Kind::cleanup, 0, before - graph.vertex_count(), k, 0});
    }
  }

  ReduceOutcome reduce(Packing p) {
    p = greedy_maximal(graph, std::move(p));
    auto red = reduce_exhaustive(graph, std::move(p));
    stats.rule1_applications += red.rule1_applications;
    stats.rule2_applications += red.rule2_applications;
    return red;
  }

  void take_crown(const CrownDecomposition& crown, const CrownObserver& observer) {
    Instance before{std::move(graph), k};
    auto [after, rec] = apply_crown(before, crown);
    if (observer) observer(before, crown, after);
    trace.push_back({crown.kind() == CrownKind::double_crown ? KernelEvent::Kind::double_crown
                                                             : KernelEvent::Kind::fat_crown,
                     crown.head.size(), before.graph.vertex_count() - after.graph.vertex_count(),
                     after.k, 0});
    ++stats.crowns;
    chain.push_back(std::move(rec));
    graph = std::move(after.graph);
    k = after.k;
    cleanup();
  }
};

}  // namespace detail

/// Decides whether inst.graph has inst.k disjoint P2s. A YES answer carries
/// a certificate in the ids of inst.graph.
inline SolveResult solve(const Instance& inst, const CrownObserver& observer = {}) {
  SolveResult result;
  if (inst.k <= 0) {
    result.answer = Answer::yes;
    result.certificate = Packing{};
    return result;
  }
  detail::Reducer r{inst.graph, inst.k, {}, {}, {}};
  r.cleanup();

  auto finish = [&](Answer answer, const Packing* p) {
    result.answer = answer;
    if (p) {
      Packing cert = lift_through(r.chain, *p);
      if (auto e = packing_violation(inst.graph, cert))
        throw InternalError("solve: lifted certificate invalid: " + *e);
      if (static_cast<std::int64_t>(cert.size()) < inst.k)
        throw InternalError("solve: lifted certificate too small");
      result.certificate = std::move(cert);
    }
    result.kernel_trace = std::move(r.trace);
    result.stats = r.stats;
    return result;
  };

  Packing p;
  while (true) {
    // A packing of k P2s needs 3k vertices.
    if (3 * r.k > static_cast<std::int64_t>(r.graph.vertex_count()))
      return finish(Answer::no, nullptr);
    auto red = r.reduce(std::move(p));
    p = std::move(red.packing);
    if (static_cast<std::int64_t>(p.size()) >= r.k) return finish(Answer::yes, &p);

    if (auto crown = detect_crown_opportunity(r.graph, p, red.leftover,
                                              static_cast<std::int64_t>(p.size()),
                                              CrownMode::opportunistic)) {
      r.take_crown(*crown, observer);
      p = Packing{};
      if (r.k <= 0) return finish(Answer::yes, &p);
      continue;
    }

    auto bigger = augment(r.graph, p);
    ++r.stats.augmentation_rounds;
    if (!bigger) return finish(Answer::no, nullptr);
    p = std::move(*bigger);
    r.trace.push_back({KernelEvent::Kind::augment, 0, 0, r.k, p.size()});
  }
}

struct EarlyYes {
  Packing certificate;  // ids of the input graph, size >= k
};

struct ReducedKernel {
  Instance instance;
  std::vector<LiftRecord> chain;
  Packing packing;  // rule-free maximal packing of instance.graph, size < instance.k
};

struct KernelResult {
  std::variant<EarlyYes, ReducedKernel> outcome;
  std::vector<KernelEvent> trace;
  SolveStats stats;

  bool early_yes() const { return std::holds_alternative<EarlyYes>(outcome); }
};

/// Reduces until no crown is guaranteed. When the result is not an early
/// YES, the reduced graph has at most max(0, 7k' - 8) vertices.
inline KernelResult kernelize(const Instance& inst, const CrownObserver& observer = {}) {
  detail::Reducer r{inst.graph, inst.k, {}, {}, {}};
  auto early = [&](const Packing& p) {
    return KernelResult{EarlyYes{lift_through(r.chain, p)}, std::move(r.trace), r.stats};
  };
  if (r.k <= 0) return early(Packing{});
  r.cleanup();
  while (true) {
    auto red = r.reduce(Packing{});
    if (static_cast<std::int64_t>(red.packing.size()) >= r.k) return early(red.packing);
    if (auto crown = detect_crown_opportunity(r.graph, red.packing, red.leftover, r.k,
                                              CrownMode::guaranteed)) {
      r.take_crown(*crown, observer);
      if (r.k <= 0) return early(Packing{});
      continue;
    }
    ReducedKernel kernel{Instance{std::move(r.graph), r.k}, std::move(r.chain),
                         std::move(red.packing)};
    return KernelResult{std::move(kernel), std::move(r.trace), r.stats};
  }
}

struct TotalEdgeCoverResult {
  Answer answer = Answer::no;
  std::optional<std::vector<Edge>> cover;
};

/// Total edge cover of size at most kd, through the packing dual: a minimum
/// total edge cover has n - (maximum packing) edges.
inline TotalEdgeCoverResult solve_total_edge_cover(const Graph& g, std::size_t kd) {
  for (const auto& comp : components_outside(g, {}))
    if (comp.size() < 3)
      throw InputError("no total edge cover: component of size " + std::to_string(comp.size()) +
                       " at vertex " + std::to_string(*comp.begin()));
  const std::size_t n = g.vertex_count();
  // k edges of a total cover reach at most 1.5k vertices.
  if (2 * n > 3 * kd) return {};

  Packing base;
  if (n > kd) {
    const auto res = solve(Instance{g, static_cast<std::int64_t>(n - kd)});
    if (res.answer == Answer::no) return {};
    base = *res.certificate;
  }
  const Packing p = greedy_maximal(g, base);
  const auto lc = classify_leftover(g, p);
  auto covered_neighbor = [&](Vertex v) -> std::optional<Vertex> {
    for (Vertex w : g.neighbors(v))
      if (p.covers(w)) return w;
    return std::nullopt;
  };

  std::vector<Edge> cover;
  for (const auto& path : p.paths())
    for (const auto& e : path.edges()) cover.push_back(e);
  for (Vertex v : lc.q0) cover.push_back(make_edge(v, *covered_neighbor(v)));
  for (const auto& [a, b] : lc.q1) {
    cover.push_back({a, b});
    if (auto w = covered_neighbor(a)) {
      cover.push_back(make_edge(a, *w));
    } else {
      cover.push_back(make_edge(b, *covered_neighbor(b)));
    }
  }
  std::sort(cover.begin(), cover.end());
  if (cover.size() > kd) throw InternalError("solve_total_edge_cover: cover exceeds kd");
  return {Answer::yes, std::move(cover)};
}

}  // namespace p2pack
