#pragma once

// Property suite behind `p2pack verify`: solver/oracle agreement, the kernel
// bound, the extremal-packing checks and the Gallai identity, run over a
// seeded corpus.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "p2pack/instance_io.hpp"
#include "p2pack/oracle.hpp"
#include "p2pack/solver.hpp"

namespace p2pack {

struct CorpusEntry {
  std::string name;
  Graph graph;
};

/// Random G(n, p) graphs with n in [n_lo, n_hi] and p cycling through
/// {0.15, 0.3, 0.5}, then planted instances with k in [1, 4] and up to 3k
/// extra edges.
inline std::vector<CorpusEntry> make_corpus(std::size_t gnp_count, std::size_t n_lo,
                                            std::size_t n_hi, std::size_t planted_count,
                                            std::uint64_t seed) {
  static constexpr double kDensities[] = {0.15, 0.3, 0.5};
  Rng rng(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < gnp_count; ++i) {
    const std::size_t n = n_lo + rng.below(n_hi - n_lo + 1);
    const double p = kDensities[i % 3];
    const std::uint64_t s = rng.below(UINT64_MAX);
    std::ostringstream name;
    name << "gnp n=" << n << " p=" << p << " seed=" << s;
    out.push_back({name.str(), gen_gnp(n, p, s)});
  }
  for (std::size_t i = 0; i < planted_count; ++i) {
    const auto k = static_cast<std::int64_t>(1 + rng.below(4));
    const auto n = static_cast<std::uint64_t>(3 * k);
    const std::uint64_t capacity = n * (n - 1) / 2 - static_cast<std::uint64_t>(2 * k);
    const std::uint64_t extra = rng.below(std::min(n, capacity) + 1);
    const std::uint64_t s = rng.below(UINT64_MAX);
    std::ostringstream name;
    name << "planted k=" << k << " extra=" << extra << " seed=" << s;
    out.push_back({name.str(), gen_planted(k, extra, s).graph});
  }
  return out;
}

/// Named presets; throws InputError on an unknown name.
inline std::vector<CorpusEntry> corpus_preset(const std::string& name) {
  if (name == "default") return make_corpus(60, 6, 14, 20, 2024);
  if (name == "quick") return make_corpus(12, 6, 10, 4, 7);
  if (name == "full") return make_corpus(500, 6, 16, 200, 1);
  throw InputError("unknown corpus '" + name + "' (expected default, quick or full)");
}

/// A maximal packing built by adding the P2s of g in a random order.
inline Packing random_maximal_packing(const Graph& g, Rng& rng) {
  std::vector<P2Path> all;
  for (Vertex mid = 0; mid < g.vertex_count(); ++mid) {
    const auto nb = g.neighbors(mid);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) all.emplace_back(nb[a], mid, nb[b]);
  }
  for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
  Packing p;
  for (const auto& path : all)
    if (!p.covers(path.e1) && !p.covers(path.mid) && !p.covers(path.e2)) p.add(path);
  return p;
}

struct SuiteOptions {
  std::size_t section3_max_n = 12;
  std::size_t gallai_max_m = 20;
  std::size_t random_packings = 3;
  std::size_t oracle_cap = kDefaultOracleCap;
};

struct SuiteReport {
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<std::string> lines;  // one per (instance, check)
};

/// Runs every check on one graph. Lines look like
/// `<index> <check> ok|FAIL <detail>`.
inline SuiteReport verify_instance(std::size_t index, const Graph& g, const SuiteOptions& opt) {
  SuiteReport rep;
  auto record = [&](const std::string& check, bool ok, const std::string& detail) {
    ++rep.checks;
    if (!ok) ++rep.violations;
    rep.lines.push_back(std::to_string(index) + " " + check + (ok ? " ok " : " FAIL ") + detail);
  };
  const std::size_t n = g.vertex_count();
  const std::size_t opt_size = max_packing_dp(g, opt.oracle_cap).size;

  {
    std::string bad;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n / 3); ++k) {
      const auto r = solve(Instance{g, k});
      const bool expect = opt_size >= static_cast<std::size_t>(k);
      if ((r.answer == Answer::yes) != expect) bad += " k=" + std::to_string(k);
    }
    record("oracle_agreement", bad.empty(),
           "max_packing=" + std::to_string(opt_size) + (bad.empty() ? "" : " wrong at" + bad));
  }

  {
    std::string bad;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n / 3) + 1; ++k) {
      const auto kr = kernelize(Instance{g, k});
      if (kr.early_yes()) continue;
      const auto& red = std::get<ReducedKernel>(kr.outcome);
      const auto bound = std::max<std::int64_t>(0, 7 * red.instance.k - 8);
      if (static_cast<std::int64_t>(red.instance.graph.vertex_count()) > bound)
        bad += " k=" + std::to_string(k) + "(n'=" +
               std::to_string(red.instance.graph.vertex_count()) + ")";
    }
    record("kernel_bound", bad.empty(), bad.empty() ? "" : "exceeded at" + bad);
  }

  if (n <= opt.section3_max_n) {
    std::vector<Packing> packings;
    packings.push_back(reduce_exhaustive(g, greedy_maximal(g, Packing{})).packing);
    Rng rng(index * 7919 + 17);
    for (std::size_t i = 0; i < opt.random_packings; ++i)
      packings.push_back(random_maximal_packing(g, rng));
    std::size_t nonvacuous = 0;
    std::string bad;
    for (const auto& p : packings) {
      const auto report = verify_section3(g, p);
      if (!report.vacuous()) ++nonvacuous;
      for (const auto& v : report.violations) bad += std::string(" ") + v.check + ":" + v.detail;
    }
    record("section3", bad.empty(),
           "packings=" + std::to_string(packings.size()) +
               " nonvacuous=" + std::to_string(nonvacuous) + bad);
  }

  const auto comps = components_outside(g, {});
  const bool coverable =
      std::all_of(comps.begin(), comps.end(), [](const VertexSet& c) { return c.size() >= 3; });
  if (coverable && g.edge_count() <= opt.gallai_max_m) {
    const auto tec = min_total_edge_cover_bruteforce(g, opt.gallai_max_m);
    std::string bad;
    if (tec.size + opt_size != n) bad += " identity";
    for (std::size_t kd = 0; kd <= g.edge_count(); ++kd) {
      const auto r = solve_total_edge_cover(g, kd);
      const bool expect = tec.size <= kd;
      if ((r.answer == Answer::yes) != expect) bad += " kd=" + std::to_string(kd);
      if (r.cover && (!is_total_edge_cover(g, *r.cover) || r.cover->size() > kd))
        bad += " bad_cover@kd=" + std::to_string(kd);
    }
    record("gallai", bad.empty(), "min_cover=" + std::to_string(tec.size) + bad);
  }
  return rep;
}

inline SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opt) {
  SuiteReport total;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto rep = verify_instance(i, corpus[i].graph, opt);
    total.checks += rep.checks;
    total.violations += rep.violations;
    for (auto& line : rep.lines) total.lines.push_back(std::move(line));
  }
  return total;
}

}  // namespace p2pack
