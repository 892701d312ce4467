#pragma once

// Iterative augmentation: from a maximal packing of size j, search for one of
// size j+1 by guessing its midpoints (few of them outside V(P)) and, past a
// cut-over point, its endpoint pairs (few endpoints outside V(P)).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "p2pack/graph.hpp"
#include "p2pack/reconstruction.hpp"

namespace p2pack {

/// Loop caps for the two enumeration phases, floor(0.3251 j) and
/// floor(0.1749 j + 3), computed in exact integer arithmetic.
struct AugmentBudget {
  std::size_t j = 0;
  std::size_t l_max = 0;
  std::size_t lbar_max = 0;

  static AugmentBudget for_packing_size(std::size_t j) {
    return {j, (3251 * j) / 10000, (1749 * j + 30000) / 10000};
  }
};

/// Calls fn(chosen) for every r-subset of pool in lexicographic order of
/// positions. Stops early and returns true as soon as fn returns true.
template <typename Fn>
bool for_each_combination(std::span<const Vertex> pool, std::size_t r, Fn&& fn) {
  if (r > pool.size()) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<Vertex> chosen(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) chosen[i] = pool[idx[i]];
    if (fn(std::span<const Vertex>(chosen))) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == pool.size() - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t t = i; t < r; ++t) idx[t] = idx[t - 1] + 1;
  }
}

namespace detail {

// Enumerates perfect pairings of a sorted endpoint set (smallest unpaired
// vertex first, partners ascending) while keeping an incremental matching of
// the pairs chosen so far to admissible midpoints. A partial pairing that
// cannot be matched can never complete, so its subtree is skipped; leaves are
// re-checked with packing_from_endpoint_pairs.
class PairingSearch {
 public:
  PairingSearch(const Graph& g, std::span<const Vertex> endpoints)
      : g_(g), ends_(endpoints.begin(), endpoints.end()), in_ends_(g.vertex_count(), 0),
        used_(ends_.size(), 0), owner_(g.vertex_count(), -1), stamp_(g.vertex_count(), 0) {
    for (Vertex v : ends_) in_ends_[v] = 1;
  }

  std::optional<Packing> run() {
    pairs_.clear();
    candidates_.clear();
    if (recurse()) return result_;
    return std::nullopt;
  }

 private:
  bool recurse() {
    std::size_t first = 0;
    while (first < ends_.size() && used_[first]) ++first;
    if (first == ends_.size()) {
      result_ = packing_from_endpoint_pairs(g_, pairs_);
      return result_.has_value();
    }
    used_[first] = 1;
    for (std::size_t second = first + 1; second < ends_.size(); ++second) {
      if (used_[second]) continue;
      auto cand = common_candidates(ends_[first], ends_[second]);
      if (cand.empty()) continue;
      const auto saved_owner = owner_;
      const auto saved_mid = mid_;
      pairs_.emplace_back(ends_[first], ends_[second]);
      candidates_.push_back(std::move(cand));
      mid_.push_back(UINT32_MAX);
      ++round_;
      if (augment(static_cast<int>(pairs_.size() - 1))) {
        used_[second] = 1;
        if (recurse()) return true;
        used_[second] = 0;
      }
      pairs_.pop_back();
      candidates_.pop_back();
      owner_ = saved_owner;
      mid_ = saved_mid;
    }
    used_[first] = 0;
    return false;
  }

  std::vector<Vertex> common_candidates(Vertex a, Vertex b) const {
    std::vector<Vertex> out;
    const auto na = g_.neighbors(a);
    const auto nb = g_.neighbors(b);
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    std::erase_if(out, [&](Vertex v) { return in_ends_[v] != 0; });
    return out;
  }

  bool augment(int pair) {
    for (Vertex v : candidates_[static_cast<std::size_t>(pair)]) {
      if (stamp_[v] == round_) continue;
      stamp_[v] = round_;
      if (owner_[v] < 0 || augment(owner_[v])) {
        owner_[v] = pair;
        mid_[static_cast<std::size_t>(pair)] = v;
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> ends_;
  std::vector<char> in_ends_;
  std::vector<char> used_;
  std::vector<int> owner_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t round_ = 0;
  std::vector<Edge> pairs_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> mid_;
  std::optional<Packing> result_;
};

}  // namespace detail

/// Tries to turn the maximal packing p (size j) into a packing of size j+1.
///
/// Midpoint phase: for l = 0..l_max, every S_i in V(P) of size j+1-l and
/// S_o outside of size l is tried as a midpoint set. Endpoint phase: for
/// lbar = 0..lbar_max, every B_i in V(P) of size 2(j+1)-lbar and B_o outside
/// of size lbar is split into pairs in every way and tried as endpoint pairs.
/// The first success in this order is returned.
inline std::optional<Packing> augment(const Graph& g, const Packing& p) {
  const std::size_t j = p.size();
  const std::size_t target = j + 1;
  if (3 * target > g.vertex_count()) return std::nullopt;
  const auto budget = AugmentBudget::for_packing_size(j);

  std::vector<Vertex> inside(p.covered().begin(), p.covered().end());
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!p.covers(v)) outside.push_back(v);

  // A midpoint needs two neighbours.
  std::vector<Vertex> inside_mid, outside_mid;
  std::copy_if(inside.begin(), inside.end(), std::back_inserter(inside_mid),
               [&](Vertex v) { return g.degree(v) >= 2; });
  std::copy_if(outside.begin(), outside.end(), std::back_inserter(outside_mid),
               [&](Vertex v) { return g.degree(v) >= 2; });

  std::optional<Packing> found;
  for (std::size_t l = 0; l <= budget.l_max; ++l) {
    if (target - l > inside.size()) continue;
    for_each_combination(inside_mid, target - l, [&](std::span<const Vertex> s_in) {
      return for_each_combination(outside_mid, l, [&](std::span<const Vertex> s_out) {
        VertexSet mids(s_in.begin(), s_in.end());
        mids.insert(s_out.begin(), s_out.end());
        found = packing_from_midpoints(g, mids);
        return found.has_value();
      });
    });
    if (found) return found;
  }

  for (std::size_t lbar = 0; lbar <= budget.lbar_max; ++lbar) {
    if (lbar > 2 * target) break;
    const std::size_t b_in = 2 * target - lbar;
    if (b_in > inside.size()) continue;
    for_each_combination(inside, b_in, [&](std::span<const Vertex> b_inside) {
      return for_each_combination(outside, lbar, [&](std::span<const Vertex> b_outside) {
        std::vector<Vertex> ends(b_inside.begin(), b_inside.end());
        ends.insert(ends.end(), b_outside.begin(), b_outside.end());
        std::sort(ends.begin(), ends.end());
        found = detail::PairingSearch(g, ends).run();
        return found.has_value();
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

namespace detail {

inline boost::multiprecision::cpp_int binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  boost::multiprecision::cpp_int acc = 1;
  for (unsigned i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

// Row n of Pascal's triangle, C(n, 0..n).
inline std::vector<boost::multiprecision::cpp_int> binomial_row(unsigned n) {
  std::vector<boost::multiprecision::cpp_int> row(n + 1);
  row[0] = 1;
  for (unsigned r = 1; r <= n; ++r) row[r] = row[r - 1] * (n - r + 1) / r;
  return row;
}

}  // namespace detail

/// Exact check that the midpoint-phase and endpoint-phase step counts both
/// grow strictly in z over 0 <= z <= j/2 - 1:
///   C(3j, j-z) C(4j, z)  < C(3j, j-z-1)  C(4j, z+1)
///   C(3j, 2j-z) C(4j, z) < C(3j, 2j-z-1) C(4j, z+1)
inline bool binomial_growth_check(unsigned j) {
  const auto c3 = detail::binomial_row(3 * j);
  const auto c4 = detail::binomial_row(4 * j);
  for (unsigned z = 0; 2 * z + 2 <= j; ++z) {
    if (!(c3[j - z] * c4[z] < c3[j - z - 1] * c4[z + 1])) return false;
    if (!(c3[2 * j - z] * c4[z] < c3[2 * j - z - 1] * c4[z + 1])) return false;
  }
  return true;
}

}  // namespace p2pack
