#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "p2pack/errors.hpp"

namespace p2pack {

/// Bipartite graph given by per-left-vertex sorted lists of right neighbours.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t left_count, std::size_t right_count)
      : right_count_(right_count), adj_(left_count) {}

  void add_edge(std::uint32_t left, std::uint32_t right) {
    if (left >= adj_.size() || right >= right_count_)
      throw InputError("bipartite edge (" + std::to_string(left) + ", " +
                       std::to_string(right) + ") out of range");
    auto& list = adj_[left];
    auto at = std::lower_bound(list.begin(), list.end(), right);
    if (at == list.end() || *at != right) list.insert(at, right);
  }

  std::size_t left_count() const noexcept { return adj_.size(); }
  std::size_t right_count() const noexcept { return right_count_; }
  std::span<const std::uint32_t> neighbors(std::uint32_t left) const { return adj_[left]; }

 private:
  std::size_t right_count_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

/// Partial injective map left -> right. kUnmatched marks a free vertex.
struct Matching {
  static constexpr std::uint32_t kUnmatched = UINT32_MAX;

  std::vector<std::uint32_t> left_mate;
  std::vector<std::uint32_t> right_mate;

  Matching() = default;
  Matching(std::size_t left_count, std::size_t right_count)
      : left_mate(left_count, kUnmatched), right_mate(right_count, kUnmatched) {}

  std::size_t size() const {
    return static_cast<std::size_t>(
        std::count_if(left_mate.begin(), left_mate.end(),
                      [](std::uint32_t r) { return r != kUnmatched; }));
  }

  bool left_matched(std::uint32_t l) const { return left_mate[l] != kUnmatched; }
  bool right_matched(std::uint32_t r) const { return right_mate[r] != kUnmatched; }

  void match(std::uint32_t l, std::uint32_t r) {
    left_mate[l] = r;
    right_mate[r] = l;
  }
};

/// True when m is injective both ways and uses only edges of b.
inline bool is_valid_matching(const BipartiteGraph& b, const Matching& m) {
  if (m.left_mate.size() != b.left_count() || m.right_mate.size() != b.right_count())
    return false;
  for (std::uint32_t l = 0; l < b.left_count(); ++l) {
    const auto r = m.left_mate[l];
    if (r == Matching::kUnmatched) continue;
    if (r >= b.right_count() || m.right_mate[r] != l) return false;
    const auto nb = b.neighbors(l);
    if (!std::binary_search(nb.begin(), nb.end(), r)) return false;
  }
  for (std::uint32_t r = 0; r < b.right_count(); ++r) {
    const auto l = m.right_mate[r];
    if (l != Matching::kUnmatched && (l >= b.left_count() || m.left_mate[l] != r)) return false;
  }
  return true;
}

namespace detail {

// Kuhn-style augmenting search. Left vertices are tried in ascending id and
// neighbours in ascending order, so the result is a function of b alone.
inline bool try_augment(const BipartiteGraph& b, Matching& m, std::uint32_t l,
                        std::vector<std::uint32_t>& stamp, std::uint32_t round) {
  for (std::uint32_t r : b.neighbors(l)) {
    if (stamp[r] == round) continue;
    stamp[r] = round;
    if (m.right_mate[r] == Matching::kUnmatched ||
        try_augment(b, m, m.right_mate[r], stamp, round)) {
      m.match(l, r);
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Maximum-cardinality matching, deterministic for a given graph.
inline Matching max_matching(const BipartiteGraph& b) {
  Matching m(b.left_count(), b.right_count());
  std::vector<std::uint32_t> stamp(b.right_count(), 0);
  std::uint32_t round = 0;
  for (std::uint32_t l = 0; l < b.left_count(); ++l) {
    // Greedy first hit avoids a full search for the common case.
    bool done = false;
    for (std::uint32_t r : b.neighbors(l)) {
      if (!m.right_matched(r)) {
        m.match(l, r);
        done = true;
        break;
      }
    }
    if (!done) detail::try_augment(b, m, l, stamp, ++round);
  }
  return m;
}

/// Vertices reachable from `sources` (left side) along paths that leave the
/// left side on non-matching edges and return on matching edges.
struct AlternatingSets {
  std::vector<std::uint32_t> left;   // sorted, includes the sources
  std::vector<std::uint32_t> right;  // sorted
};

inline AlternatingSets alternating_reachable(const BipartiteGraph& b, const Matching& m,
                                             std::span<const std::uint32_t> sources) {
  std::vector<char> left_seen(b.left_count(), 0), right_seen(b.right_count(), 0);
  std::vector<std::uint32_t> queue;
  for (auto s : sources) {
    if (s >= b.left_count()) throw InputError("alternating source out of range");
    if (!left_seen[s]) {
      left_seen[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto l = queue[head];
    for (auto r : b.neighbors(l)) {
      if (m.left_mate[l] == r || right_seen[r]) continue;
      right_seen[r] = 1;
      const auto next = m.right_mate[r];
      if (next != Matching::kUnmatched && !left_seen[next]) {
        left_seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  AlternatingSets out;
  for (std::uint32_t l = 0; l < b.left_count(); ++l)
    if (left_seen[l]) out.left.push_back(l);
  for (std::uint32_t r = 0; r < b.right_count(); ++r)
    if (right_seen[r]) out.right.push_back(r);
  return out;
}

}  // namespace p2pack
