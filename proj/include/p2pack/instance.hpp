#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p2pack/graph.hpp"

namespace p2pack {

/// A P2-packing question: does `graph` contain `k` vertex-disjoint P2s?
struct Instance {
  Graph graph;
  std::int64_t k = 0;
};

enum class Answer { yes, no };

inline const char* to_string(Answer a) { return a == Answer::yes ? "YES" : "NO"; }

/// One step of the reduction trace.
struct KernelEvent {
  enum class Kind { cleanup, double_crown, fat_crown, augment };

  Kind kind = Kind::cleanup;
  std::size_t head_size = 0;         // |H| for crowns
  std::size_t removed_vertices = 0;  // vertices deleted from the working graph
  std::int64_t k_after = 0;          // parameter after the step
  std::size_t packing_size = 0;      // working packing size (augment events)

  friend bool operator==(const KernelEvent&, const KernelEvent&) = default;
};

inline const char* to_string(KernelEvent::Kind kind) {
  switch (kind) {
    case KernelEvent::Kind::cleanup: return "cleanup";
    case KernelEvent::Kind::double_crown: return "double_crown";
    case KernelEvent::Kind::fat_crown: return "fat_crown";
    case KernelEvent::Kind::augment: return "augment";
  }
  return "?";
}

struct SolveStats {
  std::size_t rule1_applications = 0;
  std::size_t rule2_applications = 0;
  std::size_t crowns = 0;
  std::size_t augmentation_rounds = 0;

  friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

/// Outcome of solve(). `certificate` is present exactly when answer is YES
/// and is expressed in the ids of the input graph.
struct SolveResult {
  Answer answer = Answer::no;
  std::optional<Packing> certificate;
  std::vector<KernelEvent> kernel_trace;
  SolveStats stats;
};

}  // namespace p2pack
