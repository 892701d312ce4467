#pragma once

// DIMACS edge-format input/output, result serialization, and the two corpus
// generators (planted packings and G(n, p)).

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "p2pack/errors.hpp"
#include "p2pack/graph.hpp"
#include "p2pack/instance.hpp"

namespace p2pack {

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

/// Reads `c` comments, one `p edge <n> <m>` line and `e <u> <v>` lines with
/// 1-based labels. Duplicate edges are dropped with a warning.
inline ParsedGraph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t declared_m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  ParsedGraph out;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "second 'p' line");
      if (tok.size() != 4 || tok[1] != "edge")
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      n = detail::parse_count(tok[2], line_no, "vertex count");
      declared_m = detail::parse_count(tok[3], line_no, "edge count");
      if (n > std::numeric_limits<Vertex>::max())
        throw ParseError(line_no, "vertex count too large");
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before 'p' line");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const auto u = detail::parse_count(tok[1], line_no, "vertex label");
      const auto v = detail::parse_count(tok[2], line_no, "vertex label");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex label out of range [1, " + std::to_string(n) + "]");
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      const Edge e = make_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      if (!seen.insert(e).second) {
        out.warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                               std::to_string(u) + " " + std::to_string(v));
        continue;
      }
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p edge' line");
  if (declared_m != edges.size())
    out.warnings.push_back("declared " + std::to_string(declared_m) + " edges, read " +
                           std::to_string(edges.size()));
  out.graph = Graph(static_cast<std::size_t>(n), edges);
  return out;
}

inline ParsedGraph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

inline std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

/// Key-value lines followed by one `p2 <e1> <mid> <e2>` line per certificate
/// path, 1-based.
inline std::string write_result(const SolveResult& r) {
  std::ostringstream out;
  out << "answer " << to_string(r.answer) << "\n";
  out << "rule1_applications " << r.stats.rule1_applications << "\n";
  out << "rule2_applications " << r.stats.rule2_applications << "\n";
  out << "crowns " << r.stats.crowns << "\n";
  out << "augmentation_rounds " << r.stats.augmentation_rounds << "\n";
  for (const auto& ev : r.kernel_trace) {
    out << "event " << to_string(ev.kind) << " head " << ev.head_size << " removed "
        << ev.removed_vertices << " k " << ev.k_after << " packing " << ev.packing_size << "\n";
  }
  if (r.certificate) {
    out << "certificate_size " << r.certificate->size() << "\n";
    for (const auto& p : r.certificate->paths())
      out << "p2 " << p.e1 + 1 << " " << p.mid + 1 << " " << p.e2 + 1 << "\n";
  }
  return out.str();
}

// std distributions are implementation-defined, so samples are drawn
// directly from the raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// 3k vertices carrying the planted paths 3i - 3i+1 - 3i+2, plus extra_edges
/// distinct random edges outside the planted ones.
inline Instance gen_planted(std::int64_t k, std::uint64_t extra_edges, std::uint64_t seed) {
  if (k < 1) throw InputError("gen_planted: k must be at least 1");
  const auto n = static_cast<Vertex>(3 * k);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; i += 3) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(i + 1, i + 2);
  }
  const std::set<Edge> planted(edges.begin(), edges.end());
  std::vector<Edge> pool;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!planted.contains({u, v})) pool.emplace_back(u, v);
  if (extra_edges > pool.size())
    throw InputError("gen_planted: " + std::to_string(extra_edges) + " extra edges requested, " +
                     std::to_string(pool.size()) + " available");
  Rng rng(seed);
  for (std::size_t i = 0; i < extra_edges; ++i) {
    const std::size_t pick = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[pick]);
    edges.push_back(pool[i]);
  }
  return Instance{Graph(n, edges), k};
}

inline Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("gen_gnp: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace p2pack
