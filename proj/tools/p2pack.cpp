// Command-line front end: solve, kernelize, oracle, gen, verify, bench.
//
// Exit codes: 0 success (YES for solve), 1 NO, 2 usage or input error,
// 3 oracle refusal.

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "p2pack/instance_io.hpp"
#include "p2pack/oracle.hpp"
#include "p2pack/solver.hpp"
#include "p2pack/suite.hpp"

namespace {

using namespace p2pack;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitRefusal = 3;

Graph read_graph(const std::string& path) {
  ParsedGraph parsed;
  if (path.empty()) {
    parsed = parse_dimacs(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    parsed = parse_dimacs(in);
  }
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return std::move(parsed.graph);
}

std::size_t oracle_cap() {
  const char* env = std::getenv("P2PACK_ORACLE_CAP");
  if (!env || !*env) return kDefaultOracleCap;
  std::size_t value = 0;
  const std::string text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("P2PACK_ORACLE_CAP must be a nonnegative integer, got '" + text + "'");
  if (value > kDpHardCeiling) {
    std::cerr << "warning: P2PACK_ORACLE_CAP clamped to " << kDpHardCeiling << "\n";
    value = kDpHardCeiling;
  }
  return value;
}

std::int64_t check_k(std::int64_t k) {
  if (k < 0) throw InputError("k must be nonnegative");
  return k;
}

int run_solve(const std::string& file, std::int64_t k) {
  const Graph g = read_graph(file);
  const auto result = solve(Instance{g, check_k(k)});
  std::cout << write_result(result);
  return result.answer == Answer::yes ? kExitYes : kExitNo;
}

int run_kernelize(const std::string& file, std::int64_t k) {
  const Graph g = read_graph(file);
  const auto kr = kernelize(Instance{g, check_k(k)});
  if (const auto* early = std::get_if<EarlyYes>(&kr.outcome)) {
    SolveResult r{Answer::yes, early->certificate, kr.trace, kr.stats};
    std::cout << "c early_yes\n" << write_result(r);
    return kExitYes;
  }
  const auto& red = std::get<ReducedKernel>(kr.outcome);
  std::cout << "c kernel k " << red.instance.k << "\n";
  std::cout << "c kernel vertices " << red.instance.graph.vertex_count() << " (input "
            << g.vertex_count() << ")\n";
  std::cout << "c kernel packing " << red.packing.size() << "\n";
  std::cout << "c stats rule1 " << kr.stats.rule1_applications << " rule2 "
            << kr.stats.rule2_applications << " crowns " << kr.stats.crowns << "\n";
  for (const auto& ev : kr.trace)
    std::cout << "c event " << to_string(ev.kind) << " head " << ev.head_size << " removed "
              << ev.removed_vertices << " k " << ev.k_after << "\n";
  std::vector<Vertex> origin(red.instance.graph.vertex_count());
  for (Vertex v = 0; v < origin.size(); ++v) {
    Vertex x = v;
    for (auto it = red.chain.rbegin(); it != red.chain.rend(); ++it) x = it->kept[x];
    origin[v] = x;
  }
  for (Vertex v = 0; v < origin.size(); ++v)
    std::cout << "c origin " << v + 1 << " " << origin[v] + 1 << "\n";
  std::cout << write_dimacs(red.instance.graph);
  return kExitYes;
}

int run_oracle(const std::string& file, bool tec) {
  const Graph g = read_graph(file);
  const std::size_t cap = oracle_cap();
  if (tec) {
    const auto cover = min_total_edge_cover_bruteforce(g, cap);
    std::cout << "min_total_edge_cover " << cover.size << "\n";
    for (const auto& [u, v] : cover.edges) std::cout << "edge " << u + 1 << " " << v + 1 << "\n";
    return kExitYes;
  }
  const auto best = max_packing_dp(g, cap);
  std::cout << "max_packing " << best.size << "\n";
  for (const auto& p : best.witness.paths())
    std::cout << "p2 " << p.e1 + 1 << " " << p.mid + 1 << " " << p.e2 + 1 << "\n";
  return kExitYes;
}

int run_verify(const std::string& corpus_name, bool failures_only) {
  const auto corpus = corpus_preset(corpus_name);
  SuiteOptions opt;
  opt.oracle_cap = oracle_cap();
  std::size_t checks = 0, violations = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::cout << "# " << i << " " << corpus[i].name << "\n";
    const auto rep = verify_instance(i, corpus[i].graph, opt);
    checks += rep.checks;
    violations += rep.violations;
    for (const auto& line : rep.lines)
      if (!failures_only || line.find(" FAIL ") != std::string::npos) std::cout << line << "\n";
  }
  std::cout << "summary instances " << corpus.size() << " checks " << checks << " violations "
            << violations << "\n";
  return violations == 0 ? kExitYes : kExitNo;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value < 3)
      throw InputError("--sizes expects a comma list of integers >= 3, got '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw InputError("--sizes is empty");
  return out;
}

int run_bench(const std::string& sizes_text, std::uint64_t seed, std::size_t reps) {
  const auto sizes = parse_sizes(sizes_text);
  std::cout << "instance,n,m,k,answer,seconds,rule1,rule2,crowns,augmentation_rounds\n";
  Rng rng(seed);
  for (std::size_t n : sizes) {
    for (std::size_t r = 0; r < reps; ++r) {
      const auto k = static_cast<std::int64_t>(n / 3);
      const auto inst = gen_planted(k, n, rng.below(UINT64_MAX));
      std::vector<std::pair<std::string, Instance>> cases;
      cases.emplace_back("planted", Instance{inst.graph, k});
      const Graph sparse = gen_gnp(n, 2.0 / static_cast<double>(n), rng.below(UINT64_MAX));
      cases.emplace_back("gnp", Instance{sparse, std::max<std::int64_t>(1, k / 2)});
      for (const auto& [label, instance] : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = solve(instance);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        std::cout << label << "," << instance.graph.vertex_count() << ","
                  << instance.graph.edge_count() << "," << instance.k << ","
                  << to_string(res.answer) << "," << dt.count() << ","
                  << res.stats.rule1_applications << "," << res.stats.rule2_applications << ","
                  << res.stats.crowns << "," << res.stats.augmentation_rounds << "\n";
      }
    }
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p2pack: vertex-disjoint P2 packing solver"};
  app.require_subcommand(1);

  std::string file;
  std::int64_t k = 0;
  auto* solve_cmd = app.add_subcommand("solve", "decide whether k disjoint P2s exist");
  solve_cmd->add_option("-k", k, "number of paths")->required();
  solve_cmd->add_option("--file", file, "DIMACS input (default stdin)");

  auto* kernel_cmd = app.add_subcommand("kernelize", "reduce to a small equivalent instance");
  kernel_cmd->add_option("-k", k, "number of paths")->required();
  kernel_cmd->add_option("--file", file, "DIMACS input (default stdin)");

  bool tec = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact maximum packing by brute force");
  oracle_cmd->add_flag("--tec", tec, "minimum total edge cover instead");
  oracle_cmd->add_option("--file", file, "DIMACS input (default stdin)");

  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance in DIMACS format");
  gen_cmd->require_subcommand(1);
  std::int64_t planted_k = 0;
  std::uint64_t extra = 0;
  auto* planted_cmd = gen_cmd->add_subcommand("planted", "k planted P2s plus random edges");
  planted_cmd->add_option("k", planted_k, "planted paths")->required();
  planted_cmd->add_option("extra", extra, "extra random edges")->required();
  planted_cmd->add_option("--seed", seed, "random seed")->required();
  std::size_t gnp_n = 0;
  double gnp_p = 0;
  auto* gnp_cmd = gen_cmd->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  gnp_cmd->add_option("n", gnp_n, "vertices")->required();
  gnp_cmd->add_option("p", gnp_p, "edge probability")->required();
  gnp_cmd->add_option("--seed", seed, "random seed")->required();

  std::string corpus = "default";
  bool failures_only = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the property suite over a corpus");
  verify_cmd->add_option("--corpus", corpus, "default, quick or full")->required();
  verify_cmd->add_flag("--failures-only", failures_only, "print only failing checks");

  std::string sizes;
  std::size_t reps = 1;
  auto* bench_cmd = app.add_subcommand("bench", "time the solver, CSV to stdout");
  bench_cmd->add_option("--sizes", sizes, "comma-separated vertex counts")->required();
  bench_cmd->add_option("--seed", seed, "random seed")->required();
  bench_cmd->add_option("--reps", reps, "instances per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*solve_cmd) return run_solve(file, k);
    if (*kernel_cmd) return run_kernelize(file, k);
    if (*oracle_cmd) return run_oracle(file, tec);
    if (*planted_cmd) {
      std::cout << "c planted k " << planted_k << " extra " << extra << " seed " << seed << "\n"
                << write_dimacs(gen_planted(planted_k, extra, seed).graph);
      return kExitYes;
    }
    if (*gnp_cmd) {
      std::cout << "c gnp n " << gnp_n << " p " << gnp_p << " seed " << seed << "\n"
                << write_dimacs(gen_gnp(gnp_n, gnp_p, seed));
      return kExitYes;
    }
    if (*verify_cmd) return run_verify(corpus, failures_only);
    if (*bench_cmd) return run_bench(sizes, seed, reps);
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
