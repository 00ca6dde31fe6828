// Command-line experiment driver: graph generation, single solves, the
// QAOA-in-QAOA pipeline, the (p, rhobeg) grid search, and the multi-solver
// size comparison. Exit codes: 0 success, 2 parameter error, 3 size/cap
// error, 4 solver numeric error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxcut/errors.hpp"
#include "maxcut/experiment.hpp"
#include "maxcut/graph.hpp"
#include "maxcut/merge.hpp"
#include "maxcut/orchestrator.hpp"
#include "maxcut/parallel.hpp"
#include "maxcut/solvers.hpp"

namespace fs = std::filesystem;
using namespace maxcut;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw InputError("write failed: " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SolverPolicy resolve_policy(const std::string& value) {
  if (value == "all_qaoa" || value == "all_gw" || value == "best_of")
    return SolverPolicy::named(value);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(value));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("policy file " + value + ": " + e.what());
  }
  return SolverPolicy::from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MaxCut solvers and experiments: QAOA statevector simulation, "
               "Goemans-Williamson rounding, and QAOA-in-QAOA divide and conquer"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "Generate an Erdos-Renyi graph file");
  int gen_nodes = 0;
  double gen_p_edge = 0.0;
  bool gen_weighted = false;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--nodes", gen_nodes, "Node count")->required();
  gen->add_option("--p-edge", gen_p_edge, "Edge probability")->required();
  gen->add_flag("--weighted", gen_weighted, "Uniform [0,1) edge weights instead of 1");
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--out", gen_out, "Output graph file")->required();
  gen->callback([&] {
    const Graph g = erdos_renyi(gen_nodes, gen_p_edge, gen_weighted, gen_seed);
    save_graph(g, gen_out);
    std::cout << "wrote " << gen_out << ": " << g.num_nodes() << " nodes, " << g.num_edges()
              << " edges, density " << format_double(g.density()) << "\n";
  });

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "Solve one graph with a single solver");
  std::string solve_graph, solve_solver = "qaoa", solve_out;
  int solve_p = 6, solve_shots = 4096;
  double solve_rhobeg = 0.5;
  int solve_iters = -1;
  int solve_gw_rounds = 30, solve_gw_restarts = 3;
  std::uint64_t solve_seed = 1;
  solve->add_option("--graph", solve_graph, "Graph file")->required();
  solve->add_option("--solver", solve_solver, "qaoa | gw | random | exact");
  solve->add_option("--p", solve_p, "QAOA layer count");
  solve->add_option("--rhobeg", solve_rhobeg, "Initial trust radius");
  solve->add_option("--shots", solve_shots, "Samples per expectation");
  solve->add_option("--iters", solve_iters, "Objective evaluation budget (-1 = schedule)");
  solve->add_option("--gw-rounds", solve_gw_rounds, "Hyperplane roundings");
  solve->add_option("--gw-restarts", solve_gw_restarts, "SDP restarts");
  solve->add_option("--seed", solve_seed, "PRNG seed");
  solve->add_option("--out", solve_out, "Write the solve record as JSON");
  solve->callback([&] {
    const Graph g = load_graph(solve_graph);
    QaoaConfig cfg;
    cfg.p = solve_p;
    cfg.rhobeg = solve_rhobeg;
    cfg.shots = solve_shots;
    if (solve_iters >= 0) cfg.max_iters = solve_iters;
    GwOptions gw;
    gw.rounds = solve_gw_rounds;
    gw.restarts = solve_gw_restarts;
    const SolveRecord rec =
        solve_with(g, solver_kind_from_string(solve_solver), cfg, gw, solve_seed);
    std::cout << "solver=" << to_string(rec.solver) << " cut=" << format_double(rec.cut)
              << " bitstring=" << rec.assignment.to_bitstring() << "\n";
    if (!solve_out.empty()) write_file(solve_out, rec.to_json().dump(2) + "\n");
  });

  // ---- qaoa2 ----
  auto* qaoa2 = app.add_subcommand("qaoa2", "Divide-and-conquer solve (QAOA-in-QAOA)");
  std::string q2_graph, q2_policy = "best_of", q2_out, q2_dump_partition;
  int q2_n_max = 8, q2_workers = 0, q2_p = 6, q2_shots = 4096;
  int q2_iters = -1;
  double q2_rhobeg = 0.5;
  std::uint64_t q2_seed = 1;
  qaoa2->add_option("--graph", q2_graph, "Graph file")->required();
  qaoa2->add_option("--n-max", q2_n_max, "Sub-graph qubit cap")->required();
  qaoa2->add_option("--policy", q2_policy, "all_qaoa | all_gw | best_of | policy JSON file");
  qaoa2->add_option("--seed", q2_seed, "PRNG seed");
  qaoa2->add_option("--workers", q2_workers, "Worker pool size (0 = hardware)");
  qaoa2->add_option("--p", q2_p, "QAOA layer count for sub-solves");
  qaoa2->add_option("--rhobeg", q2_rhobeg, "Initial trust radius for sub-solves");
  qaoa2->add_option("--shots", q2_shots, "Samples per expectation");
  qaoa2->add_option("--iters", q2_iters, "Objective evaluation budget (-1 = schedule)");
  qaoa2->add_option("--out", q2_out, "Write the per-level trace as CSV");
  qaoa2->add_option("--dump-partition", q2_dump_partition, "Write the level-0 partition");
  qaoa2->callback([&] {
    const Graph g = load_graph(q2_graph);
    Qaoa2Options opts;
    opts.n_max = q2_n_max;
    opts.policy = resolve_policy(q2_policy);
    opts.policy.qaoa_defaults.p = q2_p;
    opts.policy.qaoa_defaults.rhobeg = q2_rhobeg;
    opts.policy.qaoa_defaults.shots = q2_shots;
    if (q2_iters >= 0) opts.policy.qaoa_defaults.max_iters = q2_iters;
    opts.workers = q2_workers;
    if (!q2_dump_partition.empty())
      write_file(q2_dump_partition, serialize_partition(qaoa2_partition(g, q2_n_max)));
    std::vector<LevelTrace> trace;
    const SolveRecord rec = qaoa_squared(g, opts, q2_seed, &trace);
    std::cout << "policy=" << to_string(opts.policy.kind) << " n_max=" << q2_n_max
              << " levels=" << trace.size() << " cut=" << format_double(rec.cut)
              << " bitstring=" << rec.assignment.to_bitstring() << "\n";
    if (!q2_out.empty()) write_file(q2_out, emit_level_trace_csv(trace));
  });

  // ---- gridsearch ----
  auto* grid = app.add_subcommand("gridsearch", "(p, rhobeg) grid search: QAOA vs GW");
  std::string grid_config, grid_out_dir = ".";
  int grid_workers = 0;
  grid->add_option("--config", grid_config, "GridSpec JSON file (defaults when omitted)");
  grid->add_option("--out-dir", grid_out_dir, "Output directory")->required();
  grid->add_option("--workers", grid_workers, "Worker pool size (0 = hardware)");
  grid->callback([&] {
    GridSpec spec;
    if (!grid_config.empty()) {
      try {
        spec = GridSpec::from_json(nlohmann::json::parse(read_file(grid_config)));
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError("grid config " + grid_config + ": " + e.what());
      }
    }
    const GridReport report = grid_search(spec, grid_workers);
    for (const auto& [name, content] : gridsearch_documents(report))
      write_file(fs::path(grid_out_dir) / name, content);
    for (const GridClassReport& cls : report.classes) {
      std::cout << (cls.weighted_class ? "weighted" : "unweighted") << ": cases=" << cls.num_cases
                << " strict_win=" << format_double(cls.proportion_strictly_better)
                << " band_95_100=" << format_double(cls.proportion_95_100);
      if (cls.has_winner)
        std::cout << " winner_cell=(p=" << cls.winner_cell.p
                  << ", rhobeg=" << format_double(cls.winner_cell.rhobeg) << ")";
      std::cout << "\n";
    }
    std::cout << "wrote " << (fs::path(grid_out_dir) / "gridsearch.csv").string() << "\n";
  });

  // ---- compare ----
  auto* compare = app.add_subcommand("compare", "Size sweep: QAOA2 policies vs full-graph GW");
  CompareSpec cmp;
  std::string cmp_out_dir = ".";
  compare->add_option("--sizes", cmp.node_counts, "Node counts (comma separated)")
      ->delimiter(',');
  compare->add_option("--p-edge", cmp.edge_prob, "Edge probability");
  compare->add_option("--n-max", cmp.n_max, "Sub-graph qubit cap");
  compare->add_option("--seed", cmp.seed, "PRNG seed");
  compare->add_option("--workers", cmp.workers, "Worker pool size (0 = hardware)");
  compare->add_flag("--uniform", cmp.uniform_baseline,
                    "Bare uniform random baseline (no local search)");
  compare->add_option("--out-dir", cmp_out_dir, "Output directory")->required();
  compare->callback([&] {
    const std::vector<CompareRow> rows = compare_experiment(cmp);
    for (const auto& [name, content] : compare_documents(rows))
      write_file(fs::path(cmp_out_dir) / name, content);
    for (const CompareRow& r : rows) {
      std::cout << r.nodes << " " << r.policy << ": cut="
                << (r.cut ? format_double(*r.cut) : std::string("missing"));
      if (r.ratio) std::cout << " ratio=" << format_double(*r.ratio);
      std::cout << "\n";
    }
    std::cout << "wrote " << (fs::path(cmp_out_dir) / "compare.csv").string() << "\n";
  });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are parameter errors
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case Error::Kind::parameter: return 2;
      case Error::Kind::size: return 3;
      case Error::Kind::numeric: return 4;
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
