#include "maxcut/merge.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <utility>

#include "maxcut/errors.hpp"
#include "maxcut/parallel.hpp"
#include "maxcut/rng.hpp"
#include "maxcut/solvers.hpp"

namespace maxcut {

namespace {

constexpr std::uint64_t kTagLevel = 0xC1;
constexpr std::uint64_t kTagMerge = 0xC2;

}  // namespace

/// CNM plus the size cap, then pairs of smallest clusters merged until
/// K <= ceil(N/2), which bounds the recursion depth. Whenever that bound
/// triggers there are enough singleton clusters to pair (2K - N of them),
/// so the size cap stays respected for any n_max >= 2.
Partition qaoa2_partition(const Graph& g, int n_max) {
  Partition part = enforce_size_cap(g, greedy_modularity(g), n_max);
  const std::size_t max_clusters = std::size_t((g.num_nodes() + 1) / 2);
  auto smaller = [&](std::size_t x, std::size_t y) {
    const auto& cx = part.clusters[x];
    const auto& cy = part.clusters[y];
    return cx.size() != cy.size() ? cx.size() < cy.size() : cx.front() < cy.front();
  };
  while (part.size() > max_clusters) {
    // Merge the two smallest clusters (ties: smallest first member).
    std::size_t a = 0, b = 0;
    for (std::size_t c = 1; c < part.clusters.size(); ++c) {
      if (smaller(c, a)) {
        b = a;
        a = c;
      } else if (b == a || smaller(c, b)) {
        b = c;
      }
    }
    auto& ca = part.clusters[a];
    const auto& cb = part.clusters[b];
    ca.insert(ca.end(), cb.begin(), cb.end());
    std::sort(ca.begin(), ca.end());
    part.clusters.erase(part.clusters.begin() + b);
    std::sort(part.clusters.begin(), part.clusters.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
  }
  return part;
}

namespace {

SolveRecord solve_direct(const Graph& g, const SolverPolicy& policy, std::uint64_t seed) {
  switch (policy.kind) {
    case PolicyKind::all_qaoa:
      return solve_with(g, SolverKind::qaoa, policy.qaoa_config_for(g), policy.gw_options, seed);
    case PolicyKind::all_gw:
      return solve_with(g, SolverKind::gw, policy.qaoa_defaults, policy.gw_options, seed);
    case PolicyKind::best_of:
      return select_best(
          solve_with(g, SolverKind::qaoa, policy.qaoa_config_for(g), policy.gw_options, seed),
          solve_with(g, SolverKind::gw, policy.qaoa_defaults, policy.gw_options, seed));
    case PolicyKind::rule_based:
      return solve_with(g, policy.match(g).solver, policy.qaoa_config_for(g), policy.gw_options,
                        seed);
  }
  throw ParameterError("solve_direct: unhandled policy kind");
}

SolveRecord solve_recursive(const Graph& g, const SolverPolicy& policy, const Qaoa2Options& opts,
                            std::uint64_t seed, int level, std::vector<LevelTrace>& trace);

/// Merge graphs are solved exactly while small, and by the classical
/// pipeline beyond that (the level policy is GW from level 1 on).
SolveRecord solve_merge_graph(const Graph& mg, const Qaoa2Options& opts, std::uint64_t seed,
                              int level, std::vector<LevelTrace>& trace) {
  if (mg.num_nodes() <= std::min(opts.brute_force_merge_cap, 24)) {
    auto [a, cut] = brute_force_maxcut(mg);
    SolveRecord rec;
    rec.solver = SolverKind::exact;
    rec.assignment = std::move(a);
    rec.cut = cut;
    rec.metadata = {{"method", "brute_force"}};
    return rec;
  }
  SolverPolicy gw_policy;
  gw_policy.kind = PolicyKind::all_gw;
  gw_policy.qaoa_defaults = opts.policy.qaoa_defaults;
  gw_policy.gw_options = opts.policy.gw_options;
  return solve_recursive(mg, gw_policy, opts, seed, level, trace);
}

SolveRecord solve_recursive(const Graph& g, const SolverPolicy& policy, const Qaoa2Options& opts,
                            std::uint64_t seed, int level, std::vector<LevelTrace>& trace) {
  if (g.num_nodes() <= opts.n_max || g.num_edges() == 0) return solve_direct(g, policy, seed);

  const Partition part = qaoa2_partition(g, opts.n_max);
  const std::vector<Subgraph> subgraphs = induce_subgraphs(g, part);
  const TaskPlan task_plan = plan(subgraphs, policy, derive_seed(seed, {kTagLevel, std::uint64_t(level)}));
  const int workers = opts.workers > 0 ? opts.workers : default_worker_count(task_plan.tasks.size());
  const std::vector<SolveRecord> records = dispatch(task_plan, workers);

  const MergeGraph mg = build_merge_graph(g, part, records);
  const SolveRecord merge_rec =
      solve_merge_graph(mg.graph, opts, derive_seed(seed, {kTagMerge, std::uint64_t(level)}),
                        level + 1, trace);

  // Always consider the all-(+1) merge assignment (cut 0): flipping is then
  // never worse than leaving every sub-solution in place.
  CutAssignment merge_assignment = merge_rec.assignment;
  double merge_cut = cut_value(mg.graph, merge_assignment);
  if (!(merge_cut > 0.0)) {
    merge_assignment = CutAssignment::from_bits(0, mg.graph.num_nodes());
    merge_cut = 0.0;
  }

  std::vector<CutAssignment> locals;
  locals.reserve(records.size());
  for (const SolveRecord& r : records) locals.push_back(r.assignment);
  CutAssignment global = apply_merge_solution(locals, mg, merge_assignment);

  SolveRecord rec;
  rec.solver = SolverKind::qaoa2;
  rec.assignment = std::move(global);
  rec.cut = cut_value(g, rec.assignment);

  LevelTrace lt;
  lt.level = level;
  lt.num_clusters = static_cast<int>(part.size());
  for (const auto& cluster : part.clusters) lt.cluster_sizes.push_back(static_cast<int>(cluster.size()));
  for (const SolveRecord& r : records) {
    lt.solver_per_cluster.push_back(r.solver);
    lt.intra_cuts.push_back(r.cut);
  }
  lt.base_inter_cut = mg.base_inter_cut;
  lt.merge_cut = merge_cut;
  lt.global_cut = rec.cut;
  trace.push_back(std::move(lt));
  return rec;
}

}  // namespace

MergeGraph build_merge_graph(const Graph& g, const Partition& p,
                             const std::vector<SolveRecord>& subs) {
  validate_partition(g, p);
  if (subs.size() != p.size())
    throw InputError("merge graph: expected one solve record per cluster");

  std::vector<int> cluster_of(g.num_nodes(), -1);
  std::vector<int> local_of(g.num_nodes(), -1);
  for (std::size_t c = 0; c < p.clusters.size(); ++c) {
    if (subs[c].assignment.size() != static_cast<int>(p.clusters[c].size()))
      throw InputError("merge graph: record " + std::to_string(c) +
                       " does not match its cluster size");
    for (std::size_t l = 0; l < p.clusters[c].size(); ++l) {
      cluster_of[p.clusters[c][l]] = static_cast<int>(c);
      local_of[p.clusters[c][l]] = static_cast<int>(l);
    }
  }

  MergeGraph mg;
  mg.cluster_map = p.clusters;
  std::map<std::pair<int, int>, double> weights;
  for (const Edge& e : g.edges()) {
    const int ca = cluster_of[e.i];
    const int cb = cluster_of[e.j];
    if (ca == cb) continue;
    const int si = subs[ca].assignment.spins[local_of[e.i]];
    const int sj = subs[cb].assignment.spins[local_of[e.j]];
    const bool in_cut = si != sj;
    const std::pair<int, int> key{std::min(ca, cb), std::max(ca, cb)};
    weights[key] += in_cut ? -e.w : +e.w;
    if (in_cut) mg.base_inter_cut += e.w;
  }
  std::vector<Edge> edges;
  edges.reserve(weights.size());
  for (const auto& [pair, w] : weights) edges.push_back({pair.first, pair.second, w});
  mg.graph = Graph(static_cast<int>(p.size()), std::move(edges));
  return mg;
}

CutAssignment apply_merge_solution(const std::vector<CutAssignment>& parent_assignments,
                                   const MergeGraph& mg, const CutAssignment& merge_assignment) {
  const int k = mg.graph.num_nodes();
  if (merge_assignment.size() != k)
    throw InputError("apply_merge_solution: merge assignment length differs from cluster count");
  if (parent_assignments.size() != std::size_t(k))
    throw InputError("apply_merge_solution: expected one local assignment per cluster");

  int n = 0;
  for (const auto& nodes : mg.cluster_map)
    for (int node : nodes) n = std::max(n, node + 1);

  CutAssignment global;
  global.spins.assign(n, 0);
  for (int c = 0; c < k; ++c) {
    const auto& nodes = mg.cluster_map[c];
    if (parent_assignments[c].size() != static_cast<int>(nodes.size()))
      throw InputError("apply_merge_solution: local assignment " + std::to_string(c) +
                       " does not match its cluster");
    const int flip = merge_assignment.spins[c];
    for (std::size_t l = 0; l < nodes.size(); ++l)
      global.spins[nodes[l]] = static_cast<std::int8_t>(parent_assignments[c].spins[l] * flip);
  }
  return global;
}

SolveRecord qaoa_squared(const Graph& g, const Qaoa2Options& opts, std::uint64_t seed,
                         std::vector<LevelTrace>* trace_out) {
  if (opts.n_max < 2) throw ParameterError("qaoa2: n_max must be >= 2");
  if (g.num_nodes() < 1) throw ParameterError("qaoa2: graph has no nodes");

  const auto start = std::chrono::steady_clock::now();
  std::vector<LevelTrace> trace;
  SolveRecord rec = solve_recursive(g, opts.policy, opts, seed, 0, trace);

  // The degenerate recursion (N <= n_max) is exactly a direct solve; keep
  // that record untouched. Otherwise wrap the composite result.
  if (!trace.empty()) {
    std::sort(trace.begin(), trace.end(),
              [](const LevelTrace& x, const LevelTrace& y) { return x.level < y.level; });
    nlohmann::json levels = nlohmann::json::array();
    for (const LevelTrace& lt : trace) levels.push_back(lt.to_json());
    rec.metadata = {{"n_max", opts.n_max},
                    {"policy", to_string(opts.policy.kind)},
                    {"seed", seed},
                    {"levels", levels}};
    rec.solver = SolverKind::qaoa2;
    rec.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  if (trace_out) *trace_out = std::move(trace);
  return rec;
}

nlohmann::json LevelTrace::to_json() const {
  std::vector<std::string> solvers;
  solvers.reserve(solver_per_cluster.size());
  for (SolverKind k : solver_per_cluster) solvers.push_back(to_string(k));
  return nlohmann::json{
      {"level", level},
      {"num_clusters", num_clusters},
      {"cluster_sizes", cluster_sizes},
      {"solver_per_cluster", solvers},
      {"intra_cuts", intra_cuts},
      {"base_inter_cut", base_inter_cut},
      {"merge_cut", merge_cut},
      {"global_cut", global_cut},
  };
}

std::string emit_level_trace_csv(const std::vector<LevelTrace>& levels) {
  std::ostringstream out;
  out << "level,num_clusters,cluster_sizes,solver_per_cluster,intra_cuts,"
         "base_inter_cut,merge_cut,global_cut\n";
  for (const LevelTrace& lt : levels) {
    out << lt.level << ',' << lt.num_clusters << ',';
    for (std::size_t i = 0; i < lt.cluster_sizes.size(); ++i)
      out << (i ? ";" : "") << lt.cluster_sizes[i];
    out << ',';
    for (std::size_t i = 0; i < lt.solver_per_cluster.size(); ++i)
      out << (i ? ";" : "") << to_string(lt.solver_per_cluster[i]);
    out << ',';
    for (std::size_t i = 0; i < lt.intra_cuts.size(); ++i)
      out << (i ? ";" : "") << format_double(lt.intra_cuts[i]);
    out << ',' << format_double(lt.base_inter_cut) << ',' << format_double(lt.merge_cut) << ','
        << format_double(lt.global_cut) << '\n';
  }
  return out.str();
}

}  // namespace maxcut
