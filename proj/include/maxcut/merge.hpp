#ifndef MAXCUT_MERGE_HPP
#define MAXCUT_MERGE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxcut/graph.hpp"
#include "maxcut/orchestrator.hpp"
#include "maxcut/partition.hpp"
#include "maxcut/solve_record.hpp"

namespace maxcut {

/// Coarse graph with one node per cluster. Signed weights: every parent
/// edge crossing clusters A,B contributes -w if its endpoints currently
/// disagree (edge in the cut) and +w if they agree. base_inter_cut is the
/// inter-cluster cut value of the unflipped sub-solutions.
struct MergeGraph {
  Graph graph;
  std::vector<std::vector<int>> cluster_map;  // cluster node -> parent nodes
  double base_inter_cut = 0.0;
};

/// One recursion level of qaoa_squared, for reporting.
struct LevelTrace {
  int level = 0;
  int num_clusters = 0;
  std::vector<int> cluster_sizes;
  std::vector<SolverKind> solver_per_cluster;
  std::vector<double> intra_cuts;
  double base_inter_cut = 0.0;
  double merge_cut = 0.0;
  double global_cut = 0.0;

  nlohmann::json to_json() const;
};

/// CSV document of a level trace (lists are ';'-joined inside cells):
/// level,num_clusters,cluster_sizes,solver_per_cluster,intra_cuts,
/// base_inter_cut,merge_cut,global_cut.
std::string emit_level_trace_csv(const std::vector<LevelTrace>& levels);

struct Qaoa2Options {
  int n_max = 8;  // sub-problems at most this many nodes/qubits
  SolverPolicy policy;
  int workers = 0;  // 0 = default_worker_count
  int brute_force_merge_cap = 20;
};

/// The partition qaoa_squared uses at one recursion level: greedy
/// modularity, then the n_max size cap, then smallest-pair cluster merging
/// until K <= ceil(N/2) (which bounds the recursion depth).
Partition qaoa2_partition(const Graph& g, int n_max);

MergeGraph build_merge_graph(const Graph& g, const Partition& p,
                             const std::vector<SolveRecord>& subs);

/// Flips every cluster whose merge spin is -1; output indexed by parent
/// node order.
CutAssignment apply_merge_solution(const std::vector<CutAssignment>& parent_assignments,
                                   const MergeGraph& mg, const CutAssignment& merge_assignment);

/// QAOA-in-QAOA: partition, solve sub-graphs through the orchestrator,
/// solve the signed merge graph (brute force at K <= brute_force_merge_cap,
/// otherwise recursively with a GW policy), flip, recurse. The policy
/// applies to the first level only; the returned cut is recomputed on g.
/// metadata carries the per-level trace, also written to *trace_out when
/// given.
SolveRecord qaoa_squared(const Graph& g, const Qaoa2Options& opts, std::uint64_t seed,
                         std::vector<LevelTrace>* trace_out = nullptr);

}  // namespace maxcut

#endif
