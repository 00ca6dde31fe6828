#ifndef MAXCUT_PARTITION_HPP
#define MAXCUT_PARTITION_HPP

#include <string>
#include <vector>

#include "maxcut/graph.hpp"

namespace maxcut {

/// Node-disjoint clusters covering {0..N-1}. Each cluster is sorted
/// ascending and clusters are ordered by their smallest member.
struct Partition {
  std::vector<std::vector<int>> clusters;
  int parent_num_nodes = 0;

  std::size_t size() const noexcept { return clusters.size(); }
};

/// Induced subgraph of one cluster. parent_nodes maps local index ->
/// parent node index (ascending); edges are the parent's intra-cluster
/// edges with weights preserved.
struct Subgraph {
  std::vector<int> parent_nodes;
  Graph graph;
};

/// Weighted Newman modularity of a partition (resolution 1). 0 when the
/// graph has no edges.
double modularity(const Graph& g, const Partition& p);

/// Agglomerative (CNM) community detection: start from singletons,
/// repeatedly apply the merge with the largest positive modularity gain.
/// Merge ties break toward the smallest (cluster-id, cluster-id) pair.
Partition greedy_modularity(const Graph& g);

/// Re-partitions oversized clusters by greedy modularity on their induced
/// subgraphs, recursively; when modularity refuses to split a cluster it is
/// bisected by ascending node index. Idempotent.
Partition enforce_size_cap(const Graph& g, const Partition& p, int n_max);

/// One Subgraph per cluster, cluster order preserved. Cross-cluster edges
/// are excluded (the merge graph carries them).
std::vector<Subgraph> induce_subgraphs(const Graph& g, const Partition& p);

/// Throws InputError unless clusters are disjoint, non-empty, and cover
/// all nodes of g.
void validate_partition(const Graph& g, const Partition& p);

/// ~ sum_{k=1..a} N / n^k = N (n^a - 1) / (n^a (n - 1)): sub-graph count of
/// the divide-and-conquer recursion over `a` levels with qubit cap n.
double predicted_subgraph_count(double num_nodes, double qubit_cap, int levels);

/// ceil(log_n N) - 1, clamped at 0: levels until the coarse graph fits in
/// n qubits.
int estimated_levels(double num_nodes, double qubit_cap);

/// One line per cluster: space-separated sorted node indices.
std::string serialize_partition(const Partition& p);

}  // namespace maxcut

#endif
