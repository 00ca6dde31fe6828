#include "maxcut/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "maxcut/errors.hpp"

namespace maxcut {

void validate_partition(const Graph& g, const Partition& p) {
  if (p.parent_num_nodes != g.num_nodes())
    throw InputError("partition built for a different graph");
  std::vector<char> seen(g.num_nodes(), 0);
  for (const auto& c : p.clusters) {
    if (c.empty()) throw InputError("empty cluster");
    for (int v : c) {
      if (v < 0 || v >= g.num_nodes()) throw InputError("cluster node out of range");
      if (seen[v]) throw InputError("node " + std::to_string(v) + " in two clusters");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < g.num_nodes(); ++v)
    if (!seen[v]) throw InputError("node " + std::to_string(v) + " not covered");
}

namespace {

// Canonical form: clusters sorted internally, then by smallest member.
Partition canonicalize(std::vector<std::vector<int>> clusters, int n) {
  for (auto& c : clusters) std::sort(c.begin(), c.end());
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition{std::move(clusters), n};
}

}  // namespace

double modularity(const Graph& g, const Partition& p) {
  const double two_m = 2.0 * g.total_weight();
  if (two_m == 0.0) return 0.0;
  std::vector<int> comm(g.num_nodes(), -1);
  for (std::size_t c = 0; c < p.clusters.size(); ++c)
    for (int v : p.clusters[c]) comm[v] = static_cast<int>(c);
  std::vector<double> degree(g.num_nodes(), 0.0);
  double intra = 0.0;
  for (const Edge& e : g.edges()) {
    degree[e.i] += e.w;
    degree[e.j] += e.w;
    if (comm[e.i] == comm[e.j]) intra += e.w;
  }
  std::vector<double> comm_degree(p.clusters.size(), 0.0);
  for (int v = 0; v < g.num_nodes(); ++v) comm_degree[comm[v]] += degree[v];
  double q = 2.0 * intra / two_m;
  for (double kc : comm_degree) q -= (kc / two_m) * (kc / two_m);
  return q;
}

Partition greedy_modularity(const Graph& g) {
  const int n = g.num_nodes();
  if (n < 1) throw ParameterError("greedy_modularity: empty graph");
  const double m = g.total_weight();

  // Union by community id = smallest member; e_ab tracks total crossing
  // weight between live communities.
  std::vector<int> comm(n);
  std::iota(comm.begin(), comm.end(), 0);
  std::vector<double> comm_degree(n, 0.0);
  std::map<std::pair<int, int>, double> between;
  for (const Edge& e : g.edges()) {
    comm_degree[e.i] += e.w;
    comm_degree[e.j] += e.w;
    between[{e.i, e.j}] += e.w;
  }

  if (m > 0.0) {
    const double two_m = 2.0 * m;
    while (!between.empty()) {
      // Largest gain; ties toward the smallest (a, b). Map order is (a, b)
      // ascending, so strict > keeps the first of equal gains.
      double best_gain = 0.0;
      std::pair<int, int> best{-1, -1};
      for (const auto& [ab, w] : between) {
        const double gain =
            w / m - comm_degree[ab.first] * comm_degree[ab.second] / (two_m * two_m) * 2.0;
        if (gain > best_gain) {
          best_gain = gain;
          best = ab;
        }
      }
      if (best.first < 0) break;  // no positive gain left

      const auto [a, b] = best;  // a < b; survivor is a
      for (int v = 0; v < n; ++v)
        if (comm[v] == b) comm[v] = a;
      comm_degree[a] += comm_degree[b];
      std::map<std::pair<int, int>, double> next;
      for (const auto& [ab, w] : between) {
        int x = ab.first == b ? a : ab.first;
        int y = ab.second == b ? a : ab.second;
        if (x == y) continue;  // absorbed into the merged community
        if (x > y) std::swap(x, y);
        next[{x, y}] += w;
      }
      between = std::move(next);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[comm[v]].push_back(v);
  std::vector<std::vector<int>> clusters;
  clusters.reserve(groups.size());
  for (auto& [id, nodes] : groups) clusters.push_back(std::move(nodes));
  return canonicalize(std::move(clusters), n);
}

namespace {

Graph induce(const Graph& g, const std::vector<int>& cluster, std::vector<int>* parent_nodes) {
  std::vector<int> nodes = cluster;
  std::sort(nodes.begin(), nodes.end());
  std::vector<int> local(g.num_nodes(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = static_cast<int>(k);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.i] >= 0 && local[e.j] >= 0) edges.push_back({local[e.i], local[e.j], e.w});
  if (parent_nodes) *parent_nodes = std::move(nodes);
  return Graph(static_cast<int>(cluster.size()), std::move(edges));
}

// Splits one oversized cluster into pieces of size <= n_max.
void split_cluster(const Graph& g, std::vector<int> cluster, int n_max,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cluster.size()) <= n_max) {
    out.push_back(std::move(cluster));
    return;
  }
  std::vector<int> parent_nodes;
  Graph sub = induce(g, cluster, &parent_nodes);
  Partition subparts = greedy_modularity(sub);
  if (subparts.clusters.size() <= 1) {
    // Modularity refused to split: balanced bisection by node index.
    const std::size_t half = (parent_nodes.size() + 1) / 2;
    std::vector<int> lo(parent_nodes.begin(), parent_nodes.begin() + half);
    std::vector<int> hi(parent_nodes.begin() + half, parent_nodes.end());
    split_cluster(g, std::move(lo), n_max, out);
    split_cluster(g, std::move(hi), n_max, out);
    return;
  }
  for (const auto& sc : subparts.clusters) {
    std::vector<int> parents;
    parents.reserve(sc.size());
    for (int v : sc) parents.push_back(parent_nodes[v]);
    split_cluster(g, std::move(parents), n_max, out);
  }
}

}  // namespace

Partition enforce_size_cap(const Graph& g, const Partition& p, int n_max) {
  if (n_max < 2) throw ParameterError("enforce_size_cap: n_max must be >= 2");
  validate_partition(g, p);
  std::vector<std::vector<int>> out;
  for (const auto& c : p.clusters) split_cluster(g, c, n_max, out);
  return canonicalize(std::move(out), g.num_nodes());
}

std::vector<Subgraph> induce_subgraphs(const Graph& g, const Partition& p) {
  validate_partition(g, p);
  std::vector<Subgraph> subs;
  subs.reserve(p.clusters.size());
  for (const auto& c : p.clusters) {
    Subgraph s;
    s.graph = induce(g, c, &s.parent_nodes);
    subs.push_back(std::move(s));
  }
  return subs;
}

double predicted_subgraph_count(double num_nodes, double qubit_cap, int levels) {
  const double na = std::pow(qubit_cap, levels);
  return num_nodes * (na - 1.0) / (na * (qubit_cap - 1.0));
}

int estimated_levels(double num_nodes, double qubit_cap) {
  const double raw = std::ceil(std::log(num_nodes) / std::log(qubit_cap) - 1e-12) - 1.0;
  return std::max(0, static_cast<int>(raw));
}

std::string serialize_partition(const Partition& p) {
  std::string out;
  for (const auto& c : p.clusters) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace maxcut
