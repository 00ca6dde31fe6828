#ifndef MAXCUT_GRAPH_HPP
#define MAXCUT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace maxcut {

/// Undirected weighted edge, stored canonically with i < j.
struct Edge {
  int i;
  int j;
  double w;
};

/// Immutable weighted undirected graph. Edges are kept as a flat list
/// sorted by (i, j); no self-loops, no duplicate pairs, all weights finite.
/// Adjacency is derived on demand.
class Graph {
public:
  Graph() = default;

  /// Canonicalizes (swaps endpoints so i < j, sorts) and validates.
  Graph(int num_nodes, std::vector<Edge> edges);

  int num_nodes() const noexcept { return num_nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Sum of all edge weights.
  double total_weight() const;

  /// 2|E| / (N (N-1)); 0 for N < 2.
  double density() const;

  /// True if any edge weight differs from 1.
  bool is_weighted() const;

  /// Neighbor lists (node, weight), derived from the edge list.
  std::vector<std::vector<std::pair<int, double>>> adjacency() const;

  bool operator==(const Graph& other) const = default;

private:
  int num_nodes_ = 0;
  std::vector<Edge> edges_;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.i == b.i && a.j == b.j && a.w == b.w;
}

/// +/-1 spin per node. Spin +1 corresponds to bit 0 in all basis-index
/// encodings used by the statevector simulator and the brute-force oracle.
struct CutAssignment {
  std::vector<std::int8_t> spins;

  CutAssignment() = default;
  explicit CutAssignment(std::vector<std::int8_t> s) : spins(std::move(s)) {}

  int size() const noexcept { return static_cast<int>(spins.size()); }

  /// Decodes a basis index: bit k of `bits` gives node k's spin (0 -> +1).
  static CutAssignment from_bits(std::uint64_t bits, int n);

  /// Inverse of from_bits; requires size() <= 64.
  std::uint64_t to_bits() const;

  /// Bit characters, node n-1 first (matches binary notation of to_bits()).
  std::string to_bitstring() const;

  CutAssignment flipped() const;

  bool operator==(const CutAssignment& other) const = default;
};

using CutValue = double;

/// Erdos-Renyi G(n, p): every unordered pair is included independently with
/// probability p_edge. Weights are 1 for unweighted graphs, otherwise
/// uniform in [0, 1). Deterministic for a fixed seed.
Graph erdos_renyi(int n, double p_edge, bool weighted, std::uint64_t seed);

/// Total weight of edges whose endpoints carry different spins.
CutValue cut_value(const Graph& g, const CutAssignment& a);

/// Exhaustive optimum over all 2^N assignments; guarded at N <= 24.
/// Ties break toward the smallest binary encoding.
std::pair<CutAssignment, CutValue> brute_force_maxcut(const Graph& g);

/// Edge-list text format: first line `nodes=<N>`, then `<i> <j> <w>` lines;
/// `#` starts a comment. parse(serialize(g)) == g.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

}  // namespace maxcut

#endif
