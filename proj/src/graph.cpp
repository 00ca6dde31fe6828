#include "maxcut/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "maxcut/errors.hpp"
#include "maxcut/kernels.hpp"
#include "maxcut/rng.hpp"

namespace maxcut {

Graph::Graph(int num_nodes, std::vector<Edge> edges) : num_nodes_(num_nodes) {
  if (num_nodes < 0) throw ParameterError("num_nodes must be non-negative");
  for (Edge& e : edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i == e.j) throw ParameterError("self-loop on node " + std::to_string(e.i));
    if (e.i < 0 || e.j >= num_nodes)
      throw ParameterError("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                           ") out of range for " + std::to_string(num_nodes) + " nodes");
    if (!std::isfinite(e.w)) throw ParameterError("non-finite edge weight");
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  for (std::size_t k = 1; k < edges.size(); ++k)
    if (edges[k].i == edges[k - 1].i && edges[k].j == edges[k - 1].j)
      throw ParameterError("duplicate edge (" + std::to_string(edges[k].i) + "," +
                           std::to_string(edges[k].j) + ")");
  edges_ = std::move(edges);
}

double Graph::total_weight() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.w;
  return s;
}

double Graph::density() const {
  if (num_nodes_ < 2) return 0.0;
  return 2.0 * static_cast<double>(edges_.size()) /
         (static_cast<double>(num_nodes_) * (num_nodes_ - 1));
}

bool Graph::is_weighted() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w != 1.0; });
}

std::vector<std::vector<std::pair<int, double>>> Graph::adjacency() const {
  std::vector<std::vector<std::pair<int, double>>> adj(num_nodes_);
  for (const Edge& e : edges_) {
    adj[e.i].emplace_back(e.j, e.w);
    adj[e.j].emplace_back(e.i, e.w);
  }
  return adj;
}

CutAssignment CutAssignment::from_bits(std::uint64_t bits, int n) {
  CutAssignment a;
  a.spins.resize(n);
  for (int k = 0; k < n; ++k) a.spins[k] = (bits >> k) & 1u ? -1 : +1;
  return a;
}

std::uint64_t CutAssignment::to_bits() const {
  std::uint64_t bits = 0;
  for (int k = 0; k < size(); ++k)
    if (spins[k] < 0) bits |= std::uint64_t(1) << k;
  return bits;
}

std::string CutAssignment::to_bitstring() const {
  std::string s;
  s.reserve(spins.size());
  for (int k = size() - 1; k >= 0; --k) s.push_back(spins[k] < 0 ? '1' : '0');
  return s;
}

CutAssignment CutAssignment::flipped() const {
  CutAssignment a = *this;
  for (auto& s : a.spins) s = -s;
  return a;
}

Graph erdos_renyi(int n, double p_edge, bool weighted, std::uint64_t seed) {
  if (n < 1) throw ParameterError("erdos_renyi: n must be >= 1");
  if (!(p_edge >= 0.0 && p_edge <= 1.0))
    throw ParameterError("erdos_renyi: p_edge must be in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  // Fixed pair order (i ascending, then j); the weight draw happens only for
  // included edges, so the stream layout is part of the determinism contract.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < p_edge) edges.push_back({i, j, weighted ? rng.uniform01() : 1.0});
  return Graph(n, std::move(edges));
}

CutValue cut_value(const Graph& g, const CutAssignment& a) {
  if (a.size() != g.num_nodes())
    throw DimensionError("cut_value: assignment length " + std::to_string(a.size()) +
                         " != num_nodes " + std::to_string(g.num_nodes()));
  double cut = 0.0;
  for (const Edge& e : g.edges())
    if (a.spins[e.i] != a.spins[e.j]) cut += e.w;
  return cut;
}

std::pair<CutAssignment, CutValue> brute_force_maxcut(const Graph& g) {
  const int n = g.num_nodes();
  if (n > 24) throw SizeError("brute_force_maxcut: N = " + std::to_string(n) + " exceeds cap 24");
  const std::uint64_t dim = std::uint64_t(1) << n;
  auto [best_bits, best_cut] = kernels::brute_force_scan(g, dim);
  return {CutAssignment::from_bits(best_bits, n), best_cut};
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (n < 0) {
      std::string first;
      if (!(ls >> first)) continue;  // blank / comment before header
      if (first.rfind("nodes=", 0) != 0) throw ParseError(lineno, "expected `nodes=<N>` header");
      try {
        n = std::stoi(first.substr(6));
      } catch (const std::exception&) {
        throw ParseError(lineno, "invalid node count");
      }
      if (n < 0) throw ParseError(lineno, "negative node count");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens after header");
      continue;
    }
    long long i, j;
    double w;
    if (!(ls >> i)) continue;  // blank line
    if (!(ls >> j >> w)) throw ParseError(lineno, "expected `<i> <j> <w>`");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
    if (i == j) throw ParseError(lineno, "self-loop on node " + std::to_string(i));
    if (i < 0 || j < 0 || i >= n || j >= n) throw ParseError(lineno, "node index out of range");
    if (!std::isfinite(w)) throw ParseError(lineno, "non-finite weight");
    Edge e{static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j)), w};
    for (const Edge& prev : edges)
      if (prev.i == e.i && prev.j == e.j)
        throw ParseError(lineno, "duplicate edge (" + std::to_string(e.i) + "," +
                                     std::to_string(e.j) + ")");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(lineno, "missing `nodes=<N>` header");
  return Graph(n, std::move(edges));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string serialize_graph(const Graph& g) {
  std::string out = "nodes=" + std::to_string(g.num_nodes()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.i) + " " + std::to_string(e.j) + " " + format_double(e.w) + "\n";
  return out;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file: " + path);
  out << serialize_graph(g);
}

}  // namespace maxcut
