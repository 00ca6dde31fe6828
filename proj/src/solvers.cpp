#include "maxcut/solvers.hpp"

#include <chrono>

#include "maxcut/errors.hpp"
#include "maxcut/rng.hpp"

namespace maxcut {

namespace {

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::qaoa: return "qaoa";
    case SolverKind::gw: return "gw";
    case SolverKind::random: return "random";
    case SolverKind::exact: return "exact";
    case SolverKind::qaoa2: return "qaoa2";
  }
  return "unknown";
}

SolverKind solver_kind_from_string(const std::string& name) {
  if (name == "qaoa") return SolverKind::qaoa;
  if (name == "gw") return SolverKind::gw;
  if (name == "random") return SolverKind::random;
  if (name == "exact") return SolverKind::exact;
  if (name == "qaoa2") return SolverKind::qaoa2;
  throw ParameterError("unknown solver: " + name);
}

nlohmann::json SolveRecord::to_json() const {
  return nlohmann::json{
      {"solver", to_string(solver)},
      {"bitstring", assignment.to_bitstring()},
      {"cut", cut},
      {"elapsed_seconds", elapsed_seconds},
      {"metadata", metadata},
  };
}

CutAssignment uniform_random_assignment(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("random assignment: graph has no nodes");
  Rng rng(seed);
  CutAssignment a;
  a.spins.resize(n);
  for (int i = 0; i < n; ++i) a.spins[i] = (rng.next_u64() & 1u) ? -1 : +1;
  return a;
}

int one_exchange_local_search(const Graph& g, CutAssignment& a) {
  if (a.size() != g.num_nodes())
    throw DimensionError("local search: assignment does not match the graph");
  const auto adj = g.adjacency();
  int flips = 0;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < g.num_nodes(); ++i) {
      // Gain of flipping node i: sum over incident edges of w * s_i * s_j
      // (cut edges become uncut and vice versa).
      double gain = 0.0;
      for (const auto& [j, w] : adj[i]) gain += w * a.spins[i] * a.spins[j];
      if (gain > 0.0) {
        a.spins[i] = static_cast<std::int8_t>(-a.spins[i]);
        ++flips;
        improved = true;
      }
    }
  }
  return flips;
}

SolveRecord random_baseline(const Graph& g, std::uint64_t seed) {
  Stopwatch timer;
  CutAssignment a = uniform_random_assignment(g.num_nodes(), seed);
  const double start_cut = cut_value(g, a);
  const int flips = one_exchange_local_search(g, a);
  SolveRecord rec;
  rec.solver = SolverKind::random;
  rec.assignment = std::move(a);
  rec.cut = cut_value(g, rec.assignment);
  rec.elapsed_seconds = timer.seconds();
  rec.metadata = {{"seed", seed}, {"start_cut", start_cut}, {"flips", flips}};
  return rec;
}

SolveRecord uniform_baseline(const Graph& g, std::uint64_t seed) {
  Stopwatch timer;
  SolveRecord rec;
  rec.solver = SolverKind::random;
  rec.assignment = uniform_random_assignment(g.num_nodes(), seed);
  rec.cut = cut_value(g, rec.assignment);
  rec.elapsed_seconds = timer.seconds();
  rec.metadata = {{"seed", seed}, {"local_search", false}};
  return rec;
}

SolveRecord solve_with(const Graph& g, SolverKind kind, const QaoaConfig& qaoa_cfg,
                       const GwOptions& gw_opts, std::uint64_t seed) {
  Stopwatch timer;
  SolveRecord rec;
  rec.solver = kind;
  switch (kind) {
    case SolverKind::qaoa: {
      QaoaConfig cfg = qaoa_cfg;
      cfg.seed = seed;
      QaoaResult r = qaoa_solve(g, cfg);
      rec.assignment = std::move(r.assignment);
      rec.cut = r.cut;
      rec.metadata = r.to_json();
      rec.metadata.erase("trace");  // keep records compact
      break;
    }
    case SolverKind::gw: {
      GwResult r = gw_solve(g, gw_opts, seed);
      rec.assignment = std::move(r.best_assignment);
      rec.cut = r.best_cut;
      rec.metadata = r.to_json();
      break;
    }
    case SolverKind::random:
      return random_baseline(g, seed);
    case SolverKind::exact: {
      auto [a, cut] = brute_force_maxcut(g);
      rec.assignment = std::move(a);
      rec.cut = cut;
      rec.metadata = {{"method", "brute_force"}};
      break;
    }
    case SolverKind::qaoa2:
      throw ParameterError("solve_with: qaoa2 requires the merge engine entry point");
  }
  rec.elapsed_seconds = timer.seconds();
  return rec;
}

}  // namespace maxcut
