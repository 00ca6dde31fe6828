#ifndef MAXCUT_GW_HPP
#define MAXCUT_GW_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "maxcut/graph.hpp"

namespace maxcut {

/// Unit vectors of the semidefinite relaxation: one row of dimension `dim`
/// per node, stored row-major. The induced Gram matrix has unit diagonal.
struct GramFactor {
  int rows = 0;
  int dim = 0;
  std::vector<double> data;

  GramFactor() = default;
  GramFactor(int rows_, int dim_) : rows(rows_), dim(dim_), data(std::size_t(rows_) * dim_, 0.0) {}

  std::span<double> row(int i) { return {data.data() + std::size_t(i) * dim, std::size_t(dim)}; }
  std::span<const double> row(int i) const {
    return {data.data() + std::size_t(i) * dim, std::size_t(dim)};
  }

  double dot(int a, int b) const {
    const double* pa = data.data() + std::size_t(a) * dim;
    const double* pb = data.data() + std::size_t(b) * dim;
    double s = 0.0;
    for (int d = 0; d < dim; ++d) s += pa[d] * pb[d];
    return s;
  }
};

struct GwOptions {
  double tol = 1e-6;          // relative objective improvement per sweep
  int restarts = 3;           // random restarts of the nonconvex factorization
  int rounds = 30;            // hyperplane slicings
  int max_sweeps_per_node = 50;  // sweep cap = 50 * N
};

struct SdpSolution {
  GramFactor factor;
  double objective = 0.0;  // (1/2) sum_{edges} w (1 - v_i . v_j)
  int sweeps = 0;          // sweeps used by the best restart
};

struct GwResult {
  double sdp_objective = 0.0;
  double average_cut = 0.0;
  double best_cut = 0.0;
  CutAssignment best_assignment;
  int rounds = 0;
  int restarts = 0;

  /// {sdp_objective, average_cut, best_cut, bitstring, rounds, restarts}.
  nlohmann::json to_json() const;
};

/// Burer-Monteiro low-rank relaxation, embedding dimension ceil(sqrt(2N))+1:
/// Riemannian projected gradient ascent with a fixed 1/Lipschitz step and
/// row renormalization, best objective over `restarts` seeded restarts.
SdpSolution solve_sdp(const Graph& g, const GwOptions& opts, std::uint64_t seed);

/// One slicing: r has independent standard-normal coordinates, node i gets
/// sign(v_i . r); a zero dot product maps to +1.
std::pair<CutAssignment, CutValue> hyperplane_round(const GramFactor& f, const Graph& g,
                                                    std::uint64_t seed);

/// solve_sdp once, then `opts.rounds` slicings with per-round derived seeds;
/// reports the average and the best cut. Deterministic for a fixed seed.
GwResult gw_solve(const Graph& g, const GwOptions& opts, std::uint64_t seed);
GwResult gw_solve(const Graph& g, std::uint64_t seed);

}  // namespace maxcut

#endif
