#include "maxcut/gw.hpp"

#include <algorithm>
#include <cmath>

#include "maxcut/errors.hpp"
#include "maxcut/rng.hpp"

namespace maxcut {

namespace {

constexpr std::uint64_t kTagRestart = 0xB1;
constexpr std::uint64_t kTagRound = 0xB2;

int embedding_dim(int n) {
  return static_cast<int>(std::ceil(std::sqrt(2.0 * n))) + 1;
}

double sdp_objective_value(const Graph& g, const GramFactor& f) {
  double obj = 0.0;
  for (const Edge& e : g.edges()) obj += 0.5 * e.w * (1.0 - f.dot(e.i, e.j));
  return obj;
}

void normalize_row(std::span<double> row) {
  double n2 = 0.0;
  for (double v : row) n2 += v * v;
  const double n = std::sqrt(n2);
  if (n > 0.0)
    for (double& v : row) v /= n;
  else
    row[0] = 1.0;  // degenerate row: pin to the first axis
}

/// One gradient-ascent run from a seeded random factor.
SdpSolution solve_sdp_once(const Graph& g, const GwOptions& opts, std::uint64_t seed) {
  const int n = g.num_nodes();
  const int k = embedding_dim(n);
  GramFactor f(n, k);

  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    auto row = f.row(i);
    for (double& v : row) v = rng.normal();
    normalize_row(row);
  }

  // Lipschitz estimate of the gradient map: half the largest absolute
  // weighted degree (covers the signed weights of merge graphs).
  std::vector<double> abs_degree(n, 0.0);
  for (const Edge& e : g.edges()) {
    abs_degree[e.i] += std::abs(e.w);
    abs_degree[e.j] += std::abs(e.w);
  }
  const double lipschitz = 0.5 * *std::max_element(abs_degree.begin(), abs_degree.end());
  SdpSolution sol;
  sol.factor = f;
  sol.objective = sdp_objective_value(g, f);
  if (!(lipschitz > 0.0)) return sol;  // edgeless: objective constantly 0
  const double step = 1.0 / lipschitz;

  const auto adj = g.adjacency();
  GramFactor grad(n, k);
  const int max_sweeps = opts.max_sweeps_per_node * n;
  double obj = sol.objective;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    // Full-batch Euclidean gradient of the ascent objective:
    // d/dv_i (1/2) sum w (1 - v_i.v_j) = -(1/2) sum_j w_ij v_j.
    std::fill(grad.data.begin(), grad.data.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      auto gi = grad.row(i);
      for (const auto& [j, w] : adj[i]) {
        const auto vj = f.row(j);
        for (int d = 0; d < k; ++d) gi[d] -= 0.5 * w * vj[d];
      }
    }
    for (int i = 0; i < n; ++i) {
      auto vi = f.row(i);
      auto gi = grad.row(i);
      double along = 0.0;  // project onto the tangent space of the sphere
      for (int d = 0; d < k; ++d) along += gi[d] * vi[d];
      for (int d = 0; d < k; ++d) vi[d] += step * (gi[d] - along * vi[d]);
      normalize_row(vi);
    }
    const double next = sdp_objective_value(g, f);
    if (!std::isfinite(next)) throw NumericError("sdp: non-finite objective during ascent");
    sol.sweeps = sweep + 1;
    if (std::abs(next - obj) < opts.tol * std::max(1.0, std::abs(next))) {
      obj = next;
      break;
    }
    obj = next;
  }
  sol.factor = std::move(f);
  sol.objective = obj;
  return sol;
}

}  // namespace

SdpSolution solve_sdp(const Graph& g, const GwOptions& opts, std::uint64_t seed) {
  if (g.num_nodes() < 1) throw ParameterError("sdp: graph has no nodes");
  if (opts.restarts < 1) throw ParameterError("sdp: restarts must be >= 1");
  SdpSolution best;
  for (int t = 0; t < opts.restarts; ++t) {
    SdpSolution sol = solve_sdp_once(g, opts, derive_seed(seed, {kTagRestart, std::uint64_t(t)}));
    if (t == 0 || sol.objective > best.objective) best = std::move(sol);
  }
  return best;
}

std::pair<CutAssignment, CutValue> hyperplane_round(const GramFactor& f, const Graph& g,
                                                    std::uint64_t seed) {
  if (f.rows != g.num_nodes()) throw DimensionError("rounding: factor rows do not match the graph");
  Rng rng(seed);
  std::vector<double> r(f.dim);
  for (double& v : r) v = rng.normal();
  CutAssignment a;
  a.spins.resize(f.rows);
  for (int i = 0; i < f.rows; ++i) {
    const auto vi = f.row(i);
    double dot = 0.0;
    for (int d = 0; d < f.dim; ++d) dot += vi[d] * r[d];
    a.spins[i] = dot < 0.0 ? -1 : +1;
  }
  return {a, cut_value(g, a)};
}

GwResult gw_solve(const Graph& g, const GwOptions& opts, std::uint64_t seed) {
  if (opts.rounds < 1) throw ParameterError("gw: rounds must be >= 1");
  const SdpSolution sdp = solve_sdp(g, opts, seed);

  GwResult result;
  result.sdp_objective = sdp.objective;
  result.rounds = opts.rounds;
  result.restarts = opts.restarts;
  double sum = 0.0;
  for (int r = 0; r < opts.rounds; ++r) {
    auto [a, cut] = hyperplane_round(sdp.factor, g, derive_seed(seed, {kTagRound, std::uint64_t(r)}));
    sum += cut;
    if (r == 0 || cut > result.best_cut) {
      result.best_cut = cut;
      result.best_assignment = std::move(a);
    }
  }
  result.average_cut = sum / opts.rounds;
  return result;
}

GwResult gw_solve(const Graph& g, std::uint64_t seed) { return gw_solve(g, GwOptions{}, seed); }

nlohmann::json GwResult::to_json() const {
  return nlohmann::json{
      {"sdp_objective", sdp_objective}, {"average_cut", average_cut},
      {"best_cut", best_cut},           {"bitstring", best_assignment.to_bitstring()},
      {"rounds", rounds},               {"restarts", restarts},
  };
}

}  // namespace maxcut
