#ifndef MAXCUT_QAOA_HPP
#define MAXCUT_QAOA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "maxcut/graph.hpp"
#include "maxcut/kernels.hpp"

namespace maxcut {

/// Hard cap on simulated qubits (2^33 amplitudes is the design limit;
/// desk-scale runs stay well below it).
inline constexpr int max_qubits = 33;

enum class ExpectationMode { exact, sampled };

/// Budget of objective evaluations as a function of the layer count: the
/// affine map 30 + 14 (p - 3), clamped to [30, 100].
int iteration_schedule(int p);

/// Diagonal of the cost Hamiltonian: entry b is the cut value of the
/// assignment encoded by basis index b (bit k = node k, 0 -> spin +1).
class CostDiagonal {
public:
  explicit CostDiagonal(const Graph& g);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

private:
  int num_qubits_ = 0;
  std::vector<double> values_;
};

using Statevector = std::vector<kernels::cplx>;

struct QaoaConfig {
  int p = 6;
  double rhobeg = 0.5;
  /// Objective evaluation budget; defaults to iteration_schedule(p).
  std::optional<int> max_iters;
  int shots = 4096;
  std::uint64_t seed = 0;
  ExpectationMode expectation_mode = ExpectationMode::sampled;

  int budget() const { return max_iters ? *max_iters : iteration_schedule(p); }
};

struct QaoaResult {
  std::vector<double> gammas;
  std::vector<double> betas;
  std::vector<double> objective_trace;  // F_p per evaluation, in order
  CutAssignment assignment;
  CutValue cut = 0.0;
  int iterations_used = 0;
  QaoaConfig config;

  /// {p, rhobeg, seed, angles, trace, bitstring, cut, iterations, ...}.
  nlohmann::json to_json() const;
};

CostDiagonal build_cost_diagonal(const Graph& g);

/// |psi> = prod_l exp(-i beta_l H_M) exp(-i gamma_l H_C) |+>^n. Layer l
/// applies the diagonal phase with gammas[l], then the transverse-field
/// mixer with betas[l]. Empty angle lists return the uniform superposition.
Statevector apply_ansatz(const CostDiagonal& cost, std::span<const double> gammas,
                         std::span<const double> betas);

/// F_p estimate. Exact mode: sum |amp_b|^2 cost[b]. Sampled mode: draw
/// `shots` basis indices from |amp|^2 (seeded) and average their costs.
double expectation(const Statevector& sv, const CostDiagonal& cost, ExpectationMode mode,
                   int shots, std::uint64_t seed);

/// Assignment of the basis index with the largest |amplitude|^2; ties break
/// toward the smallest index.
CutAssignment extract_solution(const Statevector& sv, const Graph& g);

/// Full QAOA run: seeded random initial angles, derivative-free
/// trust-region optimization of F_p, then exact extraction at the best
/// angles. Deterministic for a fixed config.
QaoaResult qaoa_solve(const Graph& g, const QaoaConfig& cfg);

}  // namespace maxcut

#endif
