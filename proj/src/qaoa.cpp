#include "maxcut/qaoa.hpp"

#include <algorithm>
#include <cmath>

#include "maxcut/errors.hpp"
#include "maxcut/rng.hpp"
#include "maxcut/trust_region.hpp"

namespace maxcut {

namespace {

constexpr std::uint64_t kTagInitAngles = 0xA1;
constexpr std::uint64_t kTagShots = 0xA2;
constexpr double kPi = 3.14159265358979323846;

}  // namespace

int iteration_schedule(int p) { return std::clamp(30 + 14 * (p - 3), 30, 100); }

CostDiagonal::CostDiagonal(const Graph& g) : num_qubits_(g.num_nodes()) {
  if (num_qubits_ < 1) throw ParameterError("cost diagonal: graph has no nodes");
  if (num_qubits_ > max_qubits)
    throw SizeError("cost diagonal: " + std::to_string(num_qubits_) + " qubits exceeds the cap of " +
                    std::to_string(max_qubits));
  values_.resize(std::size_t{1} << num_qubits_);
  kernels::build_cost_diagonal(g, values_);
}

CostDiagonal build_cost_diagonal(const Graph& g) { return CostDiagonal(g); }

Statevector apply_ansatz(const CostDiagonal& cost, std::span<const double> gammas,
                         std::span<const double> betas) {
  if (gammas.size() != betas.size())
    throw DimensionError("apply_ansatz: gamma and beta lists differ in length");
  const int n = cost.num_qubits();
  const double amp0 = std::pow(2.0, -0.5 * n);
  Statevector sv(cost.dim(), kernels::cplx(amp0, 0.0));
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    kernels::apply_phase(sv, cost.values(), gammas[l]);
    kernels::apply_mixer(sv, n, betas[l]);
  }
  return sv;
}

double expectation(const Statevector& sv, const CostDiagonal& cost, ExpectationMode mode,
                   int shots, std::uint64_t seed) {
  if (sv.size() != cost.dim())
    throw DimensionError("expectation: statevector and cost diagonal sizes differ");
  if (mode == ExpectationMode::exact) return kernels::expectation_value(sv, cost.values());
  if (shots < 1) throw ParameterError("expectation: shots must be >= 1");
  std::vector<double> cdf(sv.size());
  kernels::build_cdf(sv, cdf);
  const double total = cdf.back();
  Rng rng(seed);
  double sum = 0.0;
  for (int s = 0; s < shots; ++s) {
    const double u = rng.uniform01() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = std::min<std::size_t>(
        static_cast<std::size_t>(it - cdf.begin()), sv.size() - 1);
    sum += cost.values()[idx];
  }
  return sum / shots;
}

CutAssignment extract_solution(const Statevector& sv, const Graph& g) {
  if (g.num_nodes() < 1 || g.num_nodes() > max_qubits ||
      sv.size() != (std::size_t{1} << g.num_nodes()))
    throw DimensionError("extract_solution: statevector size does not match the graph");
  return CutAssignment::from_bits(kernels::max_probability_index(sv), g.num_nodes());
}

QaoaResult qaoa_solve(const Graph& g, const QaoaConfig& cfg) {
  if (cfg.p < 1) throw ParameterError("qaoa: p must be >= 1");
  if (!(cfg.rhobeg > 0.0)) throw ParameterError("qaoa: rhobeg must be positive");
  if (cfg.shots < 1) throw ParameterError("qaoa: shots must be >= 1");
  if (cfg.budget() < 1) throw ParameterError("qaoa: iteration budget must be >= 1");
  if (g.num_nodes() < 1) throw ParameterError("qaoa: graph has no nodes");

  QaoaResult result;
  result.config = cfg;
  if (g.num_edges() == 0) {
    // The objective is constantly zero; any assignment is optimal. There
    // is no statevector to build, so this path has no qubit cap.
    result.gammas.assign(cfg.p, 0.0);
    result.betas.assign(cfg.p, 0.0);
    result.assignment = CutAssignment{std::vector<std::int8_t>(g.num_nodes(), +1)};
    result.cut = 0.0;
    return result;
  }

  const CostDiagonal cost(g);

  Rng init_rng(derive_seed(cfg.seed, {kTagInitAngles}));
  std::vector<double> x0(2 * cfg.p);
  for (int l = 0; l < cfg.p; ++l) x0[l] = init_rng.uniform(0.0, kPi);
  for (int l = 0; l < cfg.p; ++l) x0[cfg.p + l] = init_rng.uniform(0.0, kPi / 2.0);

  std::uint64_t eval_index = 0;
  auto objective = [&](std::span<const double> x) {
    const Statevector sv = apply_ansatz(cost, x.subspan(0, cfg.p), x.subspan(cfg.p, cfg.p));
    const std::uint64_t shot_seed = derive_seed(cfg.seed, {kTagShots, eval_index++});
    return -expectation(sv, cost, cfg.expectation_mode, cfg.shots, shot_seed);
  };

  TrustRegionOptions opts;
  opts.rhobeg = cfg.rhobeg;
  opts.max_evals = cfg.budget();
  const TrustRegionResult tr = minimize_trust_region(objective, x0, opts);

  result.gammas.assign(tr.best_x.begin(), tr.best_x.begin() + cfg.p);
  result.betas.assign(tr.best_x.begin() + cfg.p, tr.best_x.end());
  result.objective_trace.reserve(tr.trace.size());
  for (double v : tr.trace) result.objective_trace.push_back(-v);
  result.iterations_used = tr.evals;

  // Final extraction always reads the exact statevector at the best angles.
  const Statevector sv = apply_ansatz(cost, result.gammas, result.betas);
  result.assignment = extract_solution(sv, g);
  result.cut = cut_value(g, result.assignment);
  return result;
}

nlohmann::json QaoaResult::to_json() const {
  return nlohmann::json{
      {"p", config.p},
      {"rhobeg", config.rhobeg},
      {"seed", config.seed},
      {"shots", config.shots},
      {"expectation_mode",
       config.expectation_mode == ExpectationMode::exact ? "exact" : "sampled"},
      {"optimizer", "linear-trust-region"},
      {"angles", {{"gamma", gammas}, {"beta", betas}}},
      {"trace", objective_trace},
      {"bitstring", assignment.to_bitstring()},
      {"cut", cut},
      {"iterations", iterations_used},
  };
}

}  // namespace maxcut
