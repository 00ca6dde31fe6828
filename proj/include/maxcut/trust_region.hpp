#ifndef MAXCUT_TRUST_REGION_HPP
#define MAXCUT_TRUST_REGION_HPP

#include <functional>
#include <span>
#include <vector>

namespace maxcut {

/// Options for the derivative-free trust-region minimizer. rhobeg is the
/// initial trust radius (initial change to the variables); the search stops
/// when the radius falls below rhoend or the evaluation budget is spent.
struct TrustRegionOptions {
  double rhobeg = 0.5;
  double rhoend = 1e-6;
  int max_evals = 100;
};

struct TrustRegionResult {
  std::vector<double> best_x;
  double best_value = 0.0;
  int evals = 0;
  std::vector<double> trace;  // objective value of every evaluation, in order
};

/// COBYLA-style linear-approximation trust region for the unconstrained
/// case: keeps a simplex of m+1 points, interpolates a linear model on it,
/// steps by the current radius against the model gradient, repairs the
/// simplex geometry when it degenerates, and halves the radius on stalls.
/// Deterministic; returns the best point over all evaluations.
TrustRegionResult minimize_trust_region(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> x0, const TrustRegionOptions& options);

}  // namespace maxcut

#endif
