#ifndef MAXCUT_SOLVERS_HPP
#define MAXCUT_SOLVERS_HPP

#include <cstdint>

#include "maxcut/graph.hpp"
#include "maxcut/gw.hpp"
#include "maxcut/qaoa.hpp"
#include "maxcut/solve_record.hpp"

namespace maxcut {

/// Independent +/-1 coin flip per node.
CutAssignment uniform_random_assignment(int n, std::uint64_t seed);

/// One-exchange local search: sweep nodes in index order, flipping any node
/// whose flip strictly increases the cut, until a full sweep changes
/// nothing. The result is 1-flip-optimal. Returns the number of flips.
int one_exchange_local_search(const Graph& g, CutAssignment& a);

/// Seeded uniform start followed by one-exchange local search.
SolveRecord random_baseline(const Graph& g, std::uint64_t seed);

/// Bare uniform random assignment, no local search (the `--uniform` check).
SolveRecord uniform_baseline(const Graph& g, std::uint64_t seed);

/// Dispatch a single solve. qaoa uses `qaoa_cfg` with its seed replaced by
/// `seed`; gw uses `gw_opts`; exact is the brute-force oracle (N <= 24).
SolveRecord solve_with(const Graph& g, SolverKind kind, const QaoaConfig& qaoa_cfg,
                       const GwOptions& gw_opts, std::uint64_t seed);

}  // namespace maxcut

#endif
