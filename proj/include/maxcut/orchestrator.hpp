#ifndef MAXCUT_ORCHESTRATOR_HPP
#define MAXCUT_ORCHESTRATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxcut/gw.hpp"
#include "maxcut/partition.hpp"
#include "maxcut/qaoa.hpp"
#include "maxcut/solve_record.hpp"

namespace maxcut {

enum class PolicyKind { all_qaoa, all_gw, best_of, rule_based };

std::string to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& name);

/// One rule of a rule_based policy. Unset predicate fields match anything;
/// a rule with no predicates at all is the required default branch.
struct PolicyRule {
  std::optional<double> max_density;
  std::optional<int> max_nodes;
  std::optional<bool> weighted;
  SolverKind solver = SolverKind::gw;
  std::optional<int> p;
  std::optional<double> rhobeg;
  std::optional<int> iters;
  std::optional<int> shots;

  bool is_default() const { return !max_density && !max_nodes && !weighted; }
  bool matches(const Graph& g) const;
};

/// Which solver handles which sub-graph, plus the solver configurations the
/// tasks inherit.
struct SolverPolicy {
  PolicyKind kind = PolicyKind::best_of;
  std::vector<PolicyRule> rules;  // rule_based only; last rule must be the default
  QaoaConfig qaoa_defaults;
  GwOptions gw_options;

  /// "all_qaoa", "all_gw" or "best_of".
  static SolverPolicy named(const std::string& name);
  /// {"kind": "...", "rules": [{"max_density": .., "solver": "..", ...}, {"default": ".."}]}
  static SolverPolicy from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  /// First matching rule (rule_based policies only).
  const PolicyRule& match(const Graph& g) const;
  /// Resolved QAOA config for one sub-graph (rule overrides applied).
  QaoaConfig qaoa_config_for(const Graph& g) const;
};

struct Task {
  int cluster = 0;
  Subgraph subgraph;
  SolverKind solver = SolverKind::gw;
  QaoaConfig qaoa;
  GwOptions gw;
  std::uint64_t seed = 0;
};

struct TaskPlan {
  std::vector<Task> tasks;  // ordered by (cluster, solver)
  std::size_t num_clusters = 0;
  PolicyKind policy = PolicyKind::best_of;
};

/// Deterministic task list: one task per cluster (two for best_of), with
/// per-task seed = derive_seed(base_seed, {cluster, solver ordinal}).
TaskPlan plan(const std::vector<Subgraph>& subgraphs, const SolverPolicy& policy,
              std::uint64_t base_seed);

/// Executes the plan on a pool of `workers` threads and returns one record
/// per cluster, cluster-ordered (best_of pairs reduced via select_best).
/// The output is independent of the pool size.
std::vector<SolveRecord> dispatch(const TaskPlan& plan, int workers);

/// The record with the strictly larger cut; ties go to the GW record.
SolveRecord select_best(const SolveRecord& qaoa, const SolveRecord& gw);

}  // namespace maxcut

#endif
