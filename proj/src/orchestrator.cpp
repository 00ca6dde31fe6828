#include "maxcut/orchestrator.hpp"

#include <algorithm>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "maxcut/errors.hpp"
#include "maxcut/parallel.hpp"
#include "maxcut/rng.hpp"
#include "maxcut/solvers.hpp"

namespace maxcut {

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::all_qaoa: return "all_qaoa";
    case PolicyKind::all_gw: return "all_gw";
    case PolicyKind::best_of: return "best_of";
    case PolicyKind::rule_based: return "rule_based";
  }
  return "unknown";
}

PolicyKind policy_kind_from_string(const std::string& name) {
  if (name == "all_qaoa") return PolicyKind::all_qaoa;
  if (name == "all_gw") return PolicyKind::all_gw;
  if (name == "best_of") return PolicyKind::best_of;
  if (name == "rule_based") return PolicyKind::rule_based;
  throw ParameterError("unknown policy kind: " + name);
}

bool PolicyRule::matches(const Graph& g) const {
  if (max_density && !(g.density() < *max_density)) return false;
  if (max_nodes && g.num_nodes() > *max_nodes) return false;
  if (weighted && g.is_weighted() != *weighted) return false;
  return true;
}

SolverPolicy SolverPolicy::named(const std::string& name) {
  SolverPolicy policy;
  policy.kind = policy_kind_from_string(name);
  if (policy.kind == PolicyKind::rule_based)
    throw ParameterError("rule_based policies require a rule table (use a policy file)");
  return policy;
}

SolverPolicy SolverPolicy::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw InputError("policy: expected an object with a \"kind\" field");
  SolverPolicy policy;
  policy.kind = policy_kind_from_string(j.at("kind").get<std::string>());

  if (j.contains("qaoa")) {
    const auto& q = j.at("qaoa");
    if (q.contains("p")) policy.qaoa_defaults.p = q.at("p").get<int>();
    if (q.contains("rhobeg")) policy.qaoa_defaults.rhobeg = q.at("rhobeg").get<double>();
    if (q.contains("shots")) policy.qaoa_defaults.shots = q.at("shots").get<int>();
    if (q.contains("iters")) policy.qaoa_defaults.max_iters = q.at("iters").get<int>();
  }
  if (j.contains("gw")) {
    const auto& w = j.at("gw");
    if (w.contains("rounds")) policy.gw_options.rounds = w.at("rounds").get<int>();
    if (w.contains("restarts")) policy.gw_options.restarts = w.at("restarts").get<int>();
    if (w.contains("tol")) policy.gw_options.tol = w.at("tol").get<double>();
  }

  if (policy.kind != PolicyKind::rule_based) return policy;

  if (!j.contains("rules") || !j.at("rules").is_array() || j.at("rules").empty())
    throw InputError("policy: rule_based requires a non-empty \"rules\" array");
  for (const auto& rj : j.at("rules")) {
    PolicyRule rule;
    if (rj.contains("default")) {
      rule.solver = solver_kind_from_string(rj.at("default").get<std::string>());
    } else {
      if (!rj.contains("solver")) throw InputError("policy rule: missing \"solver\"");
      rule.solver = solver_kind_from_string(rj.at("solver").get<std::string>());
      if (rj.contains("max_density")) rule.max_density = rj.at("max_density").get<double>();
      if (rj.contains("max_nodes")) rule.max_nodes = rj.at("max_nodes").get<int>();
      if (rj.contains("weighted")) rule.weighted = rj.at("weighted").get<bool>();
    }
    if (rj.contains("p")) rule.p = rj.at("p").get<int>();
    if (rj.contains("rhobeg")) rule.rhobeg = rj.at("rhobeg").get<double>();
    if (rj.contains("iters")) rule.iters = rj.at("iters").get<int>();
    if (rj.contains("shots")) rule.shots = rj.at("shots").get<int>();
    policy.rules.push_back(rule);
  }
  if (!policy.rules.back().is_default())
    throw InputError("policy: the last rule must be a default (no predicates)");
  return policy;
}

nlohmann::json SolverPolicy::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["qaoa"] = {{"p", qaoa_defaults.p}, {"rhobeg", qaoa_defaults.rhobeg},
               {"shots", qaoa_defaults.shots}};
  if (qaoa_defaults.max_iters) j["qaoa"]["iters"] = *qaoa_defaults.max_iters;
  j["gw"] = {{"rounds", gw_options.rounds}, {"restarts", gw_options.restarts},
             {"tol", gw_options.tol}};
  if (kind == PolicyKind::rule_based) {
    nlohmann::json rule_list = nlohmann::json::array();
    for (const PolicyRule& rule : rules) {
      nlohmann::json rj;
      if (rule.is_default()) {
        rj["default"] = to_string(rule.solver);
      } else {
        rj["solver"] = to_string(rule.solver);
        if (rule.max_density) rj["max_density"] = *rule.max_density;
        if (rule.max_nodes) rj["max_nodes"] = *rule.max_nodes;
        if (rule.weighted) rj["weighted"] = *rule.weighted;
      }
      if (rule.p) rj["p"] = *rule.p;
      if (rule.rhobeg) rj["rhobeg"] = *rule.rhobeg;
      if (rule.iters) rj["iters"] = *rule.iters;
      if (rule.shots) rj["shots"] = *rule.shots;
      rule_list.push_back(rj);
    }
    j["rules"] = rule_list;
  }
  return j;
}

const PolicyRule& SolverPolicy::match(const Graph& g) const {
  if (kind != PolicyKind::rule_based)
    throw ParameterError("policy: rule matching applies to rule_based policies only");
  for (const PolicyRule& rule : rules)
    if (rule.matches(g)) return rule;
  throw InputError("policy: no rule matched (missing default branch)");
}

QaoaConfig SolverPolicy::qaoa_config_for(const Graph& g) const {
  QaoaConfig cfg = qaoa_defaults;
  if (kind == PolicyKind::rule_based) {
    const PolicyRule& rule = match(g);
    if (rule.p) cfg.p = *rule.p;
    if (rule.rhobeg) cfg.rhobeg = *rule.rhobeg;
    if (rule.iters) cfg.max_iters = *rule.iters;
    if (rule.shots) cfg.shots = *rule.shots;
  }
  return cfg;
}

TaskPlan plan(const std::vector<Subgraph>& subgraphs, const SolverPolicy& policy,
              std::uint64_t base_seed) {
  if (subgraphs.empty()) throw InputError("plan: no subgraphs");
  TaskPlan out;
  out.num_clusters = subgraphs.size();
  out.policy = policy.kind;
  for (std::size_t c = 0; c < subgraphs.size(); ++c) {
    std::vector<SolverKind> kinds;
    switch (policy.kind) {
      case PolicyKind::all_qaoa: kinds = {SolverKind::qaoa}; break;
      case PolicyKind::all_gw: kinds = {SolverKind::gw}; break;
      case PolicyKind::best_of: kinds = {SolverKind::qaoa, SolverKind::gw}; break;
      case PolicyKind::rule_based: kinds = {policy.match(subgraphs[c].graph).solver}; break;
    }
    for (SolverKind kind : kinds) {
      Task task;
      task.cluster = static_cast<int>(c);
      task.subgraph = subgraphs[c];
      task.solver = kind;
      task.qaoa = policy.qaoa_config_for(subgraphs[c].graph);
      task.gw = policy.gw_options;
      task.seed = derive_seed(base_seed, {std::uint64_t(c), std::uint64_t(kind)});
      out.tasks.push_back(std::move(task));
    }
  }
  return out;
}

std::vector<SolveRecord> dispatch(const TaskPlan& plan, int workers) {
  if (workers < 1) throw ParameterError("dispatch: pool size must be >= 1");
  if (plan.tasks.empty()) throw InputError("dispatch: empty plan");

#ifdef _OPENMP
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int omp_share = std::max(1, static_cast<int>(hw) / workers);
#endif

  auto results = run_indexed(plan.tasks.size(), workers, [&](std::size_t i) {
#ifdef _OPENMP
    // Split hardware threads between concurrent tasks; the kernels are
    // deterministic for any thread count, so this only affects speed.
    if (workers > 1) omp_set_num_threads(omp_share);
#endif
    const Task& task = plan.tasks[i];
    try {
      return solve_with(task.subgraph.graph, task.solver, task.qaoa, task.gw, task.seed);
    } catch (const Error& e) {
      throw Error(e.kind(), "cluster " + std::to_string(task.cluster) + ": " + e.what());
    }
  });

  std::vector<SolveRecord> per_cluster;
  per_cluster.reserve(plan.num_clusters);
  std::size_t i = 0;
  while (i < results.size()) {
    const int cluster = plan.tasks[i].cluster;
    if (i + 1 < results.size() && plan.tasks[i + 1].cluster == cluster) {
      per_cluster.push_back(select_best(results[i], results[i + 1]));
      i += 2;
    } else {
      per_cluster.push_back(std::move(results[i]));
      i += 1;
    }
  }
  if (per_cluster.size() != plan.num_clusters)
    throw InputError("dispatch: task/cluster bookkeeping mismatch");
  return per_cluster;
}

SolveRecord select_best(const SolveRecord& qaoa, const SolveRecord& gw) {
  if (qaoa.assignment.size() != gw.assignment.size())
    throw InputError("select_best: records refer to different subgraphs");
  return qaoa.cut > gw.cut ? qaoa : gw;
}

}  // namespace maxcut
