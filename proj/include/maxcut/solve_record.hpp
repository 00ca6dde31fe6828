#ifndef MAXCUT_SOLVE_RECORD_HPP
#define MAXCUT_SOLVE_RECORD_HPP

#include <string>

#include <json.hpp>

#include "maxcut/graph.hpp"

namespace maxcut {

/// Per-(sub)graph solver kinds. qaoa2 marks the composite divide-and-conquer
/// record assembled by the merge engine.
enum class SolverKind { qaoa, gw, random, exact, qaoa2 };

std::string to_string(SolverKind kind);
SolverKind solver_kind_from_string(const std::string& name);

/// Outcome of one solve: the orchestrator's unit of accounting.
struct SolveRecord {
  SolverKind solver = SolverKind::qaoa;
  CutAssignment assignment;  // local to the solved (sub)graph
  CutValue cut = 0.0;
  double elapsed_seconds = 0.0;
  nlohmann::json metadata;  // solver-specific record

  nlohmann::json to_json() const;
};

}  // namespace maxcut

#endif
