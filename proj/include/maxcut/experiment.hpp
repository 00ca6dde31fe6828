#ifndef MAXCUT_EXPERIMENT_HPP
#define MAXCUT_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "maxcut/graph.hpp"
#include "maxcut/gw.hpp"
#include "maxcut/merge.hpp"
#include "maxcut/qaoa.hpp"

namespace maxcut {

enum class Weighting { unweighted, weighted, both };

/// Axes of the (p, rhobeg) grid search. The defaults follow the study
/// protocol at desk scale: 6 x 5 = 30 grid cells, one unweighted and one
/// weighted instance per (node count, edge probability).
struct GridSpec {
  std::vector<int> p_values{3, 4, 5, 6, 7, 8};
  std::vector<double> rhobeg_values{0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<int> node_counts{8, 9, 10, 11, 12, 13, 14, 15, 16};
  std::vector<double> edge_probs{0.1, 0.3, 0.5};
  Weighting weighting = Weighting::both;
  std::uint64_t seed = 1;
  int shots = 4096;
  ExpectationMode expectation_mode = ExpectationMode::sampled;
  GwOptions gw;

  std::size_t cells() const { return p_values.size() * rhobeg_values.size(); }

  static GridSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct GridCell {
  int p = 0;
  double rhobeg = 0.0;
};

/// One (graph instance, grid cell) outcome.
struct GridRow {
  int nodes = 0;
  double p_edge = 0.0;
  bool weighted = false;
  int p = 0;
  double rhobeg = 0.0;
  double qaoa_cut = 0.0;
  double gw_avg_cut = 0.0;
  double gw_best_cut = 0.0;
  std::optional<double> opt_cut;  // brute force, graphs up to 24 nodes
  bool strict_win = false;        // qaoa_cut > gw_avg_cut
  bool band_95_100 = false;       // qaoa_cut / gw_avg_cut in [0.95, 1)
};

/// Aggregates for one weighting class (unweighted or weighted), matching
/// the study's proportion metrics and normalized win-score heat map.
struct GridClassReport {
  bool weighted_class = false;
  std::size_t num_cases = 0;
  double proportion_strictly_better = 0.0;
  double proportion_95_100 = 0.0;
  std::vector<std::pair<GridCell, int>> raw_cell_counts;         // strict wins per cell
  std::vector<std::pair<GridCell, double>> normalized_cell_scores;  // sums to 1 when wins exist
  GridCell winner_cell;
  bool has_winner = false;
};

struct GridReport {
  GridSpec spec;
  std::vector<GridRow> rows;
  std::vector<GridClassReport> classes;
};

/// Runs QAOA (once per cell) and GW (once per instance) on every instance;
/// deterministic for a fixed spec. Jobs fan out over `workers` threads.
GridReport grid_search(const GridSpec& spec, int workers);

/// nodes,p_edge,weighted,p,rhobeg,qaoa_cut,gw_avg_cut,gw_best_cut,
/// opt_cut_or_blank,strict_win,band_95_100 — 17-digit doubles, booleans
/// as 0/1, blank opt column when the optimum is unknown.
std::string emit_gridsearch_csv(const GridReport& report);
std::vector<GridRow> parse_gridsearch_csv(const std::string& text);

/// All gridsearch output documents as (file name, content) pairs:
/// gridsearch.csv, grid_report.json, and one plot-ready score table
/// (rhobeg rows x p columns) per weighting class.
std::vector<std::pair<std::string, std::string>> gridsearch_documents(const GridReport& report);

/// The multi-solver size sweep. Policies all_qaoa / all_gw / best_of run
/// through qaoa_squared; gw_full is GW on the whole graph (its average
/// cut); random is the one-exchange baseline (bare uniform with
/// `uniform_baseline`).
struct CompareSpec {
  std::vector<int> node_counts{60, 120, 240};
  double edge_prob = 0.1;
  int n_max = 12;
  std::uint64_t seed = 1;
  int workers = 0;  // 0 = default pool size
  bool uniform_baseline = false;
  QaoaConfig qaoa;
  GwOptions gw;
};

struct CompareRow {
  int nodes = 0;
  std::string policy;
  std::optional<double> cut;    // missing when the solver failed
  std::optional<double> ratio;  // relative to the all_qaoa row
  double elapsed_s = 0.0;
};

std::vector<CompareRow> compare_experiment(const CompareSpec& spec);

/// nodes,policy,cut,ratio_vs_all_qaoa,elapsed_s (blank cells for missing).
std::string emit_compare_csv(const std::vector<CompareRow>& rows);

/// compare.csv plus compare_plot.tsv (nodes column, one ratio series per
/// policy).
std::vector<std::pair<std::string, std::string>> compare_documents(
    const std::vector<CompareRow>& rows);

}  // namespace maxcut

#endif
