#include "maxcut/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "maxcut/errors.hpp"
#include "maxcut/parallel.hpp"
#include "maxcut/rng.hpp"
#include "maxcut/solvers.hpp"

namespace maxcut {

namespace {

constexpr std::uint64_t kTagGridGraph = 0xD1;
constexpr std::uint64_t kTagGridGw = 0xD2;
constexpr std::uint64_t kTagGridQaoa = 0xD3;
constexpr std::uint64_t kTagCompareGraph = 0xE1;
constexpr std::uint64_t kTagComparePolicies = 0xE2;
constexpr std::uint64_t kTagCompareGwFull = 0xE3;
constexpr std::uint64_t kTagCompareRandom = 0xE4;

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::vector<bool> weight_flags(Weighting w) {
  switch (w) {
    case Weighting::unweighted: return {false};
    case Weighting::weighted: return {true};
    case Weighting::both: return {false, true};
  }
  return {false, true};
}

struct GridInstance {
  int nodes = 0;
  double p_edge = 0.0;
  bool weighted = false;
  Graph graph;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace

GridSpec GridSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("grid spec: expected a JSON object");
  GridSpec spec;
  if (j.contains("p_values")) spec.p_values = j.at("p_values").get<std::vector<int>>();
  if (j.contains("rhobeg_values"))
    spec.rhobeg_values = j.at("rhobeg_values").get<std::vector<double>>();
  if (j.contains("node_counts")) spec.node_counts = j.at("node_counts").get<std::vector<int>>();
  if (j.contains("edge_probs")) spec.edge_probs = j.at("edge_probs").get<std::vector<double>>();
  if (j.contains("weighted")) {
    const auto& w = j.at("weighted");
    if (w.is_boolean())
      spec.weighting = w.get<bool>() ? Weighting::weighted : Weighting::unweighted;
    else if (w.is_string() && w.get<std::string>() == "both")
      spec.weighting = Weighting::both;
    else
      throw InputError("grid spec: \"weighted\" must be true, false or \"both\"");
  }
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("shots")) spec.shots = j.at("shots").get<int>();
  if (j.contains("expectation_mode")) {
    const std::string mode = j.at("expectation_mode").get<std::string>();
    if (mode == "exact")
      spec.expectation_mode = ExpectationMode::exact;
    else if (mode == "sampled")
      spec.expectation_mode = ExpectationMode::sampled;
    else
      throw InputError("grid spec: \"expectation_mode\" must be \"exact\" or \"sampled\"");
  }
  if (j.contains("gw_rounds")) spec.gw.rounds = j.at("gw_rounds").get<int>();
  if (j.contains("gw_restarts")) spec.gw.restarts = j.at("gw_restarts").get<int>();
  return spec;
}

nlohmann::json GridSpec::to_json() const {
  nlohmann::json j{{"p_values", p_values},
                   {"rhobeg_values", rhobeg_values},
                   {"node_counts", node_counts},
                   {"edge_probs", edge_probs},
                   {"seed", seed},
                   {"shots", shots},
                   {"expectation_mode",
                    expectation_mode == ExpectationMode::exact ? "exact" : "sampled"},
                   {"gw_rounds", gw.rounds},
                   {"gw_restarts", gw.restarts}};
  if (weighting == Weighting::both)
    j["weighted"] = "both";
  else
    j["weighted"] = weighting == Weighting::weighted;
  return j;
}

GridReport grid_search(const GridSpec& spec, int workers) {
  if (spec.p_values.empty() || spec.rhobeg_values.empty() || spec.edge_probs.empty())
    throw ParameterError("grid search: empty axis");
  for (int p : spec.p_values)
    if (p < 1) throw ParameterError("grid search: p must be >= 1");
  for (int n : spec.node_counts) {
    if (n < 1) throw ParameterError("grid search: node counts must be >= 1");
    if (n > max_qubits)
      throw SizeError("grid search: " + std::to_string(n) + " nodes exceeds the simulator cap");
  }

  GridReport report;
  report.spec = spec;

  std::vector<GridInstance> instances;
  for (int n : spec.node_counts)
    for (double pe : spec.edge_probs)
      for (bool w : weight_flags(spec.weighting)) {
        GridInstance inst;
        inst.nodes = n;
        inst.p_edge = pe;
        inst.weighted = w;
        inst.graph = erdos_renyi(
            n, pe, w, derive_seed(spec.seed, {kTagGridGraph, std::uint64_t(instances.size())}));
        instances.push_back(std::move(inst));
      }
  if (instances.empty()) return report;  // header-only outputs
  if (workers < 1) workers = default_worker_count(instances.size() * spec.cells());

  struct InstanceBaseline {
    GwResult gw;
    std::optional<double> opt_cut;
  };
  auto baselines = run_indexed(instances.size(), workers, [&](std::size_t i) {
    InstanceBaseline base;
    base.gw = gw_solve(instances[i].graph, spec.gw, derive_seed(spec.seed, {kTagGridGw, i}));
    if (instances[i].nodes <= 24) base.opt_cut = brute_force_maxcut(instances[i].graph).second;
    return base;
  });

  const std::size_t cells = spec.cells();
  auto qaoa_cuts = run_indexed(instances.size() * cells, workers, [&](std::size_t job) {
    const std::size_t i = job / cells;
    const std::size_t cell = job % cells;
    QaoaConfig cfg;
    cfg.p = spec.p_values[cell / spec.rhobeg_values.size()];
    cfg.rhobeg = spec.rhobeg_values[cell % spec.rhobeg_values.size()];
    cfg.shots = spec.shots;
    cfg.expectation_mode = spec.expectation_mode;
    cfg.seed = derive_seed(spec.seed, {kTagGridQaoa, i, cell});
    return qaoa_solve(instances[i].graph, cfg).cut;
  });

  for (std::size_t i = 0; i < instances.size(); ++i)
    for (std::size_t cell = 0; cell < cells; ++cell) {
      GridRow row;
      row.nodes = instances[i].nodes;
      row.p_edge = instances[i].p_edge;
      row.weighted = instances[i].weighted;
      row.p = spec.p_values[cell / spec.rhobeg_values.size()];
      row.rhobeg = spec.rhobeg_values[cell % spec.rhobeg_values.size()];
      row.qaoa_cut = qaoa_cuts[i * cells + cell];
      row.gw_avg_cut = baselines[i].gw.average_cut;
      row.gw_best_cut = baselines[i].gw.best_cut;
      row.opt_cut = baselines[i].opt_cut;
      row.strict_win = row.qaoa_cut > row.gw_avg_cut;
      row.band_95_100 = row.gw_avg_cut > 0.0 && row.qaoa_cut >= 0.95 * row.gw_avg_cut &&
                        row.qaoa_cut < row.gw_avg_cut;
      report.rows.push_back(row);
    }

  for (bool weighted : weight_flags(spec.weighting)) {
    GridClassReport cls;
    cls.weighted_class = weighted;
    for (std::size_t cell = 0; cell < cells; ++cell) {
      const GridCell gc{spec.p_values[cell / spec.rhobeg_values.size()],
                        spec.rhobeg_values[cell % spec.rhobeg_values.size()]};
      cls.raw_cell_counts.emplace_back(gc, 0);
      cls.normalized_cell_scores.emplace_back(gc, 0.0);
    }
    std::size_t wins = 0, banded = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (instances[i].weighted != weighted) continue;
      for (std::size_t cell = 0; cell < cells; ++cell) {
        const GridRow& row = report.rows[i * cells + cell];
        ++cls.num_cases;
        if (row.strict_win) {
          ++wins;
          ++cls.raw_cell_counts[cell].second;
        }
        if (row.band_95_100) ++banded;
      }
    }
    if (cls.num_cases == 0) continue;  // weighting class absent from the spec
    cls.proportion_strictly_better = double(wins) / double(cls.num_cases);
    cls.proportion_95_100 = double(banded) / double(cls.num_cases);
    if (wins > 0) {
      cls.has_winner = true;
      std::size_t best = 0;
      for (std::size_t cell = 0; cell < cells; ++cell) {
        cls.normalized_cell_scores[cell].second =
            double(cls.raw_cell_counts[cell].second) / double(wins);
        if (cls.raw_cell_counts[cell].second > cls.raw_cell_counts[best].second) best = cell;
      }
      cls.winner_cell = cls.raw_cell_counts[best].first;
    }
    report.classes.push_back(std::move(cls));
  }
  return report;
}

std::string emit_gridsearch_csv(const GridReport& report) {
  std::ostringstream out;
  out << "nodes,p_edge,weighted,p,rhobeg,qaoa_cut,gw_avg_cut,gw_best_cut,"
         "opt_cut_or_blank,strict_win,band_95_100\n";
  for (const GridRow& r : report.rows) {
    out << r.nodes << ',' << format_double(r.p_edge) << ',' << (r.weighted ? 1 : 0) << ',' << r.p
        << ',' << format_double(r.rhobeg) << ',' << format_double(r.qaoa_cut) << ','
        << format_double(r.gw_avg_cut) << ',' << format_double(r.gw_best_cut) << ',';
    if (r.opt_cut) out << format_double(*r.opt_cut);
    out << ',' << (r.strict_win ? 1 : 0) << ',' << (r.band_95_100 ? 1 : 0) << '\n';
  }
  return out.str();
}

std::vector<GridRow> parse_gridsearch_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "nodes,p_edge,weighted,p,rhobeg,qaoa_cut,gw_avg_cut,gw_best_cut,"
              "opt_cut_or_blank,strict_win,band_95_100")
    throw ParseError(1, "gridsearch csv: bad header");
  std::vector<GridRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 11) throw ParseError(line_no, "gridsearch csv: expected 11 fields");
    try {
      GridRow r;
      r.nodes = std::stoi(fields[0]);
      r.p_edge = std::stod(fields[1]);
      r.weighted = std::stoi(fields[2]) != 0;
      r.p = std::stoi(fields[3]);
      r.rhobeg = std::stod(fields[4]);
      r.qaoa_cut = std::stod(fields[5]);
      r.gw_avg_cut = std::stod(fields[6]);
      r.gw_best_cut = std::stod(fields[7]);
      if (!fields[8].empty()) r.opt_cut = std::stod(fields[8]);
      r.strict_win = std::stoi(fields[9]) != 0;
      r.band_95_100 = std::stoi(fields[10]) != 0;
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "gridsearch csv: malformed number");
    }
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> gridsearch_documents(const GridReport& report) {
  std::vector<std::pair<std::string, std::string>> docs;
  docs.emplace_back("gridsearch.csv", emit_gridsearch_csv(report));

  nlohmann::json classes = nlohmann::json::array();
  for (const GridClassReport& cls : report.classes) {
    nlohmann::json scores = nlohmann::json::array();
    for (std::size_t i = 0; i < cls.normalized_cell_scores.size(); ++i) {
      const auto& [cell, score] = cls.normalized_cell_scores[i];
      scores.push_back({{"p", cell.p},
                        {"rhobeg", cell.rhobeg},
                        {"score", score},
                        {"wins", cls.raw_cell_counts[i].second}});
    }
    nlohmann::json cj{{"weighted", cls.weighted_class},
                      {"num_cases", cls.num_cases},
                      {"proportion_strictly_better", cls.proportion_strictly_better},
                      {"proportion_95_100", cls.proportion_95_100},
                      {"cells", scores}};
    if (cls.has_winner)
      cj["winner_cell"] = {{"p", cls.winner_cell.p}, {"rhobeg", cls.winner_cell.rhobeg}};
    classes.push_back(std::move(cj));
  }
  const nlohmann::json report_json{{"spec", report.spec.to_json()}, {"classes", classes}};
  docs.emplace_back("grid_report.json", report_json.dump(2) + "\n");

  for (const GridClassReport& cls : report.classes) {
    // Plot-ready table: rhobeg rows, one normalized-score column per p.
    std::ostringstream out;
    out << "rhobeg";
    for (int p : report.spec.p_values) out << "\tp" << p;
    out << '\n';
    for (std::size_t r = 0; r < report.spec.rhobeg_values.size(); ++r) {
      out << format_double(report.spec.rhobeg_values[r]);
      for (std::size_t pi = 0; pi < report.spec.p_values.size(); ++pi)
        out << '\t'
            << format_double(
                   cls.normalized_cell_scores[pi * report.spec.rhobeg_values.size() + r].second);
      out << '\n';
    }
    docs.emplace_back(
        std::string("grid_scores_") + (cls.weighted_class ? "weighted" : "unweighted") + ".tsv",
        out.str());
  }
  return docs;
}

std::vector<CompareRow> compare_experiment(const CompareSpec& spec) {
  if (spec.node_counts.empty()) throw ParameterError("compare: empty node count list");
  for (int n : spec.node_counts)
    if (n < spec.n_max)
      throw ParameterError("compare: node counts must be >= n_max (" +
                           std::to_string(spec.n_max) + ")");

  std::vector<CompareRow> rows;
  std::vector<int> sizes = spec.node_counts;
  std::sort(sizes.begin(), sizes.end());
  for (int n : sizes) {
    const Graph g =
        erdos_renyi(n, spec.edge_prob, false,
                    derive_seed(spec.seed, {kTagCompareGraph, std::uint64_t(n)}));
    const std::uint64_t policy_seed =
        derive_seed(spec.seed, {kTagComparePolicies, std::uint64_t(n)});

    std::optional<double> all_qaoa_cut;
    for (PolicyKind kind : {PolicyKind::all_qaoa, PolicyKind::all_gw, PolicyKind::best_of}) {
      Qaoa2Options opts;
      opts.n_max = spec.n_max;
      opts.policy.kind = kind;
      opts.policy.qaoa_defaults = spec.qaoa;
      opts.policy.gw_options = spec.gw;
      opts.workers = spec.workers;
      const SolveRecord rec = qaoa_squared(g, opts, policy_seed);
      if (kind == PolicyKind::all_qaoa) all_qaoa_cut = rec.cut;
      rows.push_back({n, to_string(kind), rec.cut, std::nullopt, rec.elapsed_seconds});
    }

    {  // GW on the full graph; a numeric failure is recorded as missing.
      CompareRow row{n, "gw_full", std::nullopt, std::nullopt, 0.0};
      const auto start = std::chrono::steady_clock::now();
      try {
        const GwResult full =
            gw_solve(g, spec.gw, derive_seed(spec.seed, {kTagCompareGwFull, std::uint64_t(n)}));
        row.cut = full.average_cut;
      } catch (const NumericError&) {
      }
      row.elapsed_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows.push_back(std::move(row));
    }

    const std::uint64_t random_seed =
        derive_seed(spec.seed, {kTagCompareRandom, std::uint64_t(n)});
    const SolveRecord rnd =
        spec.uniform_baseline ? uniform_baseline(g, random_seed) : random_baseline(g, random_seed);
    rows.push_back({n, "random", rnd.cut, std::nullopt, rnd.elapsed_seconds});

    for (auto it = rows.end() - 5; it != rows.end(); ++it)
      if (it->cut && all_qaoa_cut && *all_qaoa_cut > 0.0)
        it->ratio = it->policy == "all_qaoa" ? 1.0 : *it->cut / *all_qaoa_cut;
  }
  return rows;
}

std::string emit_compare_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << "nodes,policy,cut,ratio_vs_all_qaoa,elapsed_s\n";
  for (const CompareRow& r : rows) {
    out << r.nodes << ',' << r.policy << ',';
    if (r.cut) out << format_double(*r.cut);
    out << ',';
    if (r.ratio) out << format_double(*r.ratio);
    out << ',' << format_fixed(r.elapsed_s, 6) << '\n';
  }
  return out.str();
}

std::vector<std::pair<std::string, std::string>> compare_documents(
    const std::vector<CompareRow>& rows) {
  std::vector<std::pair<std::string, std::string>> docs;
  docs.emplace_back("compare.csv", emit_compare_csv(rows));

  const std::vector<std::string> policies{"all_qaoa", "all_gw", "best_of", "gw_full", "random"};
  std::ostringstream out;
  out << "nodes";
  for (const std::string& p : policies) out << '\t' << p;
  out << '\n';
  std::vector<int> sizes;
  for (const CompareRow& r : rows)
    if (sizes.empty() || sizes.back() != r.nodes) sizes.push_back(r.nodes);
  for (int n : sizes) {
    out << n;
    for (const std::string& p : policies) {
      out << '\t';
      bool found = false;
      for (const CompareRow& r : rows)
        if (r.nodes == n && r.policy == p && r.ratio) {
          out << format_double(*r.ratio);
          found = true;
          break;
        }
      if (!found) out << "nan";
    }
    out << '\n';
  }
  docs.emplace_back("compare_plot.tsv", out.str());
  return docs;
}

}  // namespace maxcut
