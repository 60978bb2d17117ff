// epithresh: spectral epidemic-threshold toolkit.
//
//   epithresh eigen      --graph karate
//   epithresh threshold  --graph karate --pb 0.05 --pd 0.4
//   epithresh centrality --graph house --measure all
//   epithresh correlate  --graph karate
//   epithresh simulate   --graph karate --pb 0.05 --pd 0.4 --pd 0.2 -K 200 -T 100 --seed 7
//   epithresh vaccinate  --graph karate --method greedy --measure spread -k 8 --seed 1
//   epithresh vaccinate  --graph karate --method greedy -k 8 --tie-break lowest
//   epithresh heatmap    --graph karate --measure spread --out-format dot

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epithresh/centrality.hpp"
#include "epithresh/epidemic.hpp"
#include "epithresh/export.hpp"
#include "epithresh/invariants.hpp"
#include "epithresh/io.hpp"
#include "epithresh/named_graphs.hpp"
#include "epithresh/sis.hpp"
#include "epithresh/spectral.hpp"
#include "epithresh/vaccinate.hpp"

namespace fs = std::filesystem;
using namespace epithresh;

namespace {

struct GraphOptions {
  std::string named;
  std::string input;
  std::string format;

  void attach(CLI::App* app) {
    auto* g = app->add_option("--graph", named, "Built-in graph: karate, house, kn:N, cn:N, pn:N, sn:N, kbt:R,S");
    auto* i = app->add_option("--input", input, "Graph file path")->check(CLI::ExistingFile);
    g->excludes(i);
    app->add_option("--format", format, "Input format: edgelist or gml (default: from extension)")
        ->check(CLI::IsMember({"edgelist", "gml"}));
  }

  std::string source() const { return named.empty() ? input : named; }

  Graph load() const {
    if (!named.empty()) {
      // A bad built-in name is a usage error, not a data error.
      try {
        return build_named(NamedGraphSpec::parse(named));
      } catch (const GraphError& e) {
        throw std::invalid_argument(e.what());
      }
    }
    if (input.empty()) throw CLI::ValidationError("graph", "one of --graph or --input is required");
    GraphFormat fmt = GraphFormat::edge_list;
    if (!format.empty()) {
      fmt = parse_graph_format(format);
    } else if (fs::path(input).extension() == ".gml") {
      fmt = GraphFormat::gml;
    }
    ParsedGraph parsed = read_graph_file(input, fmt);
    if (parsed.dropped.duplicate_edges + parsed.dropped.self_loops > 0) {
      std::cerr << "warning: dropped " << parsed.dropped.duplicate_edges << " duplicate edge(s) and "
                << parsed.dropped.self_loops << " self-loop(s)\n";
    }
    return std::move(parsed.graph);
  }
};

struct EigenOptions {
  EigenSettings settings;

  void attach(CLI::App* app) {
    app->add_option("--tol", settings.tolerance, "Eigen-residual tolerance")->capture_default_str();
    app->add_option("--max-iter", settings.max_iterations, "Power-iteration limit")->capture_default_str();
  }

  Json json() const {
    Json j;
    j["tolerance"] = settings.tolerance;
    j["max_iterations"] = settings.max_iterations;
    j["shift"] = settings.shift;
    return j;
  }
};

struct OutputOptions {
  std::string path;
  std::string format;

  void attach(CLI::App* app, std::vector<std::string> formats, std::string fallback) {
    format = std::move(fallback);
    app->add_option("-o,--output", path, "Output file (default: stdout)");
    app->add_option("--out-format", format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
  }

  void write(const std::string& text) const { write_to(path, text); }

  static void write_to(const std::string& path, const std::string& text) {
    if (path.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
  }
};

Provenance make_provenance(const std::string& command, const GraphOptions& go, const Graph& g,
                           Json parameters) {
  Provenance p;
  p.command = command;
  p.graph_source = go.source();
  p.graph_digest = g.digest();
  p.parameters = std::move(parameters);
  return p;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Measure> parse_measures(const std::vector<std::string>& names) {
  std::vector<Measure> out;
  for (const auto& n : names) {
    if (n == "all") return {kAllMeasures.begin(), kAllMeasures.end()};
    out.push_back(parse_measure(n));
  }
  return out;
}

CentralityVector centrality_for(Measure m, const Graph& g, const EigenSettings& s, std::size_t threads) {
  try {
    return compute_centrality(m, g, s, threads);
  } catch (const GraphError& e) {
    throw std::runtime_error(std::string(to_string(m)) + " centrality: " + e.what());
  }
}

std::string pd_suffix(double pd) { return "_pd" + format_number(pd); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral epidemic thresholds, SIS simulation, spread centrality and vaccination"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (0: EPITHRESH_THREADS or hardware)");

  // eigen
  auto* eigen = app.add_subcommand("eigen", "Largest adjacency eigenvalue");
  GraphOptions eigen_graph;
  EigenOptions eigen_opts;
  OutputOptions eigen_out;
  bool with_vector = false;
  eigen_graph.attach(eigen);
  eigen_opts.attach(eigen);
  eigen_out.attach(eigen, {"json", "csv"}, "json");
  eigen->add_flag("--eigenvector", with_vector, "Include the principal eigenvector");

  // threshold
  auto* threshold = app.add_subcommand("threshold", "Epidemic threshold, prediction, bounds and lingering conditions");
  GraphOptions thr_graph;
  EigenOptions thr_opts;
  OutputOptions thr_out;
  EpidemicParams thr_params;
  long chi_budget_ms = 10'000;
  thr_graph.attach(threshold);
  thr_opts.attach(threshold);
  thr_out.attach(threshold, {"json"}, "json");
  threshold->add_option("--pb", thr_params.birth, "Birth rate in (0,1)")->required();
  threshold->add_option("--pd", thr_params.death, "Death rate in (0,1)")->required();
  threshold->add_option("--chi-budget-ms", chi_budget_ms, "Time budget for the chromatic number")
      ->capture_default_str();

  // centrality
  auto* centrality = app.add_subcommand("centrality", "Per-vertex centrality table");
  GraphOptions cen_graph;
  EigenOptions cen_opts;
  OutputOptions cen_out;
  std::vector<std::string> cen_measures{"all"};
  cen_graph.attach(centrality);
  cen_opts.attach(centrality);
  cen_out.attach(centrality, {"csv", "json"}, "csv");
  centrality->add_option("--measure", cen_measures, "spread|degree|closeness|betweenness|eigenvector|all")
      ->capture_default_str();

  // correlate
  auto* correlate = app.add_subcommand("correlate", "Spearman rank correlation among the five centralities");
  GraphOptions cor_graph;
  EigenOptions cor_opts;
  OutputOptions cor_out;
  cor_graph.attach(correlate);
  cor_opts.attach(correlate);
  cor_out.attach(correlate, {"csv", "json"}, "csv");

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "SIS simulation averaged over seeds and repetitions");
  GraphOptions sim_graph;
  OutputOptions sim_out;
  double sim_pb = 0.05;
  std::vector<double> sim_pds;
  std::size_t sim_k = 200;
  std::size_t sim_t = 100;
  std::uint64_t sim_seed = 1;
  bool sim_per_seed = false;
  std::vector<std::string> sim_seed_labels;
  sim_graph.attach(simulate_cmd);
  sim_out.attach(simulate_cmd, {"csv", "json"}, "csv");
  simulate_cmd->add_option("--pb", sim_pb, "Birth rate in (0,1)")->capture_default_str();
  simulate_cmd->add_option("--pd", sim_pds, "Death rate(s) in (0,1); one curve per value")->required();
  simulate_cmd->add_option("-K,--repetitions", sim_k, "Runs per seed vertex")->capture_default_str();
  simulate_cmd->add_option("-T,--days", sim_t, "Days per run")->capture_default_str();
  simulate_cmd->add_option("--seed", sim_seed, "Master RNG seed")->capture_default_str();
  simulate_cmd->add_flag("--per-seed", sim_per_seed, "Also output per-seed curves");
  simulate_cmd->add_option("--seed-vertices", sim_seed_labels, "Seed vertex labels (default: all)");

  // vaccinate
  auto* vacc = app.add_subcommand("vaccinate", "Batch (method 1) or greedy (method 2) vertex removal");
  GraphOptions vac_graph;
  EigenOptions vac_opts;
  OutputOptions vac_out;
  std::string vac_method = "greedy";
  std::string vac_measure = "spread";
  std::size_t vac_k = 0;
  std::size_t vac_trials = 1;
  std::uint64_t vac_seed = 1;
  std::string vac_ties = "random";
  vac_graph.attach(vacc);
  vac_opts.attach(vacc);
  vac_out.attach(vacc, {"json", "csv"}, "json");
  vacc->add_option("--method", vac_method, "batch|method1|greedy|method2|compare")
      ->check(CLI::IsMember({"batch", "method1", "greedy", "method2", "compare"}))
      ->capture_default_str();
  vacc->add_option("--measure", vac_measure, "Centrality used to pick vertices")->capture_default_str();
  vacc->add_option("-k", vac_k, "Number of vertices to remove")->required();
  vacc->add_option("--trials", vac_trials, "Tie-break randomizations (compare)")->capture_default_str();
  vacc->add_option("--seed", vac_seed, "Tie-break seed (master seed for compare)")->capture_default_str();
  vacc->add_option("--tie-break", vac_ties, "random or lowest (smallest vertex id); compare is always random")
      ->check(CLI::IsMember({"random", "lowest"}))
      ->capture_default_str();

  // heatmap
  auto* heatmap = app.add_subcommand("heatmap", "Per-vertex colors for external plotting");
  GraphOptions heat_graph;
  EigenOptions heat_opts;
  OutputOptions heat_out;
  std::string heat_measure = "spread";
  heat_graph.attach(heatmap);
  heat_opts.attach(heatmap);
  heat_out.attach(heatmap, {"dot", "json"}, "dot");
  heatmap->add_option("--measure", heat_measure, "Centrality to color by")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every usage error exits 2.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*eigen) {
      const Graph g = eigen_graph.load();
      const SpectralResult r = largest_eigenvalue(g, eigen_opts.settings);
      if (eigen_out.format == "csv") {
        Json params;
        params["eigen"] = eigen_opts.json();
        std::string text = csv_comment_block(make_provenance("eigen", eigen_graph, g, params));
        text += "lambda1,residual,iterations\n" + format_number(r.lambda1) + "," +
                format_number(r.residual) + "," + std::to_string(r.iterations) + "\n";
        eigen_out.write(text);
      } else {
        Json params;
        params["eigen"] = eigen_opts.json();
        Json j;
        j["provenance"] = to_json(make_provenance("eigen", eigen_graph, g, params));
        j["result"] = to_json(r, with_vector);
        if (with_vector) {
          Json labels = Json::array();
          for (const auto& l : g.labels()) labels.push_back(l);
          j["labels"] = std::move(labels);
        }
        eigen_out.write(json_text(j));
      }
    } else if (*threshold) {
      thr_params.validate();
      const Graph g = thr_graph.load();
      if (g.size() == 0) throw GraphError("threshold undefined (lambda_1 = 0 on an edgeless graph)");
      const BoundsReport bounds =
          eigen_bounds(g, thr_opts.settings, std::chrono::milliseconds(chi_budget_ms));
      const Outcome outcome = predict_outcome(bounds.lambda1, thr_params);
      const LingerReport linger = lingering_conditions(g, thr_params);

      Json params;
      params["pb"] = thr_params.birth;
      params["pd"] = thr_params.death;
      params["chi_budget_ms"] = chi_budget_ms;
      params["eigen"] = thr_opts.json();
      Json j;
      j["provenance"] = to_json(make_provenance("threshold", thr_graph, g, params));
      j["n"] = g.order();
      j["m"] = g.size();
      j["connected"] = is_connected(g);
      j["lambda1"] = bounds.lambda1;
      j["threshold"] = 1.0 / bounds.lambda1;
      j["ratio_pb_over_pd"] = thr_params.birth / thr_params.death;
      j["nlds_prediction"] = to_string(outcome);
      j["bounds"] = to_json(bounds);
      j["lingering_conditions"] = to_json(linger);
      thr_out.write(json_text(j));
    } else if (*centrality) {
      const Graph g = cen_graph.load();
      std::vector<CentralityVector> columns;
      for (Measure m : parse_measures(cen_measures)) {
        columns.push_back(centrality_for(m, g, cen_opts.settings, threads));
      }
      Json params;
      Json names = Json::array();
      for (const auto& c : columns) names.push_back(to_string(c.measure));
      params["measures"] = names;
      params["eigen"] = cen_opts.json();
      const Provenance prov = make_provenance("centrality", cen_graph, g, params);
      if (cen_out.format == "json") {
        Json j;
        j["provenance"] = to_json(prov);
        j["vertices"] = centrality_json(g, columns);
        cen_out.write(json_text(j));
      } else {
        cen_out.write(csv_comment_block(prov) + centrality_csv(g, columns));
      }
    } else if (*correlate) {
      const Graph g = cor_graph.load();
      if (!is_connected(g)) throw GraphError("correlate requires a connected graph");
      std::vector<CentralityVector> columns;
      for (Measure m : kAllMeasures) columns.push_back(centrality_for(m, g, cor_opts.settings, threads));
      const auto matrix = correlation_matrix(columns);
      Json params;
      params["eigen"] = cor_opts.json();
      const Provenance prov = make_provenance("correlate", cor_graph, g, params);
      if (cor_out.format == "json") {
        Json j;
        j["provenance"] = to_json(prov);
        Json names = Json::array();
        for (Measure m : kAllMeasures) names.push_back(to_string(m));
        j["measures"] = names;
        j["spearman"] = matrix;
        cor_out.write(json_text(j));
      } else {
        std::string text = csv_comment_block(prov) + "measure";
        for (Measure m : kAllMeasures) text += "," + std::string(to_string(m));
        text += "\n";
        for (std::size_t i = 0; i < kAllMeasures.size(); ++i) {
          text += std::string(to_string(kAllMeasures[i]));
          for (double x : matrix[i]) text += "," + format_number(x);
          text += "\n";
        }
        cor_out.write(text);
      }
    } else if (*simulate_cmd) {
      const Graph g = sim_graph.load();
      SimulationConfig base;
      base.repetitions = sim_k;
      base.days = sim_t;
      base.master_seed = sim_seed;
      base.record_per_seed = sim_per_seed;
      base.threads = threads;
      if (!sim_seed_labels.empty()) {
        std::vector<Vertex> seeds;
        for (const auto& label : sim_seed_labels) {
          bool found = false;
          for (Vertex v = 0; v < g.order() && !found; ++v) {
            if (g.label(v) == label) {
              seeds.push_back(v);
              found = true;
            }
          }
          if (!found) throw std::invalid_argument("unknown seed vertex label '" + label + "'");
        }
        base.seed_vertices = std::move(seeds);
      }
      std::vector<EpidemicCurve> curves;
      for (double pd : sim_pds) {
        SimulationConfig cfg = base;
        cfg.params = {sim_pb, pd};
        cfg.params.validate();
        curves.push_back(simulate(g, cfg));
      }

      Json params;
      params["pb"] = sim_pb;
      params["pd"] = sim_pds;
      params["repetitions"] = sim_k;
      params["days"] = sim_t;
      params["seed"] = sim_seed;
      params["per_seed"] = sim_per_seed;
      params["seed_vertices"] = sim_seed_labels.empty() ? Json("all") : Json(sim_seed_labels);
      const Provenance prov = make_provenance("simulate", sim_graph, g, params);

      if (sim_out.format == "json") {
        Json j;
        j["provenance"] = to_json(prov);
        Json arr = Json::array();
        for (const auto& c : curves) arr.push_back(to_json(g, c));
        j["curves"] = std::move(arr);
        sim_out.write(json_text(j));
      } else if (curves.size() == 1) {
        sim_out.write(csv_comment_block(prov) + curve_csv(g, curves.front()));
      } else if (!sim_out.path.empty()) {
        const fs::path base_path(sim_out.path);
        for (std::size_t i = 0; i < curves.size(); ++i) {
          fs::path p = base_path.parent_path() /
                       (base_path.stem().string() + pd_suffix(sim_pds[i]) + base_path.extension().string());
          OutputOptions::write_to(p.string(), csv_comment_block(prov) + curve_csv(g, curves[i]));
          std::cerr << "wrote " << p.string() << "\n";
        }
      } else {
        if (sim_per_seed) {
          throw std::invalid_argument("--per-seed with several --pd values needs --output (one file per value)");
        }
        std::string text = csv_comment_block(prov) + "day";
        for (double pd : sim_pds) text += ",S_t" + pd_suffix(pd);
        text += "\n";
        for (std::size_t t = 0; t < sim_t; ++t) {
          text += std::to_string(t + 1);
          for (const auto& c : curves) text += "," + format_number(c.mean_infected[t]);
          text += "\n";
        }
        sim_out.write(text);
      }
    } else if (*vacc) {
      const Graph g = vac_graph.load();
      const Measure f = parse_measure(vac_measure);
      Json params;
      params["method"] = vac_method;
      params["measure"] = vac_measure;
      params["k"] = vac_k;
      params["trials"] = vac_trials;
      params["seed"] = vac_seed;
      params["tie_break"] = vac_ties;
      params["eigen"] = vac_opts.json();
      const Provenance prov = make_provenance("vaccinate", vac_graph, g, params);
      if (vac_method == "compare") {
        if (vac_out.format != "json") throw std::invalid_argument("compare output is JSON only");
        if (vac_ties != "random") throw std::invalid_argument("compare always breaks ties at random");
        const MethodComparison cmp =
            compare_methods(g, f, vac_k, vac_trials, vac_seed, vac_opts.settings, threads);
        Json j;
        j["provenance"] = to_json(prov);
        j["tie_seeds"] = cmp.tie_seeds;
        j["batch"] = to_json(cmp.batch);
        j["greedy"] = to_json(cmp.greedy);
        vac_out.write(json_text(j));
      } else {
        const VaccinationReport r = vaccinate(parse_vaccination_method(vac_method), g, f, vac_k,
                                              vac_seed, vac_opts.settings, threads,
                                              parse_tie_break(vac_ties));
        if (vac_out.format == "csv") {
          vac_out.write(csv_comment_block(prov) + vaccination_csv(r));
        } else {
          Json j;
          j["provenance"] = to_json(prov);
          j["report"] = to_json(r);
          vac_out.write(json_text(j));
        }
      }
    } else if (*heatmap) {
      const Graph g = heat_graph.load();
      const Measure m = parse_measure(heat_measure);
      const CentralityVector cv = centrality_for(m, g, heat_opts.settings, threads);
      if (normalize_min_max(cv.values).constant) {
        std::cerr << "warning: " << to_string(m) << " is constant on this graph; every vertex gets the mid color\n";
      }
      Json params;
      params["measure"] = heat_measure;
      params["eigen"] = heat_opts.json();
      const Provenance prov = make_provenance("heatmap", heat_graph, g, params);
      heat_out.write(heat_out.format == "json" ? json_text(heatmap_json(g, cv, prov))
                                               : heatmap_dot(g, cv, prov));
    }
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
