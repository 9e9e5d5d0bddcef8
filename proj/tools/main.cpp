#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "routesim/routesim.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace routesim;
using cli::RunManifest;

namespace {

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Shortest decimal form that parses back to the same double, for replayable
// command lines.
std::string fmt_exact(double v) { return nlohmann::json(v).dump(); }

std::string show_information(double nats, bool log2) {
  if (log2) return fmt_g(nats / std::numbers::ln2) + " bits";
  return fmt_g(nats) + " nats";
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::vector<double> parse_alpha_list(const std::string& spec) {
  std::vector<double> alphas;
  for (const auto& tok : split(spec, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty())
      throw std::invalid_argument("alpha list: '" + tok + "' is not a number");
    alphas.push_back(v);
  }
  if (alphas.empty()) throw std::invalid_argument("alpha list is empty");
  return alphas;
}

// Node selection spec: "all", "random:N" (N distinct nodes drawn from the
// run seed) or a comma list of node labels.
std::vector<NodeId> parse_selection(const std::string& spec, const LabelMap& labels,
                                    std::uint64_t seed, std::uint64_t stream) {
  std::size_t n = labels.size();
  std::vector<NodeId> ids;

  if (spec == "all") {
    ids.resize(n);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    return ids;
  }

  if (spec.rfind("random:", 0) == 0) {
    std::string count = spec.substr(7);
    bool digits = !count.empty() &&
                  count.find_first_not_of("0123456789") == std::string::npos;
    unsigned long long k = 0;
    if (digits) {
      try {
        k = std::stoull(count);
      } catch (const std::out_of_range&) {
        digits = false;
      }
    }
    if (!digits || k == 0 || k > n)
      throw std::invalid_argument("selection '" + spec + "': need a count between 1 and " +
                                  std::to_string(n));
    auto rng = seeded_rng(seed, stream);
    for (std::uint64_t v : sample_without_replacement(n, k, rng))
      ids.push_back(static_cast<NodeId>(v));
    return ids;
  }

  std::set<NodeId> seen;
  for (const auto& tok : split(spec, ',')) {
    if (tok.empty()) throw std::invalid_argument("selection '" + spec + "' has an empty entry");
    auto id = labels.find(tok);
    if (!id) throw std::invalid_argument("selection names unknown node '" + tok + "'");
    if (!seen.insert(*id).second)
      throw std::invalid_argument("selection lists node '" + tok + "' twice");
    ids.push_back(*id);
  }
  if (ids.empty()) throw std::invalid_argument("selection is empty");
  return ids;
}

std::vector<std::string> labels_of(const std::vector<NodeId>& ids, const LabelMap& labels) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (NodeId v : ids) out.push_back(labels.label(v));
  return out;
}

struct LoadedFile {
  std::string path;
  std::string body;
  std::string digest;
};

LoadedFile load_file(const std::string& path) {
  LoadedFile f;
  f.path = path;
  f.body = cli::read_text_file(path);
  f.digest = cli::fnv1a64(f.body);
  return f;
}

ordered_json metrics_json(const TopologyMetrics& m) {
  ordered_json j;
  j["nodes"] = m.node_count;
  j["edges"] = m.edge_count;
  j["avg_degree"] = m.avg_degree;
  j["heterogeneity"] = m.heterogeneity;
  j["clustering"] = m.clustering;
  j["no_triples"] = m.no_triples;
  j["gamma"] = m.gamma ? ordered_json(*m.gamma) : ordered_json(nullptr);
  return j;
}

std::string length_csv(const Histogram& h) {
  std::string s = "h,probability\n";
  for (const auto& [hops, p] : h.bins) s += std::to_string(hops) + "," + fmt_g(p) + "\n";
  return s;
}

std::string profile_csv(const HopDegreeProfile& prof) {
  std::string s = "h,k,p_h_k\n";
  for (std::size_t h = 0; h < prof.per_hop.size(); ++h)
    for (const auto& [k, p] : prof.per_hop[h].bins)
      s += std::to_string(h) + "," + std::to_string(k) + "," + fmt_g(p) + "\n";
  return s;
}

std::string entropy_csv(const std::vector<double>& entropy) {
  std::string s = "h,entropy\n";
  for (std::size_t h = 0; h < entropy.size(); ++h)
    s += std::to_string(h) + "," + fmt_g(entropy[h]) + "\n";
  return s;
}

std::string sweep_csv(const SweepTable& table) {
  std::string s = "alpha,mean_len,distance,avg_degree,gamma,clustering,heterogeneity\n";
  for (const auto& row : table.rows) {
    const auto& m = row.sampled_metrics;
    s += fmt_g(row.alpha) + "," + fmt_g(row.mean_route_length) + "," + fmt_g(row.distance) +
         "," + fmt_g(m.avg_degree) + "," + (m.gamma ? fmt_g(*m.gamma) : "nan") + "," +
         fmt_g(m.clustering) + "," + fmt_g(m.heterogeneity) + "\n";
  }
  s += "# best alpha " + fmt_g(table.rows[table.best_index].alpha) + "\n";
  return s;
}

void print_metrics(const TopologyMetrics& m) {
  std::cout << "nodes: " << m.node_count << "\n";
  std::cout << "edges: " << m.edge_count << "\n";
  std::cout << "avg degree: " << fmt_g(m.avg_degree) << "\n";
  std::cout << "heterogeneity: " << fmt_g(m.heterogeneity) << "\n";
  std::cout << "clustering: " << fmt_g(m.clustering) << "\n";
  std::cout << "gamma: " << (m.gamma ? fmt_g(*m.gamma) : "undefined") << "\n";
}

struct GenOpts {
  std::string graph = "ba";
  std::size_t nodes = 0;
  std::size_t attach = 3;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;
  std::string output;
};

GraphModel graph_model_from_string(const std::string& name) {
  if (name == "ba") return GraphModel::ba;
  if (name == "er") return GraphModel::er;
  throw std::invalid_argument("unknown graph model '" + name + "'; expected ba or er");
}

int cmd_gen(const GenOpts& o) {
  GenSpec spec;
  spec.kind = graph_model_from_string(o.graph);
  spec.nodes = o.nodes;
  spec.attach = o.attach;
  spec.edge_prob = o.edge_prob;
  spec.seed = o.seed;
  Topology t = generate(spec);

  std::ostringstream body;
  write_edge_list(t, body);
  fs::path out{o.output};
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  cli::write_text_file(out, body.str());

  RunManifest m;
  m.command = "gen";
  m.parameters["graph"] = o.graph;
  m.parameters["nodes"] = o.nodes;
  if (spec.kind == GraphModel::ba) m.parameters["attach"] = o.attach;
  if (spec.kind == GraphModel::er) m.parameters["edge_prob"] = o.edge_prob;
  m.parameters["seed"] = o.seed;
  m.parameters["output"] = o.output;
  m.argv = {"gen", "--graph", o.graph, "--nodes", std::to_string(o.nodes)};
  if (spec.kind == GraphModel::ba) {
    m.argv.push_back("--attach");
    m.argv.push_back(std::to_string(o.attach));
  } else {
    m.argv.push_back("--edge-prob");
    m.argv.push_back(fmt_exact(o.edge_prob));
  }
  m.argv.push_back("--seed");
  m.argv.push_back(std::to_string(o.seed));
  m.argv.push_back("--output");
  m.argv.push_back(o.output);
  m.add_output(out, body.str());
  m.write(o.output + ".manifest.json");

  std::cout << "graph: " << o.graph << "\n";
  std::cout << "nodes: " << t.node_count() << "\n";
  std::cout << "edges: " << t.edge_count() << "\n";
  std::cout << "wrote: " << o.output << "\n";
  return 0;
}

struct SimOpts {
  std::string graph_file;
  std::string model = "uspm";
  double alpha = 0.0;
  double pareto_min = 10.0;
  double pareto_max = 0.0;
  std::string sources = "all";
  std::string destinations = "all";
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out_dir = ".";
};

// Shared by simulate and sweep: resolved experiment plus the strings that
// reproduce it.
struct PreparedRun {
  EdgeListData graph;
  LoadedFile graph_file;
  ExperimentConfig cfg;
  std::vector<std::string> source_labels;
  std::vector<std::string> destination_labels;
};

PreparedRun prepare_run(const SimOpts& o) {
  PreparedRun run;
  run.graph_file = load_file(o.graph_file);
  std::istringstream in(run.graph_file.body);
  run.graph = parse_edge_list_labeled(in);

  run.cfg.model =
      ModelSpec{model_kind_from_string(o.model), o.alpha, o.pareto_min, o.pareto_max};
  run.cfg.sources = parse_selection(o.sources, run.graph.labels, o.seed, 1);
  run.cfg.destinations = parse_selection(o.destinations, run.graph.labels, o.seed, 2);
  run.cfg.repetitions = o.reps;
  run.cfg.base_seed = o.seed;
  run.source_labels = labels_of(run.cfg.sources, run.graph.labels);
  run.destination_labels = labels_of(run.cfg.destinations, run.graph.labels);
  return run;
}

// Manifest parameters and argv shared by simulate and sweep. The argv pins
// the resolved node lists, so a replay never re-samples.
void describe_run(RunManifest& m, const SimOpts& o, const PreparedRun& run,
                  std::size_t repetitions) {
  const ModelSpec& model = run.cfg.model;
  m.parameters["graph_file"] = o.graph_file;
  m.parameters["model"] = std::string(to_string(model.kind));
  if (model.kind == ModelKind::lim || model.kind == ModelKind::pfm)
    m.parameters["alpha"] = model.alpha;
  if (model.kind == ModelKind::pfm) {
    m.parameters["pareto_min"] = model.pareto_min;
    m.parameters["pareto_max"] = model.resolved_pareto_max(run.graph.topology.node_count());
  }
  m.parameters["sources"] = run.source_labels;
  m.parameters["destinations"] = run.destination_labels;
  m.parameters["repetitions"] = repetitions;
  m.parameters["seed"] = o.seed;

  m.argv = {std::string(m.command), "--graph-file", o.graph_file, "--model",
            std::string(to_string(model.kind))};
  if (model.kind == ModelKind::lim || model.kind == ModelKind::pfm) {
    m.argv.push_back("--alpha");
    m.argv.push_back(fmt_exact(model.alpha));
  }
  if (model.kind == ModelKind::pfm) {
    m.argv.push_back("--pareto-min");
    m.argv.push_back(fmt_exact(model.pareto_min));
    m.argv.push_back("--pareto-max");
    m.argv.push_back(fmt_exact(model.resolved_pareto_max(run.graph.topology.node_count())));
  }
  m.argv.push_back("--sources");
  m.argv.push_back(join(run.source_labels, ','));
  m.argv.push_back("--destinations");
  m.argv.push_back(join(run.destination_labels, ','));
  m.argv.push_back("--reps");
  m.argv.push_back(std::to_string(repetitions));
  m.argv.push_back("--seed");
  m.argv.push_back(std::to_string(o.seed));
  m.inputs.emplace_back(run.graph_file.path, run.graph_file.digest);
}

int cmd_simulate(const SimOpts& o) {
  PreparedRun run = prepare_run(o);
  auto res = run_experiment(run.graph.topology, run.cfg, o.threads);

  fs::path dir{o.out_dir};
  fs::create_directories(dir);

  std::ostringstream routes_body;
  write_traces(res.routes, routes_body, &run.graph.labels);
  std::string lengths = length_csv(res.length_distribution);

  ordered_json summary;
  summary["command"] = "simulate";
  summary["version"] = kVersion;
  summary["graph"] = {{"path", o.graph_file},
                      {"nodes", run.graph.topology.node_count()},
                      {"edges", run.graph.topology.edge_count()}};
  summary["model"] = ordered_json::object();
  summary["model"]["name"] = std::string(to_string(run.cfg.model.kind));
  if (run.cfg.model.kind == ModelKind::lim || run.cfg.model.kind == ModelKind::pfm)
    summary["model"]["alpha"] = run.cfg.model.alpha;
  if (run.cfg.model.kind == ModelKind::pfm) {
    summary["model"]["pareto_min"] = run.cfg.model.pareto_min;
    summary["model"]["pareto_max"] =
        run.cfg.model.resolved_pareto_max(run.graph.topology.node_count());
  }
  summary["seed"] = o.seed;
  summary["sources"] = run.source_labels;
  summary["destinations"] = run.destination_labels;
  summary["pairs"] = res.pair_count;
  summary["repetitions"] = res.repetitions_run;
  summary["route_count"] = res.routes.size();
  summary["mean_route_length"] = res.mean_route_length;
  summary["unreachable_pairs"] = res.unreachable_pairs;
  summary["sampled_metrics"] = metrics_json(res.sampled_metrics);
  std::string summary_body = summary.dump(2) + "\n";

  RunManifest m;
  m.command = "simulate";
  describe_run(m, o, run, res.repetitions_run);
  cli::write_text_file(dir / "routes.txt", routes_body.str());
  m.add_output(dir / "routes.txt", routes_body.str());
  cli::write_text_file(dir / "length_distribution.csv", lengths);
  m.add_output(dir / "length_distribution.csv", lengths);
  cli::write_text_file(dir / "simulate_summary.json", summary_body);
  m.add_output(dir / "simulate_summary.json", summary_body);
  m.write(dir / "simulate_manifest.json");

  std::cout << "nodes: " << run.graph.topology.node_count() << "\n";
  std::cout << "edges: " << run.graph.topology.edge_count() << "\n";
  std::cout << "pairs: " << res.pair_count << "\n";
  std::cout << "repetitions: " << res.repetitions_run << "\n";
  std::cout << "mean route length: " << fmt_g(res.mean_route_length) << "\n";
  std::cout << "unreachable pairs: " << res.unreachable_pairs << "\n";
  std::cout << "out-dir: " << o.out_dir << "\n";
  return 0;
}

struct AnalyzeOpts {
  std::string traces;
  bool common_destinations = false;
  bool log2 = false;
  std::string out_dir = ".";
};

int cmd_analyze(const AnalyzeOpts& o) {
  LoadedFile file = load_file(o.traces);
  std::istringstream in(file.body);
  TraceDataset ds = parse_traces(in);
  if (o.common_destinations) ds = common_destination_filter(ds);

  auto metrics = compute_metrics(ds.topology);
  auto lengths = length_distribution(ds.routes);
  auto prof = hop_degree_profile(ds.routes, ds.topology);
  double length_entropy = entropy(lengths);

  fs::path dir{o.out_dir};
  fs::create_directories(dir);

  ordered_json summary;
  summary["command"] = "analyze";
  summary["version"] = kVersion;
  summary["input"] = {{"path", o.traces}, {"fnv1a64", file.digest}};
  summary["common_destinations"] = o.common_destinations;
  summary["parse"] = {{"routes_kept", ds.stats.routes_kept},
                      {"unresolved_routes_dropped", ds.stats.unresolved_routes_dropped},
                      {"short_routes_dropped", ds.stats.short_routes_dropped},
                      {"repeated_hops_collapsed", ds.stats.repeated_hops_collapsed},
                      {"self_loops_dropped", ds.stats.build.self_loops_dropped},
                      {"duplicate_edges_dropped", ds.stats.build.duplicate_edges_dropped}};
  summary["topology"] = metrics_json(metrics);
  summary["sources"] = ds.sources.size();
  summary["destinations"] = ds.destinations.size();
  summary["route_count"] = ds.routes.size();
  summary["mean_route_length"] = lengths.mean();
  summary["route_length_entropy"] = length_entropy;
  std::string summary_body = summary.dump(2) + "\n";

  RunManifest m;
  m.command = "analyze";
  m.parameters["traces"] = o.traces;
  m.parameters["common_destinations"] = o.common_destinations;
  m.argv = {"analyze", "--traces", o.traces};
  if (o.common_destinations) m.argv.push_back("--common-destinations");
  m.inputs.emplace_back(file.path, file.digest);

  std::string lengths_body = length_csv(lengths);
  std::string profile_body = profile_csv(prof);
  std::string entropy_body = entropy_csv(prof.entropy);
  cli::write_text_file(dir / "length_distribution.csv", lengths_body);
  m.add_output(dir / "length_distribution.csv", lengths_body);
  cli::write_text_file(dir / "hop_profile.csv", profile_body);
  m.add_output(dir / "hop_profile.csv", profile_body);
  cli::write_text_file(dir / "hop_entropy.csv", entropy_body);
  m.add_output(dir / "hop_entropy.csv", entropy_body);
  cli::write_text_file(dir / "analyze_summary.json", summary_body);
  m.add_output(dir / "analyze_summary.json", summary_body);
  m.write(dir / "analyze_manifest.json");

  std::cout << "routes kept: " << ds.stats.routes_kept << "\n";
  std::cout << "routes dropped: "
            << ds.stats.unresolved_routes_dropped + ds.stats.short_routes_dropped << "\n";
  print_metrics(metrics);
  std::cout << "mean route length: " << fmt_g(lengths.mean()) << "\n";
  std::cout << "route length entropy: " << show_information(length_entropy, o.log2) << "\n";
  std::cout << "out-dir: " << o.out_dir << "\n";
  return 0;
}

struct SweepOpts {
  SimOpts sim;
  std::string alphas;
  std::string reference;
  bool log2 = false;
};

int cmd_sweep(const SweepOpts& o) {
  ModelKind kind = model_kind_from_string(o.sim.model);
  if (kind != ModelKind::lim && kind != ModelKind::pfm)
    throw std::invalid_argument("sweep varies alpha, which only lim and pfm use");

  std::vector<double> alphas = parse_alpha_list(o.alphas);
  LoadedFile ref_file = load_file(o.reference);
  std::istringstream ref_in(ref_file.body);
  TraceDataset ref = parse_traces(ref_in);
  Histogram reference = length_distribution(ref.routes);

  PreparedRun run = prepare_run(o.sim);
  SweepTable table =
      alpha_sweep(run.graph.topology, run.cfg, alphas, reference, o.sim.threads);
  const SweepRow& best = table.rows[table.best_index];

  fs::path dir{o.sim.out_dir};
  fs::create_directories(dir);
  std::string csv = sweep_csv(table);

  ordered_json summary;
  summary["command"] = "sweep";
  summary["version"] = kVersion;
  summary["graph"] = {{"path", o.sim.graph_file},
                      {"nodes", run.graph.topology.node_count()},
                      {"edges", run.graph.topology.edge_count()}};
  summary["model"] = std::string(to_string(kind));
  summary["reference"] = {{"path", o.reference},
                          {"fnv1a64", ref_file.digest},
                          {"routes", ref.routes.size()},
                          {"mean_route_length", reference.mean()}};
  summary["seed"] = o.sim.seed;
  summary["alphas"] = alphas;
  summary["rows"] = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["alpha"] = row.alpha;
    r["mean_route_length"] = row.mean_route_length;
    r["distance"] = row.distance;
    r["unreachable_pairs"] = row.unreachable_pairs;
    r["sampled_metrics"] = metrics_json(row.sampled_metrics);
    summary["rows"].push_back(std::move(r));
  }
  summary["best_alpha"] = best.alpha;
  summary["best_distance"] = best.distance;
  std::string summary_body = summary.dump(2) + "\n";

  RunManifest m;
  m.command = "sweep";
  describe_run(m, o.sim, run, run.cfg.resolved_repetitions());
  m.parameters["alphas"] = alphas;
  m.parameters["reference"] = o.reference;
  m.argv.push_back("--alphas");
  m.argv.push_back(o.alphas);
  m.argv.push_back("--reference");
  m.argv.push_back(o.reference);
  m.inputs.emplace_back(ref_file.path, ref_file.digest);

  cli::write_text_file(dir / "sweep.csv", csv);
  m.add_output(dir / "sweep.csv", csv);
  cli::write_text_file(dir / "sweep_summary.json", summary_body);
  m.add_output(dir / "sweep_summary.json", summary_body);
  m.write(dir / "sweep_manifest.json");

  std::cout << "rows: " << table.rows.size() << "\n";
  std::cout << "best alpha: " << fmt_g(best.alpha) << "\n";
  std::cout << "best distance: " << show_information(best.distance, o.log2) << "\n";
  std::cout << "out-dir: " << o.sim.out_dir << "\n";
  return 0;
}

void add_run_flags(CLI::App* cmd, SimOpts& o) {
  cmd->add_option("--graph-file", o.graph_file, "edge list file to route on")->required();
  cmd->add_option("--alpha", o.alpha, "degree bias (lim) or tail exponent (pfm)");
  cmd->add_option("--pareto-min", o.pareto_min, "pfm lower weight bound (default 10)");
  cmd->add_option("--pareto-max", o.pareto_max,
                  "pfm upper weight bound (default: node count)");
  cmd->add_option("--sources", o.sources, "'all', 'random:N' or comma list of labels");
  cmd->add_option("--destinations", o.destinations, "'all', 'random:N' or comma list of labels");
  cmd->add_option("--reps", o.reps, "repetitions (default 1; 100 for pfm)");
  cmd->add_option("--seed", o.seed, "seed for every random choice of the run");
  cmd->add_option("--threads", o.threads, "worker threads (never changes results)");
  cmd->add_option("--out-dir", o.out_dir, "output directory (default .)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"replay and model internet routes over measured or synthetic graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  GenOpts gen_opts;
  auto* gen = app.add_subcommand("gen", "write a synthetic graph as an edge list");
  gen->add_option("--graph", gen_opts.graph, "ba or er");
  gen->add_option("--nodes", gen_opts.nodes, "node count")->required();
  gen->add_option("--attach", gen_opts.attach, "edges per new node (ba)");
  gen->add_option("--edge-prob", gen_opts.edge_prob, "edge probability (er)");
  gen->add_option("--seed", gen_opts.seed, "generator seed");
  gen->add_option("--output", gen_opts.output, "edge list file to write")->required();

  SimOpts sim_opts;
  auto* sim = app.add_subcommand("simulate", "route source/destination pairs under a model");
  sim->add_option("--model", sim_opts.model, "uspm, ndm, lim or pfm");
  add_run_flags(sim, sim_opts);

  AnalyzeOpts an_opts;
  auto* an = app.add_subcommand("analyze", "measure routes from a trace file");
  an->add_option("--traces", an_opts.traces, "trace file, one route per line")->required();
  an->add_flag("--common-destinations", an_opts.common_destinations,
               "keep only destinations every source reaches");
  an->add_flag("--log2", an_opts.log2, "print entropies in bits (files stay in nats)");
  an->add_option("--out-dir", an_opts.out_dir, "output directory (default .)");

  SweepOpts sw_opts;
  auto* sw = app.add_subcommand("sweep", "score an alpha grid against reference traces");
  sw->add_option("--model", sw_opts.sim.model, "lim or pfm")->default_val("lim");
  sw->add_option("--alphas", sw_opts.alphas, "comma list of alpha values")->required();
  sw->add_option("--reference", sw_opts.reference, "trace file to match")->required();
  sw->add_flag("--log2", sw_opts.log2, "print the best distance in bits");
  add_run_flags(sw, sw_opts.sim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_opts);
    if (sim->parsed()) return cmd_simulate(sim_opts);
    if (an->parsed()) return cmd_analyze(an_opts);
    if (sw->parsed()) return cmd_sweep(sw_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
