// qpe: positional-encoding toolkit for graphs.
//
// Subcommands: encode, distinguish, validate, family, oracle-check.
// Inputs are graph6, one record per line. JSON output is canonical
// (17-significant-digit floats, fixed key order); CSV is provided for
// spreadsheet use.
//
// Exit codes: 0 success, 2 graph parse error, 3 resource guard violation,
// 4 oracle-check deviation; anything else signals a usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpe/fixtures.hpp"
#include "qpe/graph.hpp"
#include "qpe/ground_state.hpp"
#include "qpe/harness.hpp"
#include "qpe/io.hpp"
#include "qpe/ising.hpp"
#include "qpe/ising_closed_form.hpp"
#include "qpe/linalg.hpp"
#include "qpe/simulator.hpp"
#include "qpe/walks.hpp"
#include "qpe/wl.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitOracle = 4;

struct RunConfig {
  std::string method = "rrwp";
  int steps = 8;
  std::string times_str;  // comma separated
  std::string time_grid;  // "default:K" or "random:K"
  double theta = M_PI / 5;
  double t = 1.0;
  int layers = 1;
  double delta = 0.5;
  std::string init = "uniform_edges";
  uint64_t seed = 1;
  std::string format = "json";
  bool normalize = false;

  std::vector<double> resolved_times() const {
    if (!times_str.empty()) {
      std::vector<double> out;
      std::stringstream ss(times_str);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
      return out;
    }
    if (!time_grid.empty()) {
      auto colon = time_grid.find(':');
      std::string kind = time_grid.substr(0, colon);
      int k = colon == std::string::npos ? 4 : std::stoi(time_grid.substr(colon + 1));
      if (kind == "default") return qpe::default_time_grid(k);
      if (kind == "random") return qpe::random_time_grid(k, seed);
      throw CLI::ValidationError("--time-grid", "expected default:K or random:K");
    }
    return {t};
  }

  qpe::InitSpec resolved_init() const {
    if (init == "uniform_edges") return qpe::InitSpec::uniform_edges();
    if (init == "uniform_pairs") return qpe::InitSpec::uniform_pairs();
    if (init.rfind("localized:", 0) == 0) {
      std::string rest = init.substr(10);
      auto comma = rest.find(',');
      if (comma == std::string::npos)
        return qpe::InitSpec::localized(std::stoi(rest));
      return qpe::InitSpec::localized(std::stoi(rest.substr(0, comma)),
                                      std::stoi(rest.substr(comma + 1)));
    }
    throw CLI::ValidationError(
        "--init", "expected uniform_edges, uniform_pairs or localized:i[,j]");
  }

  void write_json(qpe::JsonWriter& w) const {
    w.begin_object();
    w.key("method").value(method);
    w.key("steps").value(steps);
    w.key("times").value(resolved_times());
    w.key("theta").value(theta);
    w.key("t").value(t);
    w.key("layers").value(layers);
    w.key("delta").value(delta);
    w.key("init").value(init);
    w.key("seed").value(static_cast<long>(seed));
    w.key("format").value(format);
    w.key("normalize").value(normalize);
    w.end_object();
  }

  void apply_json_overrides(const nlohmann::json& j) {
    if (j.contains("method")) method = j["method"].get<std::string>();
    if (j.contains("steps")) steps = j["steps"].get<int>();
    if (j.contains("times")) {
      times_str.clear();
      for (double v : j["times"].get<std::vector<double>>()) {
        if (!times_str.empty()) times_str += ',';
        times_str += qpe::format_double(v);
      }
    }
    if (j.contains("time_grid")) time_grid = j["time_grid"].get<std::string>();
    if (j.contains("theta")) theta = j["theta"].get<double>();
    if (j.contains("t")) t = j["t"].get<double>();
    if (j.contains("layers")) layers = j["layers"].get<int>();
    if (j.contains("delta")) delta = j["delta"].get<double>();
    if (j.contains("init")) init = j["init"].get<std::string>();
    if (j.contains("seed")) seed = j["seed"].get<uint64_t>();
    if (j.contains("format")) format = j["format"].get<std::string>();
    if (j.contains("normalize")) normalize = j["normalize"].get<bool>();
  }
};

std::vector<std::pair<int, qpe::Graph>> read_graphs(std::istream& in, int& parse_errors) {
  std::vector<std::pair<int, qpe::Graph>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.emplace_back(lineno, qpe::parse_graph6(line));
    } catch (const qpe::Graph6ParseError& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      ++parse_errors;
    }
  }
  return out;
}

std::vector<std::pair<int, qpe::Graph>> read_graphs_path(const std::string& path,
                                                         int& parse_errors) {
  if (path == "-") return read_graphs(std::cin, parse_errors);
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("input", "cannot open " + path);
  return read_graphs(in, parse_errors);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CLI::ValidationError("--output", "cannot open " + path);
  out << content;
}

// One encoded record. Matrix-valued encoders have shape [n, n]; tensor
// encoders [K, n, n] with row-major slice values.
std::string encode_record_json(int line, const std::string& g6,
                               const RunConfig& cfg,
                               const std::vector<Eigen::MatrixXd>& slices) {
  qpe::JsonWriter w;
  w.begin_object();
  w.key("line").value(line);
  w.key("graph6").value(g6);
  w.key("config");
  cfg.write_json(w);
  int n = static_cast<int>(slices[0].rows());
  w.key("shape").begin_array();
  if (slices.size() > 1) w.value(static_cast<int>(slices.size()));
  w.value(n).value(n);
  w.end_array();
  w.key("values").begin_array();
  for (const auto& s : slices)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w.value(s(i, j));
  w.end_array();
  w.end_object();
  return w.take();
}

std::string encode_record_csv(int line, const RunConfig&,
                              const std::vector<Eigen::MatrixXd>& slices) {
  std::string out;
  for (size_t k = 0; k < slices.size(); ++k)
    for (int i = 0; i < slices[k].rows(); ++i)
      for (int j = 0; j < slices[k].cols(); ++j)
        out += std::to_string(line) + "," + std::to_string(k) + "," +
               std::to_string(i) + "," + std::to_string(j) + "," +
               qpe::format_double(slices[k](i, j)) + "\n";
  return out;
}

std::vector<Eigen::MatrixXd> run_encoder(const qpe::Graph& g, const RunConfig& cfg) {
  using namespace qpe;
  if (cfg.method == "rrwp") return rrwp(g, cfg.steps).slices;
  if (cfg.method == "cqrw1") return cqrw1(g, cfg.resolved_times()).slices;
  if (cfg.method == "cqrw2")
    return cqrw2(g, cfg.resolved_times(), cfg.resolved_init()).slices;
  if (cfg.method == "qirw2")
    return qirw2(g, cfg.steps, cfg.resolved_init()).slices;
  if (cfg.method == "xy2-corr")
    return {xy2_correlations(g, cfg.t, cfg.resolved_init())};
  if (cfg.method == "xy2-corr-locavg")
    return {xy2_correlations_localized_average(g, cfg.t)};
  if (cfg.method == "ising-p1-corr")
    return {correlation_closed_form(g, IsingModel::uniform(g), cfg.theta, cfg.t)};
  if (cfg.method == "ising-sim-corr") {
    PulseSchedule sched;
    sched.theta.assign(cfg.layers, cfg.theta);
    sched.times = cfg.resolved_times();
    if (static_cast<int>(sched.times.size()) != cfg.layers)
      sched.times.assign(cfg.layers, cfg.t);
    return {correlation_sim(g, IsingModel::uniform(g), sched)};
  }
  if (cfg.method == "gs-corr")
    return {gs_correlation(ising_ground_manifold(g, cfg.delta))};
  if (cfg.method == "time-avg") return {time_avg_transition(g)};
  throw CLI::ValidationError("--method", "unknown encoder " + cfg.method);
}

int cmd_encode(const RunConfig& cfg, const std::string& input,
               const std::string& output) {
  // streaming: one graph in memory at a time, output in input order
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) throw CLI::ValidationError("input", "cannot open " + input);
    in = &file;
  }
  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!output.empty() && output != "-") {
    out_file.open(output, std::ios::binary);
    if (!out_file) throw CLI::ValidationError("--output", "cannot open " + output);
    out = &out_file;
  }

  int parse_errors = 0, guard_errors = 0;
  if (cfg.format == "csv") *out << "graph_line,slice,row,col,value\n";
  std::string line;
  int lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      qpe::Graph g = qpe::parse_graph6(line);
      auto slices = run_encoder(g, cfg);
      if (cfg.format == "csv")
        *out << encode_record_csv(lineno, cfg, slices);
      else
        *out << encode_record_json(lineno, qpe::write_graph6(g), cfg, slices)
             << "\n";
    } catch (const qpe::Graph6ParseError& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      ++parse_errors;
    } catch (const qpe::ResourceLimitError& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      ++guard_errors;
    } catch (const std::length_error& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      ++guard_errors;
    } catch (const std::invalid_argument& e) {
      // per-graph rejection (init invalid for this graph, size too small)
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      ++guard_errors;
    } catch (const std::out_of_range& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      ++guard_errors;
    }
  }
  if (parse_errors) return kExitParse;
  if (guard_errors) return kExitGuard;
  return kExitOk;
}

int cmd_distinguish(const std::string& method_name, const std::string& input,
                    const std::string& output) {
  int parse_errors = 0;
  auto graphs = read_graphs_path(input, parse_errors);
  if (parse_errors) return kExitParse;
  if (graphs.size() < 2)
    throw CLI::ValidationError("input", "need at least two graphs");
  auto method = qpe::distinguish_method_from_name(method_name);

  qpe::JsonWriter w;
  w.begin_object();
  w.key("method").value(method_name);
  w.key("verdicts").begin_array();
  for (size_t i = 0; i < graphs.size(); ++i) {
    for (size_t j = i + 1; j < graphs.size(); ++j) {
      auto r = qpe::distinguish(graphs[i].second, graphs[j].second, method);
      w.begin_object();
      w.key("pair").begin_array().value(static_cast<int>(i)).value(
          static_cast<int>(j));
      w.end_array();
      w.key("distinguished").value(r.distinguished);
      w.key("witness").value(r.witness);
      w.key("distance").value(r.distance);
      w.end_object();
    }
  }
  w.end_array();
  w.end_object();
  write_output(output, w.take() + "\n");
  return kExitOk;
}

int cmd_validate(const std::string& input, const std::string& output) {
  int parse_errors = 0;
  auto graphs = read_graphs_path(input, parse_errors);
  std::string out;
  for (auto& [line, g] : graphs) {
    qpe::JsonWriter w;
    w.begin_object();
    w.key("line").value(line);
    w.key("n").value(g.n());
    auto p = qpe::validate_srg(g);
    w.key("srg").value(p.has_value());
    if (p) {
      w.key("params").begin_array();
      w.value(p->nu).value(p->k).value(p->lambda).value(p->mu);
      w.end_array();
    }
    w.end_object();
    out += w.take() + "\n";
  }
  write_output(output, out);
  return parse_errors ? kExitParse : kExitOk;
}

int cmd_family(const RunConfig& cfg, const std::string& encoder,
               const std::string& input, const std::string& output,
               bool srg_report) {
  int parse_errors = 0;
  auto numbered = read_graphs_path(input, parse_errors);
  if (parse_errors) return kExitParse;
  std::vector<qpe::Graph> graphs;
  for (auto& [line, g] : numbered) graphs.push_back(g);

  try {
    if (srg_report) {
      auto report = qpe::srg_family_report(graphs, input);
      write_output(output, qpe::srg_family_report_to_json(report) + "\n");
      return kExitOk;
    }
    qpe::EncoderConfig ecfg;
    ecfg.name = encoder;
    ecfg.theta = cfg.theta;
    ecfg.t = cfg.t;
    ecfg.layers = cfg.layers;
    ecfg.delta = cfg.delta;
    ecfg.slice = cfg.steps;
    ecfg.init = cfg.init;
    auto report = qpe::family_distance_matrix(graphs, ecfg, input, cfg.normalize);
    if (cfg.format == "csv")
      write_output(output, qpe::distance_report_to_csv(report));
    else
      write_output(output, qpe::distance_report_to_json(report) + "\n");
    return kExitOk;
  } catch (const qpe::ResourceLimitError& e) {
    std::cerr << e.what() << "\n";
    return kExitGuard;
  }
}

int cmd_oracle_check(int trials, int n_max, uint64_t seed,
                     const std::string& output) {
  using namespace qpe;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.05, M_PI / 2 - 0.05);
  std::uniform_real_distribution<double> time_dist(0.01, 2 * M_PI);
  std::uniform_int_distribution<int> weight(0, 2), field(0, 1), coin(0, 1);
  int n_min = std::min(2, n_max);

  double max_local = 0, max_pair = 0, max_corr = 0;
  for (int trial = 0; trial < trials; ++trial) {
    int n = n_min + static_cast<int>(rng() % (n_max - n_min + 1));
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    IsingModel m{Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, n)};
    for (int u = 0; u < n; ++u) {
      m.h(u) = field(rng);
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v)) m.J(u, v) = m.J(v, u) = weight(rng);
    }
    double theta = ang(rng), t = time_dist(rng);

    State st = evolve_layers(g, m, PulseSchedule::single(theta, t));
    auto local = local_occupation(g, m, theta, t);
    for (int v = 0; v < n; ++v)
      max_local = std::max(max_local, std::abs(local(v) - expect_n(st, v)));
    if (n >= 2) {
      auto corr = correlation_closed_form(g, m, theta, t);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          double nn = expect_nn(st, u, v);
          max_pair = std::max(
              max_pair, std::abs(pair_occupation(g, m, theta, t, u, v) - nn));
          double expected = nn - expect_n(st, u) * expect_n(st, v);
          max_corr = std::max(max_corr, std::abs(corr(u, v) - expected));
        }
      }
    }
  }

  double worst = std::max({max_local, max_pair, max_corr});
  JsonWriter w;
  w.begin_object();
  w.key("trials").value(trials);
  w.key("n_max").value(n_max);
  w.key("seed").value(static_cast<long>(seed));
  w.key("max_abs_deviation_local").value(max_local);
  w.key("max_abs_deviation_pair").value(max_pair);
  w.key("max_abs_deviation_correlation").value(max_corr);
  w.key("max_abs_deviation").value(worst);
  w.key("tolerance").value(1e-9);
  w.key("pass").value(worst < 1e-9);
  w.end_object();
  write_output(output, w.take() + "\n");
  return worst < 1e-9 ? kExitOk : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph positional encodings: walks, Ising observables and"
               " distinguishability experiments"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input = "-", output, config_path;

  auto add_common = [&](CLI::App* sub, bool with_encoder_flags) {
    sub->add_option("input", input, "graph6 file, one record per line ('-' = stdin)");
    sub->add_option("-o,--output", output, "output path (default stdout)");
    if (with_encoder_flags) {
      sub->add_option("--config", config_path,
                      "JSON config file; values override flags");
      sub->add_option("-k,--steps", cfg.steps, "number of discrete steps");
      sub->add_option("--times", cfg.times_str, "explicit time grid, comma separated");
      sub->add_option("--time-grid", cfg.time_grid,
                      "default:K (t_k = k pi/K) or random:K (seeded)");
      sub->add_option("--theta", cfg.theta, "pulse angle");
      sub->add_option("--t", cfg.t, "evolution time");
      sub->add_option("--layers", cfg.layers, "pulse layers p");
      sub->add_option("--delta", cfg.delta, "ground-state detuning in (0,1)");
      sub->add_option("--init", cfg.init,
                      "uniform_edges | uniform_pairs | localized:i[,j]");
      sub->add_option("--seed", cfg.seed, "random seed");
      sub->add_option("--format", cfg.format, "json | csv")
          ->check(CLI::IsMember({"json", "csv"}));
      sub->add_flag("--normalize", cfg.normalize, "min-max scale distances");
    }
  };

  auto* encode = app.add_subcommand("encode", "compute a positional encoding");
  encode->add_option("--method", cfg.method,
                     "rrwp | cqrw1 | cqrw2 | qirw2 | xy2-corr | xy2-corr-locavg |"
                     " ising-p1-corr | ising-sim-corr | gs-corr | time-avg");
  add_common(encode, true);

  std::string dist_method = "wl1";
  auto* dist = app.add_subcommand("distinguish", "pairwise distinguishability verdicts");
  dist->add_option("--method", dist_method,
                   "wl1 | gdwl-rrwp | qw1-signature | occupation-wl2 |"
                   " occupation-wl3 | ising-p1 | xy2");
  add_common(dist, false);

  auto* validate = app.add_subcommand("validate", "strongly-regular-graph check");
  add_common(validate, false);

  std::string family_encoder = "xy2-locavg";
  bool srg_report = false;
  auto* family = app.add_subcommand("family", "pairwise distance matrix for a family");
  family->add_option("--encoder", family_encoder,
                     "xy2-locavg | xy2 | ising-p1 | ising-sim | gs-corr | rrwp-slice");
  family->add_flag("--srg-report", srg_report,
                   "full SRG verdict table instead of one distance matrix");
  add_common(family, true);

  int trials = 20, n_max = 10;
  auto* oracle = app.add_subcommand(
      "oracle-check", "closed-form vs statevector randomized sweep");
  oracle->add_option("--trials", trials, "number of random models");
  oracle->add_option("--n-max", n_max, "largest node count");
  oracle->add_option("--seed", cfg.seed, "random seed");
  oracle->add_option("-o,--output", output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw CLI::ValidationError("--config", "cannot open " + config_path);
      nlohmann::json j;
      in >> j;
      cfg.apply_json_overrides(j);
    }
    if (encode->parsed()) return cmd_encode(cfg, input, output);
    if (dist->parsed()) return cmd_distinguish(dist_method, input, output);
    if (validate->parsed()) return cmd_validate(input, output);
    if (family->parsed())
      return cmd_family(cfg, family_encoder, input, output, srg_report);
    if (oracle->parsed()) return cmd_oracle_check(trials, n_max, cfg.seed, output);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const qpe::Graph6ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const qpe::ResourceLimitError& e) {
    std::cerr << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
