#include "qpe/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qpe/ground_state.hpp"
#include "qpe/io.hpp"
#include "qpe/ising.hpp"
#include "qpe/ising_closed_form.hpp"
#include "qpe/simulator.hpp"
#include "qpe/walks.hpp"
#include "qpe/wl.hpp"

namespace qpe {

Eigen::VectorXd sort_flatten(const Eigen::MatrixXd& c) {
  Eigen::VectorXd out(c.size());
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < c.cols(); ++j) out(idx++) = c(i, j);
  std::sort(out.data(), out.data() + out.size());
  return out;
}

double graph_distance(const Eigen::MatrixXd& c1, const Eigen::MatrixXd& c2) {
  if (c1.rows() != c2.rows() || c1.cols() != c2.cols())
    throw std::invalid_argument("graph_distance: dimension mismatch");
  return 0.5 * (sort_flatten(c1) - sort_flatten(c2)).cwiseAbs().sum();
}

std::string EncoderConfig::describe() const {
  std::ostringstream os;
  os << name;
  if (name == "xy2-locavg") {
    os << "(t=" << t << ")";
  } else if (name == "xy2") {
    os << "(init=" << init << ",t=" << t << ")";
  } else if (name == "ising-p1") {
    os << "(theta=" << theta << ",t=" << t << ")";
  } else if (name == "ising-sim") {
    os << "(p=" << layers << ",theta=" << theta << ",t=" << t << ")";
  } else if (name == "gs-corr") {
    os << "(delta=" << delta << ")";
  } else if (name == "rrwp-slice") {
    os << "(k=" << slice << ")";
  }
  return os.str();
}

Eigen::MatrixXd encode_correlation(const Graph& g, const EncoderConfig& cfg) {
  if (cfg.name == "xy2-locavg")
    return xy2_correlations_localized_average(g, cfg.t);
  if (cfg.name == "xy2") {
    InitSpec init = InitSpec::uniform_edges();
    if (cfg.init == "uniform_pairs") init = InitSpec::uniform_pairs();
    else if (cfg.init != "uniform_edges")
      throw std::invalid_argument("encode_correlation: xy2 init must be uniform");
    return xy2_correlations(g, cfg.t, init);
  }
  if (cfg.name == "ising-p1")
    return correlation_closed_form(g, IsingModel::uniform(g), cfg.theta, cfg.t);
  if (cfg.name == "ising-sim") {
    PulseSchedule sched;
    sched.times = cfg.times;
    sched.theta = cfg.thetas;
    if (sched.times.empty()) sched.times.assign(cfg.layers, cfg.t);
    if (sched.theta.empty()) sched.theta.assign(sched.times.size(), cfg.theta);
    return correlation_sim(g, IsingModel::uniform(g), sched);
  }
  if (cfg.name == "gs-corr")
    return gs_correlation(ising_ground_manifold(g, cfg.delta));
  if (cfg.name == "rrwp-slice") {
    EncodingTensor t = rrwp(g, cfg.slice + 1);
    return t.slices.back();
  }
  throw std::invalid_argument("encode_correlation: unknown encoder " + cfg.name);
}

DistanceReport family_distance_matrix(const std::vector<Graph>& graphs,
                                      const EncoderConfig& cfg,
                                      const std::string& family_id,
                                      bool normalize) {
  if (graphs.empty())
    throw std::invalid_argument("family_distance_matrix: no graphs");
  int n0 = graphs[0].n();
  for (const Graph& g : graphs)
    if (g.n() != n0)
      throw std::invalid_argument("family_distance_matrix: heterogeneous sizes");

  std::vector<Eigen::MatrixXd> encodings;
  encodings.reserve(graphs.size());
  for (const Graph& g : graphs) encodings.push_back(encode_correlation(g, cfg));

  int m = static_cast<int>(graphs.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      d(i, j) = d(j, i) = graph_distance(encodings[i], encodings[j]);

  DistanceReport report{family_id, cfg, d, false, 1e-8};
  if (normalize && m > 1) {
    double lo = d.minCoeff(), hi = d.maxCoeff();
    if (hi > lo) report.distances = (d.array() - lo) / (hi - lo);
    report.normalized = true;
  }
  return report;
}

SrgFamilyReport srg_family_report(const std::vector<Graph>& graphs,
                                  const std::string& family_id) {
  if (graphs.size() < 2)
    throw std::invalid_argument("srg_family_report: need at least two graphs");
  SrgFamilyReport rep;
  rep.family_id = family_id;
  rep.members = static_cast<int>(graphs.size());

  auto first = validate_srg(graphs[0]);
  if (!first)
    throw std::invalid_argument("srg_family_report: member 0 is not an SRG");
  rep.params = *first;
  for (size_t i = 1; i < graphs.size(); ++i) {
    auto p = validate_srg(graphs[i]);
    if (!p || !(*p == rep.params))
      throw std::invalid_argument("srg_family_report: member " +
                                  std::to_string(i) +
                                  " has mismatched SRG parameters");
  }

  rep.wl1_single_class = true;
  for (const Graph& g : graphs)
    if (wl1(g).num_classes() != 1) rep.wl1_single_class = false;

  std::vector<const Graph*> ptrs;
  for (const Graph& g : graphs) ptrs.push_back(&g);
  auto wl_fps = wl1_fingerprints(ptrs);
  rep.wl1_all_indistinct = true;
  for (size_t i = 1; i < wl_fps.size(); ++i)
    if (!(wl_fps[i] == wl_fps[0])) rep.wl1_all_indistinct = false;

  std::vector<FeatureStack> stacks;
  for (const Graph& g : graphs) stacks.push_back(rrwp(g, 8).slices);
  auto gd_fps = gdwl_fingerprints(ptrs, stacks);
  rep.gdwl_rrwp_all_indistinct = true;
  for (size_t i = 1; i < gd_fps.size(); ++i)
    if (!(gd_fps[i] == gd_fps[0])) rep.gdwl_rrwp_all_indistinct = false;

  EncoderConfig ising_cfg;
  ising_cfg.name = "ising-p1";
  rep.ising_p1 = family_distance_matrix(graphs, ising_cfg, family_id);
  rep.ising_p1_max_distance = rep.ising_p1.distances.maxCoeff();

  EncoderConfig xy_cfg;
  xy_cfg.name = "xy2-locavg";
  rep.xy2 = family_distance_matrix(graphs, xy_cfg, family_id);
  rep.xy2_max_distance = rep.xy2.distances.maxCoeff();
  double mn = std::numeric_limits<double>::infinity();
  for (int i = 0; i < rep.xy2.distances.rows(); ++i)
    for (int j = i + 1; j < rep.xy2.distances.cols(); ++j)
      mn = std::min(mn, rep.xy2.distances(i, j));
  rep.xy2_min_distance = graphs.size() > 1 ? mn : 0.0;

  return rep;
}

std::string distance_report_to_json(const DistanceReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("family_id").value(r.family_id);
  w.key("encoder").value(r.encoder.describe());
  w.key("normalized").value(r.normalized);
  w.key("zero_threshold").value(r.zero_threshold);
  w.key("members").value(static_cast<int>(r.distances.rows()));
  w.key("distances").value(r.distances);
  w.end_object();
  return w.take();
}

std::string distance_report_to_csv(const DistanceReport& r) {
  std::string out = "i,j,distance\n";
  for (Eigen::Index i = 0; i < r.distances.rows(); ++i)
    for (Eigen::Index j = i + 1; j < r.distances.cols(); ++j)
      out += std::to_string(i) + "," + std::to_string(j) + "," +
             format_double(r.distances(i, j)) + "\n";
  return out;
}

std::string srg_family_report_to_json(const SrgFamilyReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("family_id").value(r.family_id);
  w.key("params").begin_array();
  w.value(r.params.nu).value(r.params.k).value(r.params.lambda).value(r.params.mu);
  w.end_array();
  w.key("members").value(r.members);
  w.key("wl1_single_class").value(r.wl1_single_class);
  w.key("wl1_all_indistinct").value(r.wl1_all_indistinct);
  w.key("gdwl_rrwp_all_indistinct").value(r.gdwl_rrwp_all_indistinct);
  w.key("ising_p1_max_distance").value(r.ising_p1_max_distance);
  w.key("xy2_min_distance").value(r.xy2_min_distance);
  w.key("xy2_max_distance").value(r.xy2_max_distance);
  w.key("ising_p1_encoder").value(r.ising_p1.encoder.describe());
  w.key("xy2_encoder").value(r.xy2.encoder.describe());
  w.key("ising_p1_distances").value(r.ising_p1.distances);
  w.key("xy2_distances").value(r.xy2.distances);
  w.end_object();
  return w.take();
}

}  // namespace qpe
