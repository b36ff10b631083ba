#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qpe/graph.hpp"

namespace qpe {

/// Ascending sort of all n^2 entries.
Eigen::VectorXd sort_flatten(const Eigen::MatrixXd& c);

/// Half the l1 distance between sorted flattened matrices: a
/// permutation-invariant pseudometric on encodings.
double graph_distance(const Eigen::MatrixXd& c1, const Eigen::MatrixXd& c2);

/// Per-graph correlation encoder used by the family experiments.
struct EncoderConfig {
  /// One of: "xy2-locavg", "xy2", "ising-p1", "ising-sim", "gs-corr",
  /// "rrwp-slice".
  std::string name = "xy2-locavg";
  double theta = M_PI / 5;      // ising encoders
  double t = 1.0;               // evolution time (xy2 / ising)
  int layers = 1;               // ising-sim
  std::vector<double> times;    // ising-sim layer times (defaults to t per layer)
  std::vector<double> thetas;   // ising-sim layer angles (defaults to theta)
  int slice = 2;                // rrwp-slice
  double delta = 0.5;           // gs-corr
  std::string init = "uniform_edges";  // xy2 superposition variant

  std::string describe() const;
};

Eigen::MatrixXd encode_correlation(const Graph& g, const EncoderConfig& cfg);

struct DistanceReport {
  std::string family_id;
  EncoderConfig encoder;
  Eigen::MatrixXd distances;  // m x m, zero diagonal
  bool normalized = false;    // min-max scaled for figure emission
  double zero_threshold = 1e-8;
};

DistanceReport family_distance_matrix(const std::vector<Graph>& graphs,
                                      const EncoderConfig& cfg,
                                      const std::string& family_id = "",
                                      bool normalize = false);

/// Combined verdicts for one same-parameter SRG family.
struct SrgFamilyReport {
  std::string family_id;
  SrgParams params;
  int members = 0;
  bool wl1_single_class = false;       // every member collapses to one class
  bool wl1_all_indistinct = false;     // no pair separated by 1-WL
  bool gdwl_rrwp_all_indistinct = false;
  double ising_p1_max_distance = 0.0;  // expect ~0 (Prop on p=1 Ising)
  double xy2_min_distance = 0.0;       // expect > 0 (2-QW separation)
  double xy2_max_distance = 0.0;
  DistanceReport ising_p1;
  DistanceReport xy2;
};

SrgFamilyReport srg_family_report(const std::vector<Graph>& graphs,
                                  const std::string& family_id = "");

std::string distance_report_to_json(const DistanceReport& r);
std::string distance_report_to_csv(const DistanceReport& r);
std::string srg_family_report_to_json(const SrgFamilyReport& r);

}  // namespace qpe
