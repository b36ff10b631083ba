#pragma once

#include <optional>

#include <Eigen/Dense>

#include "qpe/graph.hpp"
#include "qpe/ising.hpp"

namespace qpe {

/// Total occupation after pulse(theta) / phase(t) / pulse(-theta) with the
/// density-density hamiltonian (h == 0, J == A). Depends on the graph only
/// through its degree histogram.
double total_occupation_density(const Graph& g, double theta, double t);

/// Total occupation for the asymmetric pulse pair (theta, phi) and a
/// generic model. Requires theta, phi away from multiples of pi/2 (the
/// tan factors); the symmetric case phi == theta reduces to the sum of
/// local occupations.
double total_occupation_generic_pulse(const Graph& g, const IsingModel& m,
                                      double theta, double phi, double t);

/// <n_v(t)> for every node, single-layer symmetric pulse scheme.
Eigen::VectorXd local_occupation(const Graph& g, const IsingModel& m,
                                 double theta, double t);

/// <n_v1 n_v2(t)> for one pair, v1 != v2.
double pair_occupation(const Graph& g, const IsingModel& m, double theta,
                       double t, int v1, int v2);

/// Covariance matrix C_uv = <n_u n_v> - <n_u><n_v> through the
/// rho / w / w± structured route; diagonal is <n_v> - <n_v>^2.
Eigen::MatrixXd correlation_closed_form(const Graph& g, const IsingModel& m,
                                        double theta, double t);

/// Two-valued decomposition of a matrix over the adjacency partition:
/// succeeds iff all adjacent-pair entries agree within tol and all
/// non-adjacent-pair entries agree within tol.
struct TwoValueDecomposition {
  double c_adj = 0.0;
  double c_nonadj = 0.0;
};
struct TwoValueFailure {
  double max_spread = 0.0;  // maximal within-class spread observed
};
using TwoValueResult = std::optional<TwoValueDecomposition>;

TwoValueResult srg_two_value_decompose(const Eigen::MatrixXd& c, const Graph& g,
                                       double tol = 1e-9,
                                       TwoValueFailure* failure = nullptr);

}  // namespace qpe
