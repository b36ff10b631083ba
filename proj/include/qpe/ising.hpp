#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qpe/graph.hpp"

namespace qpe {

/// Diagonal Ising hamiltonian sum_{(u,v)} J_uv n_u n_v + sum_v h_v n_v.
/// J is symmetric with zero diagonal; entries may carry weights beyond 0/1.
struct IsingModel {
  Eigen::VectorXd h;
  Eigen::MatrixXd J;

  int n() const { return static_cast<int>(h.size()); }

  void validate() const {
    if (J.rows() != J.cols() || J.rows() != h.size())
      throw std::invalid_argument("IsingModel: dimension mismatch");
    if ((J - J.transpose()).cwiseAbs().maxCoeff() > 0)
      throw std::invalid_argument("IsingModel: J must be symmetric");
    if (J.diagonal().cwiseAbs().maxCoeff() > 0)
      throw std::invalid_argument("IsingModel: J must have zero diagonal");
  }

  void validate_for(const Graph& g) const {
    validate();
    if (n() != g.n()) throw std::invalid_argument("IsingModel: size does not match graph");
  }

  /// h == 1, J == adjacency (the uniform local model of the SRG analysis).
  static IsingModel uniform(const Graph& g) {
    return {Eigen::VectorXd::Ones(g.n()), g.adjacency_matrix()};
  }

  /// h == 0, J == adjacency (density-density hamiltonian).
  static IsingModel density_density(const Graph& g) {
    return {Eigen::VectorXd::Zero(g.n()), g.adjacency_matrix()};
  }
};

/// Mixing/evolution schedule for the layered pulse scheme.
///
/// The executed sequence is
///   pulse(a_0), phase(times[0]), pulse(a_1), ..., phase(times[p-1]), pulse(a_p)
/// where the angles a_0..a_p come from effective_angles():
///   - theta.size() == p + 1: the generic ladder, angles given explicitly;
///   - theta.size() == p:     symmetric scheme, closing angle is
///                            -(sum of theta) so that t == 0 gives the identity;
///                            if phi is set the closing angle is -phi instead
///                            (the asymmetric single-layer variant).
struct PulseSchedule {
  std::vector<double> theta;
  std::vector<double> times;
  std::optional<double> phi;

  int layers() const { return static_cast<int>(times.size()); }

  static PulseSchedule single(double theta_, double t) {
    return {{theta_}, {t}, std::nullopt};
  }
  static PulseSchedule asymmetric(double theta_, double phi_, double t) {
    return {{theta_}, {t}, phi_};
  }

  std::vector<double> effective_angles() const {
    size_t p = times.size();
    for (double x : theta)
      if (!std::isfinite(x))
        throw std::invalid_argument("PulseSchedule: non-finite angle");
    for (double x : times)
      if (!std::isfinite(x))
        throw std::invalid_argument("PulseSchedule: non-finite time");
    if (theta.size() == p + 1) {
      if (phi.has_value())
        throw std::invalid_argument("PulseSchedule: phi with explicit closing angle");
      return theta;
    }
    if (theta.size() != p)
      throw std::invalid_argument("PulseSchedule: need p or p+1 angles");
    std::vector<double> out = theta;
    double closing = 0.0;
    if (phi.has_value()) {
      closing = -*phi;
    } else {
      for (double a : theta) closing -= a;
    }
    out.push_back(closing);
    return out;
  }
};

}  // namespace qpe
