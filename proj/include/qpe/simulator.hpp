#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qpe/graph.hpp"
#include "qpe/ising.hpp"

namespace qpe {

/// Raised when a computation would exceed a resource guard (e.g. the
/// qubit ceiling). Never returns partial results.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full 2^n statevector; bit v of the basis index encodes the occupation
/// of node v (little-endian).
struct State {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// E_sigma for every basis configuration, E_{0...0} == 0.
struct EnergyTable {
  Eigen::VectorXd energies;
};

/// Qubit ceiling; QPE_MAX_QUBITS overrides the default of 24.
int max_qubits();

/// (cos theta)^{n - |sigma|} (sin theta)^{|sigma|} on every basis state.
State prepare_pulse_state(int n, double theta);

EnergyTable build_energy_table(const IsingModel& m);

/// Multiply amplitude sigma by e^{-i E_sigma t}.
State ising_phase(const State& s, const EnergyTable& e, double t);

/// Product of per-qubit rotations: |0> -> cos a|0> + sin a|1>,
/// |1> -> -sin a|0> + cos a|1>. The inverse is the negative angle, and
/// apply_y_pulse(|0...0>, theta) == prepare_pulse_state(n, theta).
State apply_y_pulse(const State& s, double angle);

/// Layered pulse/phase evolution of |0...0> under the schedule.
State evolve_layers(const Graph& g, const IsingModel& m, const PulseSchedule& sched);

double expect_n(const State& s, int v);
double expect_nn(const State& s, int u, int v);

/// C_uv = <n_u n_v> - <n_u><n_v> on the evolve_layers output;
/// diagonal <n_v> - <n_v>^2.
Eigen::MatrixXd correlation_sim(const Graph& g, const IsingModel& m,
                                const PulseSchedule& sched);

/// Evolve an amplitude vector on the k-particle occupation basis by the
/// occupation-graph adjacency for time t.
Eigen::VectorXcd xy_subspace_evolve(const Graph& g, int k,
                                    const Eigen::VectorXcd& init, double t);

}  // namespace qpe
