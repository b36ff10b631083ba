#include "qpe/simulator.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

#include "qpe/linalg.hpp"
#include "qpe/walks.hpp"

namespace qpe {

namespace {

void check_qubits(int n) {
  if (n < 1) throw std::invalid_argument("simulator: need at least one qubit");
  if (n > max_qubits())
    throw ResourceLimitError("simulator: " + std::to_string(n) +
                             " qubits exceeds the guard of " +
                             std::to_string(max_qubits()) +
                             " (QPE_MAX_QUBITS overrides)");
}

}  // namespace

int max_qubits() {
  static int cached = [] {
    if (const char* env = std::getenv("QPE_MAX_QUBITS")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 24;
  }();
  return cached;
}

State prepare_pulse_state(int n, double theta) {
  check_qubits(n);
  double c = std::cos(theta), s = std::sin(theta);
  size_t dim = size_t{1} << n;
  State st{n, Eigen::VectorXcd(dim)};
  // powers of sin/cos by popcount
  std::vector<double> cs(n + 1), sn(n + 1);
  cs[0] = sn[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    cs[k] = cs[k - 1] * c;
    sn[k] = sn[k - 1] * s;
  }
  for (size_t sig = 0; sig < dim; ++sig) {
    int ones = std::popcount(sig);
    st.amplitudes(sig) = cs[n - ones] * sn[ones];
  }
  return st;
}

EnergyTable build_energy_table(const IsingModel& m) {
  m.validate();
  int n = m.n();
  check_qubits(n);
  size_t dim = size_t{1} << n;
  EnergyTable table{Eigen::VectorXd(dim)};
  table.energies(0) = 0.0;
  for (size_t sig = 1; sig < dim; ++sig) {
    // peel the lowest set bit b: E(sig) = E(sig \ b) + h_b + sum of J_ub
    // over the other occupied u
    int b = std::countr_zero(sig);
    size_t rest = sig & (sig - 1);
    double e = table.energies(rest) + m.h(b);
    size_t bits = rest;
    while (bits) {
      int u = std::countr_zero(bits);
      e += m.J(u, b);
      bits &= bits - 1;
    }
    table.energies(sig) = e;
  }
  return table;
}

State ising_phase(const State& s, const EnergyTable& e, double t) {
  if (s.amplitudes.size() != e.energies.size())
    throw std::invalid_argument("ising_phase: dimension mismatch");
  State out = s;
  for (Eigen::Index i = 0; i < out.amplitudes.size(); ++i)
    out.amplitudes(i) *=
        std::exp(std::complex<double>(0.0, -e.energies(i) * t));
  return out;
}

State apply_y_pulse(const State& s, double angle) {
  double c = std::cos(angle), sn = std::sin(angle);
  State out = s;
  size_t dim = out.amplitudes.size();
  for (int q = 0; q < s.n_qubits; ++q) {
    size_t step = size_t{1} << q;
    for (size_t base = 0; base < dim; base += 2 * step) {
      for (size_t idx = base; idx < base + step; ++idx) {
        auto a0 = out.amplitudes(idx);
        auto a1 = out.amplitudes(idx | step);
        out.amplitudes(idx) = c * a0 - sn * a1;
        out.amplitudes(idx | step) = sn * a0 + c * a1;
      }
    }
  }
  return out;
}

State evolve_layers(const Graph& g, const IsingModel& m,
                    const PulseSchedule& sched) {
  m.validate_for(g);
  check_qubits(g.n());
  std::vector<double> angles = sched.effective_angles();
  EnergyTable table = build_energy_table(m);

  State st{g.n(), Eigen::VectorXcd::Zero(size_t{1} << g.n())};
  st.amplitudes(0) = 1.0;
  st = apply_y_pulse(st, angles[0]);
  for (int k = 0; k < sched.layers(); ++k) {
    st = ising_phase(st, table, sched.times[k]);
    st = apply_y_pulse(st, angles[k + 1]);
  }
  return st;
}

double expect_n(const State& s, int v) {
  if (v < 0 || v >= s.n_qubits)
    throw std::out_of_range("expect_n: qubit index out of range");
  double acc = 0.0;
  size_t mask = size_t{1} << v;
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i)
    if (static_cast<size_t>(i) & mask) acc += std::norm(s.amplitudes(i));
  return acc;
}

double expect_nn(const State& s, int u, int v) {
  if (u < 0 || u >= s.n_qubits || v < 0 || v >= s.n_qubits)
    throw std::out_of_range("expect_nn: qubit index out of range");
  double acc = 0.0;
  size_t mask = (size_t{1} << u) | (size_t{1} << v);
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i)
    if ((static_cast<size_t>(i) & mask) == mask) acc += std::norm(s.amplitudes(i));
  return acc;
}

Eigen::MatrixXd correlation_sim(const Graph& g, const IsingModel& m,
                                const PulseSchedule& sched) {
  State st = evolve_layers(g, m, sched);
  int n = g.n();
  Eigen::VectorXd occ(n);
  for (int v = 0; v < n; ++v) occ(v) = 0.0;
  Eigen::MatrixXd nn = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < st.amplitudes.size(); ++i) {
    double p = std::norm(st.amplitudes(i));
    if (p == 0.0) continue;
    size_t bits = static_cast<size_t>(i);
    while (bits) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      occ(v) += p;
      size_t rest = bits;
      while (rest) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        nn(u, v) += p;
        nn(v, u) += p;
      }
    }
  }
  Eigen::MatrixXd out(n, n);
  for (int u = 0; u < n; ++u) {
    out(u, u) = occ(u) - occ(u) * occ(u);
    for (int v = u + 1; v < n; ++v)
      out(u, v) = out(v, u) = nn(u, v) - occ(u) * occ(v);
  }
  return out;
}

Eigen::VectorXcd xy_subspace_evolve(const Graph& g, int k,
                                    const Eigen::VectorXcd& init, double t) {
  OccupationBasis basis = occupation_graph(g, k);
  if (init.size() != basis.graph.n())
    throw std::invalid_argument("xy_subspace_evolve: init length mismatch");
  SpectralDecomp d = sym_eig(basis.graph.adjacency_matrix());
  return propagate(d, t, init);
}

}  // namespace qpe
