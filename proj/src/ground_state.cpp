#include "qpe/ground_state.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpe/linalg.hpp"
#include "qpe/simulator.hpp"

namespace qpe {

GroundStateManifold ising_ground_manifold(const Graph& g, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("ising_ground_manifold: delta must be in (0,1)");
  int n = g.n();
  if (n > kMaxGroundStateNodes)
    throw ResourceLimitError("ising_ground_manifold: node guard exceeded");

  std::vector<uint64_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) adj[u] |= uint64_t{1} << v;

  // enumerate independent sets only (supersets of dependent sets pruned);
  // the minimum of E(b) is attained exactly on maximum independent sets
  int best = -1;
  std::vector<uint64_t> configs;
  struct Frame {
    int next;
    uint64_t set;
    uint64_t banned;
    int size;
  };
  std::vector<Frame> dfs{{0, 0, 0, 0}};
  while (!dfs.empty()) {
    Frame f = dfs.back();
    dfs.pop_back();
    if (f.size + (n - f.next) < best) continue;
    if (f.next == n) {
      if (f.size > best) {
        best = f.size;
        configs.clear();
      }
      if (f.size == best) configs.push_back(f.set);
      continue;
    }
    // branch: exclude f.next, then include it if allowed
    dfs.push_back({f.next + 1, f.set, f.banned, f.size});
    if (!((f.banned >> f.next) & 1))
      dfs.push_back({f.next + 1, f.set | (uint64_t{1} << f.next),
                     f.banned | adj[f.next], f.size + 1});
  }
  std::sort(configs.begin(), configs.end());
  return GroundStateManifold{n, delta, std::move(configs),
                             -delta * static_cast<double>(best)};
}

Eigen::MatrixXd gs_correlation(const GroundStateManifold& m) {
  if (m.configs.empty())
    throw std::invalid_argument("gs_correlation: empty manifold");
  int n = m.n;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd z(n);
  for (uint64_t b : m.configs) {
    for (int v = 0; v < n; ++v) z(v) = ((b >> v) & 1) ? -1.0 : 1.0;
    acc += z * z.transpose();
  }
  return acc / static_cast<double>(m.configs.size());
}

Eigen::MatrixXd gs_positional_encoding(const Eigen::MatrixXd& c, int m) {
  int n = static_cast<int>(c.rows());
  if (m < 1 || m > n)
    throw std::invalid_argument("gs_positional_encoding: m out of range");
  SpectralDecomp d = sym_eig(c);  // ascending
  Eigen::MatrixXd out(n, m);
  for (int col = 0; col < m; ++col) {
    Eigen::VectorXd v = d.eigenvectors.col(n - 1 - col);
    for (int i = 0; i < n; ++i) {
      if (std::abs(v(i)) > 1e-12) {
        if (v(i) < 0) v = -v;
        break;
      }
    }
    out.col(col) = v;
  }
  return out;
}

Graph ladder_graph(int kind, int length) {
  std::vector<int> crossings;
  switch (kind) {
    case 0:
      if (length < 2) throw std::invalid_argument("ladder_graph: kind 0 needs length >= 2");
      break;
    case 1:
      if (length < 4) throw std::invalid_argument("ladder_graph: kind 1 needs length >= 4");
      crossings = {0, 2};
      break;
    case 2:
      if (length < 9 || length % 2 == 0)
        throw std::invalid_argument("ladder_graph: kind 2 needs odd length >= 9");
      crossings = {2, length - 4};
      break;
    default:
      throw std::invalid_argument("ladder_graph: kind must be 0, 1 or 2");
  }
  int L = length;
  Graph g(2 * L);
  for (int i = 0; i < L; ++i) g.add_edge(i, L + i);
  for (int i = 0; i + 1 < L; ++i) {
    g.add_edge(i, i + 1);
    g.add_edge(L + i, L + i + 1);
  }
  for (int i : crossings) g.add_edge(i, L + i + 1);
  return g;
}

}  // namespace qpe
