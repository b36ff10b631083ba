#include "qpe/walks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qpe/linalg.hpp"

namespace qpe {

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Initial 2-particle amplitude vector on the pair basis.
Eigen::VectorXcd init_vector2(const Graph& g, const OccupationBasis& basis,
                              const InitSpec& init) {
  int m = static_cast<int>(basis.subsets.size());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(m);
  switch (init.kind) {
    case InitSpec::Kind::Localized: {
      if (init.i < 0 || init.j < 0 || init.i == init.j)
        throw std::invalid_argument("init: localized pair needs two distinct nodes");
      v(basis.index_of({init.i, init.j})) = 1.0;
      break;
    }
    case InitSpec::Kind::UniformPairs: {
      if (g.n() < 2) throw std::invalid_argument("init: uniform_pairs needs n >= 2");
      v.setConstant(1.0 / std::sqrt(static_cast<double>(m)));
      break;
    }
    case InitSpec::Kind::UniformEdges: {
      int e = g.edge_count();
      if (e == 0) throw std::invalid_argument("init: uniform_edges needs an edge");
      double a = 1.0 / std::sqrt(static_cast<double>(e));
      for (int c = 0; c < m; ++c) {
        const auto& s = basis.subsets[c];
        if (g.has_edge(s[0], s[1])) v(c) = a;
      }
      break;
    }
  }
  return v;
}

Eigen::MatrixXd pair_values_to_matrix(const OccupationBasis& basis, int n,
                                      const Eigen::VectorXd& vals) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (size_t c = 0; c < basis.subsets.size(); ++c) {
    int i = basis.subsets[c][0], j = basis.subsets[c][1];
    out(i, j) = out(j, i) = vals(static_cast<int>(c));
  }
  return out;
}

// One correlation matrix from the outcome distribution over pairs.
Eigen::MatrixXd correlations_from_probs(const OccupationBasis& basis, int n,
                                        const Eigen::VectorXd& probs) {
  Eigen::VectorXd occ = Eigen::VectorXd::Zero(n);
  for (size_t c = 0; c < basis.subsets.size(); ++c) {
    occ(basis.subsets[c][0]) += probs(static_cast<int>(c));
    occ(basis.subsets[c][1]) += probs(static_cast<int>(c));
  }
  Eigen::MatrixXd cm = Eigen::MatrixXd::Zero(n, n);
  for (size_t c = 0; c < basis.subsets.size(); ++c) {
    int i = basis.subsets[c][0], j = basis.subsets[c][1];
    double v = probs(static_cast<int>(c)) - occ(i) * occ(j);
    cm(i, j) = cm(j, i) = v;
  }
  for (int v = 0; v < n; ++v) cm(v, v) = occ(v) - occ(v) * occ(v);
  return cm;
}

}  // namespace

int OccupationBasis::index_of(std::vector<int> subset) const {
  std::sort(subset.begin(), subset.end());
  auto it = std::lower_bound(subsets.begin(), subsets.end(), subset);
  if (it == subsets.end() || *it != subset)
    throw std::out_of_range("OccupationBasis: subset not in basis");
  return static_cast<int>(it - subsets.begin());
}

OccupationBasis occupation_graph(const Graph& g, int k) {
  int n = g.n();
  if (k < 1 || k > 3) throw std::invalid_argument("occupation_graph: k must be 1..3");
  if (k > n) throw std::invalid_argument("occupation_graph: k exceeds node count");
  long size = binomial(n, k);
  if (size > kMaxOccupationBasis)
    throw std::length_error("occupation_graph: basis size guard exceeded");

  std::vector<std::vector<int>> subsets;
  subsets.reserve(size);
  std::vector<int> cur(k);
  // lexicographic enumeration of sorted k-subsets
  std::function<void(int, int)> gen = [&](int start, int depth) {
    if (depth == k) {
      subsets.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur[depth] = v;
      gen(v + 1, depth + 1);
    }
  };
  gen(0, 0);

  OccupationBasis basis{Graph(static_cast<int>(subsets.size()))};
  basis.subsets = std::move(subsets);

  // neighbors: replace one element by an adjacent node not already present
  for (int c = 0; c < static_cast<int>(basis.subsets.size()); ++c) {
    const auto& s = basis.subsets[c];
    for (int slot = 0; slot < k; ++slot) {
      for (int w : g.neighbors(s[slot])) {
        if (std::find(s.begin(), s.end(), w) != s.end()) continue;
        std::vector<int> t = s;
        t[slot] = w;
        int d = basis.index_of(t);
        if (d > c) basis.graph.add_edge(c, d);
      }
    }
  }
  return basis;
}

EncodingTensor rrwp(const Graph& g, int K) {
  if (K < 1) throw std::invalid_argument("rrwp: K must be >= 1");
  int n = g.n();
  Eigen::MatrixXd a = g.adjacency_matrix();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    double d = a.row(v).sum();
    if (d > 0) m.row(v) = a.row(v) / d;
  }
  EncodingTensor out{K, n, {}};
  out.slices.reserve(K);
  Eigen::MatrixXd cur = Eigen::MatrixXd::Identity(n, n);
  for (int k = 0; k < K; ++k) {
    out.slices.push_back(cur);
    cur = cur * m;
  }
  return out;
}

EncodingTensor cqrw1(const Graph& g, const std::vector<double>& times) {
  if (times.empty()) throw std::invalid_argument("cqrw1: times must be non-empty");
  int n = g.n();
  SpectralDecomp d = sym_eig(g.adjacency_matrix());
  EncodingTensor out{static_cast<int>(times.size()), n, {}};
  for (double t : times) {
    // U = Q e^{-i lambda t} Q^T, symmetric; slice = |U|^2 elementwise
    Eigen::VectorXcd phases(n);
    for (int i = 0; i < n; ++i)
      phases(i) = std::exp(std::complex<double>(0.0, -d.eigenvalues(i) * t));
    Eigen::MatrixXcd u =
        d.eigenvectors * phases.asDiagonal() * d.eigenvectors.transpose();
    out.slices.push_back(u.cwiseAbs2());
  }
  return out;
}

EncodingTensor cqrw2(const Graph& g, const std::vector<double>& times,
                     const InitSpec& init) {
  if (times.empty()) throw std::invalid_argument("cqrw2: times must be non-empty");
  if (g.n() < 2) throw std::invalid_argument("cqrw2: n must be >= 2");
  OccupationBasis basis = occupation_graph(g, 2);
  SpectralDecomp d = sym_eig(basis.graph.adjacency_matrix());
  Eigen::VectorXcd psi0 = init_vector2(g, basis, init);

  EncodingTensor out{static_cast<int>(times.size()), g.n(), {}};
  for (double t : times) {
    Eigen::VectorXd probs = propagate(d, t, psi0).cwiseAbs2();
    out.slices.push_back(pair_values_to_matrix(basis, g.n(), probs));
  }
  return out;
}

EncodingTensor qirw2(const Graph& g, int K, const InitSpec& init) {
  if (K < 1) throw std::invalid_argument("qirw2: K must be >= 1");
  if (g.n() < 2) throw std::invalid_argument("qirw2: n must be >= 2");
  OccupationBasis basis = occupation_graph(g, 2);
  Eigen::MatrixXd h2 = basis.graph.adjacency_matrix();
  int m = basis.graph.n();
  Eigen::MatrixXd walk = Eigen::MatrixXd::Zero(m, m);
  for (int c = 0; c < m; ++c) {
    double deg = h2.row(c).sum();
    if (deg > 0) walk.row(c) = h2.row(c) / deg;  // zero-degree rows stay zero
  }
  Eigen::VectorXd cur = init_vector2(g, basis, init).real();
  EncodingTensor out{K, g.n(), {}};
  for (int k = 0; k < K; ++k) {
    out.slices.push_back(pair_values_to_matrix(basis, g.n(), cur));
    cur = walk * cur;
  }
  return out;
}

Eigen::MatrixXd xy2_correlations(const Graph& g, double t, const InitSpec& init) {
  if (g.n() < 2) throw std::invalid_argument("xy2_correlations: n must be >= 2");
  OccupationBasis basis = occupation_graph(g, 2);
  SpectralDecomp d = sym_eig(basis.graph.adjacency_matrix());
  Eigen::VectorXd probs = propagate(d, t, init_vector2(g, basis, init)).cwiseAbs2();
  return correlations_from_probs(basis, g.n(), probs);
}

Eigen::MatrixXd xy2_correlations_localized_average(const Graph& g, double t) {
  if (g.n() < 2)
    throw std::invalid_argument("xy2_correlations_localized_average: n must be >= 2");
  OccupationBasis basis = occupation_graph(g, 2);
  SpectralDecomp d = sym_eig(basis.graph.adjacency_matrix());
  int m = basis.graph.n(), n = g.n();

  // columns of U are the evolved localized pair states
  Eigen::VectorXcd phases(m);
  for (int i = 0; i < m; ++i)
    phases(i) = std::exp(std::complex<double>(0.0, -d.eigenvalues(i) * t));
  Eigen::MatrixXcd u =
      d.eigenvectors * phases.asDiagonal() * d.eigenvectors.transpose();
  Eigen::MatrixXd p = u.cwiseAbs2();

  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  for (int c0 = 0; c0 < m; ++c0)
    acc += correlations_from_probs(basis, n, p.col(c0));
  return acc / static_cast<double>(m);
}

Eigen::MatrixXd time_avg_transition(const Graph& g) {
  SpectralDecomp d = sym_eig(g.adjacency_matrix());
  ProjectorSet ps = projectors(d);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (const auto& p : ps.projectors) out += p.cwiseAbs2();
  return out;
}

std::vector<std::vector<double>> localized_signature(const Graph& g) {
  Eigen::MatrixXd p = time_avg_transition(g);
  std::vector<std::vector<double>> out(g.n());
  for (int v = 0; v < g.n(); ++v) {
    out[v].resize(g.n());
    for (int u = 0; u < g.n(); ++u) out[v][u] = p(v, u);
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

std::vector<double> default_time_grid(int K) {
  if (K < 1) throw std::invalid_argument("default_time_grid: K must be >= 1");
  std::vector<double> out(K);
  for (int k = 1; k <= K; ++k) out[k - 1] = k * M_PI / K;
  return out;
}

std::vector<double> random_time_grid(int K, uint64_t seed) {
  if (K < 1) throw std::invalid_argument("random_time_grid: K must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.1, M_PI);
  std::vector<double> out(K);
  for (auto& t : out) t = dist(rng);
  return out;
}

}  // namespace qpe
