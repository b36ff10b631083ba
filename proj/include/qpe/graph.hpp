#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qpe {

/// Undirected simple graph stored as a dense symmetric 0/1 adjacency
/// matrix with zero diagonal. Immutable in spirit: build it, then share it.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("Graph: node count must be >= 1");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int n() const { return n_; }

  bool has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    return adj_[static_cast<size_t>(u) * n_ + v] != 0;
  }

  void add_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (u == v) throw std::invalid_argument("Graph: self loops are not allowed");
    adj_[static_cast<size_t>(u) * n_ + v] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
  }

  void remove_edge(int u, int v) {
    check_node(u);
    check_node(v);
    adj_[static_cast<size_t>(u) * n_ + v] = 0;
    adj_[static_cast<size_t>(v) * n_ + u] = 0;
  }

  int degree(int v) const {
    check_node(v);
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[static_cast<size_t>(v) * n_ + u];
    return d;
  }

  std::vector<int> neighbors(int v) const {
    check_node(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (adj_[static_cast<size_t>(v) * n_ + u]) out.push_back(u);
    return out;
  }

  int edge_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) m += adj_[static_cast<size_t>(u) * n_ + v];
    return m;
  }

  Eigen::MatrixXd adjacency_matrix() const {
    Eigen::MatrixXd a(n_, n_);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) a(u, v) = adj_[static_cast<size_t>(u) * n_ + v];
    return a;
  }

  Graph complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check_node(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: node index out of range");
  }

  int n_;
  std::vector<uint8_t> adj_;
};

/// Parameters of a strongly regular graph srg(nu, k, lambda, mu).
struct SrgParams {
  int nu = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  bool operator==(const SrgParams&) const = default;

  /// k(k - lambda - 1) == (nu - k - 1) mu must hold for any SRG.
  bool feasible() const {
    return static_cast<long long>(k) * (k - lambda - 1) ==
           static_cast<long long>(nu - k - 1) * mu;
  }
};

/// Raised by parse_graph6 with the offending byte offset.
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& what, size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Decode one graph6 record (short form n <= 62, long form n <= 258047).
Graph parse_graph6(std::string_view line);

/// Encode in graph6; inverse of parse_graph6.
std::string write_graph6(const Graph& g);

/// Relabel nodes: result has an edge (perm[u], perm[v]) for every edge (u, v).
Graph permute(const Graph& g, const std::vector<int>& perm);

/// |N(u) ∩ N(v)| for u != v.
int common_neighbors(const Graph& g, int u, int v);

/// Check the strongly-regular conditions directly on the adjacency.
/// Complete and edgeless graphs yield nullopt (lambda or mu has no witness).
std::optional<SrgParams> validate_srg(const Graph& g);

/// Coefficients (alpha, beta, gamma) with A^m = alpha I + beta J + gamma A
/// for any srg with parameters p, from the recurrence seeded by
/// A^2 = kI + lambda A + mu (J - I - A).
struct SrgPowerCoeffs {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};
SrgPowerCoeffs srg_power_coeffs(const SrgParams& p, int m);

}  // namespace qpe
