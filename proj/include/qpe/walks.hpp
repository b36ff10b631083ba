#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qpe/graph.hpp"

namespace qpe {

/// K stacked n x n feature matrices; slice k is one step / sampled time.
struct EncodingTensor {
  int steps = 0;
  int n = 0;
  std::vector<Eigen::MatrixXd> slices;

  bool all_finite() const {
    for (const auto& s : slices)
      if (!s.allFinite()) return false;
    return true;
  }
};

/// Initial state of a walk. Localized holds one node (1-particle) or a
/// pair (2-particle); the uniform variants are superpositions over all
/// pairs or over the edges of the graph.
struct InitSpec {
  enum class Kind { Localized, UniformPairs, UniformEdges };

  Kind kind = Kind::UniformEdges;
  int i = -1;
  int j = -1;

  static InitSpec localized(int i) { return {Kind::Localized, i, -1}; }
  static InitSpec localized(int i, int j) { return {Kind::Localized, i, j}; }
  static InitSpec uniform_pairs() { return {Kind::UniformPairs, -1, -1}; }
  static InitSpec uniform_edges() { return {Kind::UniformEdges, -1, -1}; }
};

/// Basis of the k-particle subspace: sorted k-subsets in lexicographic
/// order, plus the hopping graph on them (the XY hamiltonian restricted
/// to the subspace, coupling scalar normalized to 1).
struct OccupationBasis {
  Graph graph;
  std::vector<std::vector<int>> subsets;

  explicit OccupationBasis(Graph g) : graph(std::move(g)) {}
  int index_of(std::vector<int> subset) const;  // subset need not be sorted
};

/// Guard for subspace sizes.
inline constexpr long kMaxOccupationBasis = 2'000'000;

OccupationBasis occupation_graph(const Graph& g, int k);

/// Random-walk probabilities (D^{-1}A)^k for k = 0..K-1. Rows of
/// zero-degree nodes are all zero.
EncodingTensor rrwp(const Graph& g, int K);

/// 1-particle continuous walk: slice entry (i, j) = |<j|e^{-iAt}|i>|^2.
EncodingTensor cqrw1(const Graph& g, const std::vector<double>& times);

/// 2-particle continuous walk from init; slice entry (i, j), i != j, is
/// the probability of the pair outcome {i, j}; diagonal zero.
EncodingTensor cqrw2(const Graph& g, const std::vector<double>& times,
                     const InitSpec& init);

/// Discrete quantum-inspired 2-particle walk: slice k is
/// ((D2)^{-1} H2)^k applied to the init vector, mapped back to pairs.
EncodingTensor qirw2(const Graph& g, int K, const InitSpec& init);

/// Covariance of occupation observables on the evolved 2-particle
/// state: C_uv = <n_u n_v> - <n_u><n_v>, diagonal <n_v> - <n_v>^2.
Eigen::MatrixXd xy2_correlations(const Graph& g, double t, const InitSpec& init);

/// Mean of xy2_correlations over all C(n,2) localized starts. Unlike
/// the uniform superposition starts this separates same-family strongly
/// regular graphs, so the family experiments use it.
Eigen::MatrixXd xy2_correlations_localized_average(const Graph& g, double t);

/// Time averaged 1-particle transition probabilities
/// p(i -> j) = sum_lambda |P^lambda_{ji}|^2.
Eigen::MatrixXd time_avg_transition(const Graph& g);

/// Node signatures: ascending-sorted rows of time_avg_transition.
std::vector<std::vector<double>> localized_signature(const Graph& g);

/// Deterministic default time grid t_k = k pi / K, k = 1..K.
std::vector<double> default_time_grid(int K);

/// Seeded uniform-random grid on (0.1, pi], mirroring the K-random-times
/// protocol.
std::vector<double> random_time_grid(int K, uint64_t seed);

}  // namespace qpe
