#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qpe/graph.hpp"

namespace qpe {

/// All configurations minimizing E(b) = #edges inside b - delta |b|.
/// For 0 < delta < 1 these are exactly the maximum independent sets.
struct GroundStateManifold {
  int n = 0;
  double delta = 0.5;
  std::vector<uint64_t> configs;  // bit v set <=> node v occupied
  double energy = 0.0;
};

inline constexpr int kMaxGroundStateNodes = 30;

GroundStateManifold ising_ground_manifold(const Graph& g, double delta = 0.5);

/// C_ij = average of z_i z_j over the manifold, z = 1 - 2b. Symmetric
/// positive semidefinite with unit diagonal.
Eigen::MatrixXd gs_correlation(const GroundStateManifold& m);

/// Top-m eigenvectors of the correlation matrix by descending eigenvalue,
/// each column sign-canonicalized (first entry above 1e-12 made positive).
Eigen::MatrixXd gs_positional_encoding(const Eigen::MatrixXd& c, int m);

/// Ladder fixtures: 2L nodes in two rails (rail A = 0..L-1, rail B =
/// L..2L-1) with rungs (i, L+i) and rail edges; a crossing adds one
/// diagonal edge (i, L+i+1). Kind 0 is the plain ladder (L >= 2, two
/// ground states); kind 1 adds crossings at segments {0, 2} (L >= 4, one
/// ground state); kind 2 takes odd L >= 9 with crossings at {2, L-4}
/// (exactly L ground states).
Graph ladder_graph(int kind, int length);

}  // namespace qpe
