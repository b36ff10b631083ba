#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qpe/graph.hpp"

namespace qpe {

/// Stable node coloring; class ids are contiguous from 0 in
/// first-occurrence order, rounds counts update iterations until the
/// partition stopped changing.
struct ColorPartition {
  std::vector<int> colors;
  int rounds = 0;

  int num_classes() const;
  std::vector<int> class_sizes() const;  // ascending
  bool operator==(const ColorPartition&) const = default;
};

/// Graph-level invariant: the sorted multiset of final canonical colors.
/// Canonical ids come from a per-round dictionary over serialized update
/// keys shared by every graph of one batch call, so fingerprints are
/// comparable exactly within that batch (and across processes).
struct Fingerprint {
  std::vector<int> sorted_colors;
  bool operator==(const Fingerprint&) const = default;
};

/// Classic 1-WL color refinement; init defaults to all-equal colors.
ColorPartition wl1(const Graph& g);
ColorPartition wl1(const Graph& g, const std::vector<int>& init);

/// 1-WL run in lockstep over several graphs with one shared dictionary;
/// the fingerprints are mutually comparable.
std::vector<Fingerprint> wl1_fingerprints(const std::vector<const Graph*>& graphs);

/// Partition by exact equality of the walk-count vectors (A^k 1), k = 1..n,
/// in arbitrary precision.
ColorPartition sum_refine(const Graph& g);

/// One n x n feature matrix per slice; K = 1 is the plain single-matrix test.
using FeatureStack = std::vector<Eigen::MatrixXd>;

/// GD-WL with real-valued features rounded to `rounding` decimal digits.
Fingerprint gdwl(const Graph& g, const FeatureStack& features, int rounding = 9);

std::vector<Fingerprint> gdwl_fingerprints(
    const std::vector<const Graph*>& graphs,
    const std::vector<FeatureStack>& features, int rounding = 9);

/// 1-WL on the k-particle occupation graph (the k-delta-LWL coloring).
ColorPartition occupation_wl(const Graph& g, int k);

enum class DistinguishMethod {
  Wl1,
  GdwlRrwp,
  Qw1Signature,
  OccupationWl2,
  OccupationWl3,
  IsingP1,
  Xy2,
};

DistinguishMethod distinguish_method_from_name(const std::string& name);
std::string distinguish_method_name(DistinguishMethod m);

struct DistinguishResult {
  bool distinguished = false;
  std::string method;
  std::string witness;   // what differed (or why nothing did)
  double distance = 0.0; // for the distance-based methods
};

DistinguishResult distinguish(const Graph& g1, const Graph& g2,
                              DistinguishMethod method);

}  // namespace qpe
