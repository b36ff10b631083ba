#pragma once

#include <vector>

#include "qpe/graph.hpp"

namespace qpe::fixtures {

/// Kneser graph K(5,2): srg(10, 3, 0, 1).
Graph petersen();

/// 4x4 rook's graph (same row or column on a 4x4 board): srg(16, 6, 2, 2).
Graph rook_4x4();

/// Shrikhande graph (Cayley graph of Z4 x Z4 with +-(1,0), +-(0,1),
/// +-(1,1)): srg(16, 6, 2, 2), not isomorphic to the rook's graph.
Graph shrikhande();

/// The complete families, vendored in graph6 form (see data/srg/ and
/// tools/srg_families.cpp for the generator).
const std::vector<Graph>& srg_25_12_5_6();  // 15 graphs
const std::vector<Graph>& srg_26_10_3_4();  // 10 graphs

}  // namespace qpe::fixtures
