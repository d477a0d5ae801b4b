#pragma once

#include <cstddef>
#include <vector>

#include "chromastate/graph.hpp"

namespace chromastate::testing {

/// One representative per isomorphism class of connected graphs, unit
/// weights, for every vertex count in [1, max_n]. Deterministic order.
std::vector<WeightedGraph> connected_catalog(int max_n, PrimeDimension dim);

/// Number of catalog entries with exactly n vertices.
std::size_t connected_count(int n, PrimeDimension dim);

}  // namespace chromastate::testing
