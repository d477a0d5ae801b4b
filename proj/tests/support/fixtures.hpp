#pragma once

#include <array>
#include <string>
#include <vector>

#include "chromastate/graph.hpp"

namespace chromastate::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(CHROMASTATE_FIXTURE_DIR) + "/" + name;
}

inline std::vector<std::array<int, 3>> unit_edges(
    const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::array<int, 3>> edges;
  for (const auto& [u, v] : pairs) edges.push_back({u, v, 1});
  return edges;
}

/// Six-particle circle, cycle order 0-3-1-4-2-5; bipartition {0,1,2}/{3,4,5}.
inline WeightedGraph six_cycle(PrimeDimension d) {
  return make_graph(6, d,
                    unit_edges({{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}}));
}

/// Six-particle cluster: blue 3 sees all reds, blue 4 sees {0,2}, blue 5
/// sees {1,2}.
inline WeightedGraph cluster6(PrimeDimension d) {
  return make_graph(
      6, d, unit_edges({{0, 3}, {1, 3}, {2, 3}, {0, 4}, {2, 4}, {1, 5}, {2, 5}}));
}

/// Six-cycle 0..5 plus chords {0,2}, {3,5}, {1,4}; AME(6,d) for prime d.
inline WeightedGraph fig3(PrimeDimension d) {
  return make_graph(6, d,
                    unit_edges({{0, 1},
                                {1, 2},
                                {2, 3},
                                {3, 4},
                                {4, 5},
                                {5, 0},
                                {0, 2},
                                {3, 5},
                                {1, 4}}));
}

inline std::vector<int> fig3_hint() { return {0, 2, 1, 0, 1, 2}; }

/// Two triangles {0,1,2} and {3,4,5} linked by {1,4} and {0,5}; the layout
/// whose compiled phase has exactly two cross terms. Kept for the
/// block-extraction example values.
inline WeightedGraph fig3_two_term_variant(PrimeDimension d) {
  return make_graph(6, d,
                    unit_edges({{0, 1},
                                {1, 2},
                                {0, 2},
                                {3, 4},
                                {4, 5},
                                {3, 5},
                                {1, 4},
                                {0, 5}}));
}

inline WeightedGraph triangle(PrimeDimension d) {
  return make_graph(3, d, unit_edges({{0, 1}, {1, 2}, {0, 2}}));
}

inline WeightedGraph path3(PrimeDimension d) {
  return make_graph(3, d, unit_edges({{0, 1}, {1, 2}}));
}

inline WeightedGraph k2(PrimeDimension d) {
  return make_graph(2, d, unit_edges({{0, 1}}));
}

/// Star K_{1,k} with the hub at vertex 0.
inline WeightedGraph star(int leaves, PrimeDimension d) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v <= leaves; ++v) pairs.emplace_back(0, v);
  return make_graph(leaves + 1, d, unit_edges(pairs));
}

/// Special-class example 1: reds 0-3, six untouched blues 4-9 fully
/// bipartite to the reds, and a 3-chain 10-11-12 (blue-green-blue) whose
/// members all couple to every red.
inline WeightedGraph sv_example1(PrimeDimension d) {
  std::vector<std::pair<int, int>> pairs;
  for (int b = 4; b <= 9; ++b) {
    for (int r = 0; r < 4; ++r) pairs.emplace_back(r, b);
  }
  for (int b = 10; b <= 12; ++b) {
    for (int r = 0; r < 4; ++r) pairs.emplace_back(r, b);
  }
  pairs.emplace_back(10, 11);
  pairs.emplace_back(11, 12);
  return make_graph(13, d, unit_edges(pairs));
}

inline std::vector<int> sv_example1_hint() {
  return {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 1};
}

/// Special-class example 2: reds 0-3, five untouched blues 4-8, and two
/// blue-green pairs (9,10) and (11,12), every pair member coupled to every
/// red.
inline WeightedGraph sv_example2(PrimeDimension d) {
  std::vector<std::pair<int, int>> pairs;
  for (int b = 4; b <= 8; ++b) {
    for (int r = 0; r < 4; ++r) pairs.emplace_back(r, b);
  }
  for (int b = 9; b <= 12; ++b) {
    for (int r = 0; r < 4; ++r) pairs.emplace_back(r, b);
  }
  pairs.emplace_back(9, 10);
  pairs.emplace_back(11, 12);
  return make_graph(13, d, unit_edges(pairs));
}

inline std::vector<int> sv_example2_hint() {
  return {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 1, 2};
}

}  // namespace chromastate::testing
