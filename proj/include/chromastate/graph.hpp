#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromastate/field.hpp"

namespace chromastate {

/// Weighted graph over F_d: symmetric adjacency with zero diagonal,
/// Gamma_ij != 0 iff {i,j} is an edge with weight theta_ij.
struct WeightedGraph {
  int n;
  PrimeDimension dim;
  FieldMatrix gamma;

  WeightedGraph(int vertices, PrimeDimension d)
      : n(vertices), dim(d), gamma(d, vertices, vertices) {}

  bool has_edge(int u, int v) const { return gamma.at(u, v) != 0; }
  int weight(int u, int v) const { return gamma.at(u, v); }
  std::vector<int> neighbors(int v) const;
  int edge_count() const;
};

/// Builds and validates a graph from (u, v, weight) triples.
WeightedGraph make_graph(int n, PrimeDimension dim,
                         const std::vector<std::array<int, 3>>& edges);

struct ParsedGraph {
  WeightedGraph graph;
  std::vector<int> color_hint;  // per-vertex color, empty when absent
};

/// Parses the line-oriented graph file format
/// (`dim`, `vertices`, `edge u v w`, `color v c`, `#` comments).
ParsedGraph parse_graph(const std::string& text);

/// Canonical text form: dim, vertices, sorted edge lines. Hints are not
/// emitted.
std::string write_graph(const WeightedGraph& g);

/// Proper coloring with classes ordered by nondecreasing size.
struct Coloring {
  int chi = 0;
  std::vector<int> assignment;             // vertex -> class index
  std::vector<std::vector<int>> classes;   // each ascending
};

/// Exact chromatic coloring by branch and bound (refused for n > 24).
Coloring chromatic_coloring(const WeightedGraph& g);

/// Validates a per-vertex hint and re-sorts its classes stably by size,
/// preserving the hint's class order among equal sizes.
Coloring chromatic_coloring(const WeightedGraph& g, const std::vector<int>& hint);

struct BlockDecomposition {
  std::vector<int> ordering;  // permuted position -> original vertex
  // (i, k) with k < i, zero-based class indices; block shape n_i x n_k.
  std::map<std::pair<int, int>, FieldMatrix> blocks;
};

BlockDecomposition block_decompose(const WeightedGraph& g, const Coloring& c);

/// Rebuilds the adjacency from blocks and ordering; inverse of
/// block_decompose up to the stored permutation.
FieldMatrix reassemble_blocks(const BlockDecomposition& bd, int n,
                              PrimeDimension dim);

struct SpecialComponent {
  std::vector<int> greens;
  std::vector<int> blues;  // the component's B_c \ G vertices
};

struct SpecialClassStructure {
  std::vector<int> reds;
  std::vector<int> b_u;
  std::vector<SpecialComponent> components;
  int red_class = -1;    // coloring class index playing R
  int green_class = -1;  // coloring class index playing G (-1 when chi=2)
};

struct SpecialDetection {
  bool accepted = false;
  SpecialClassStructure structure;
  std::string rejection;  // first violated condition when not accepted
};

/// Recognizes the restricted three-colorable layout: blues split into B_u
/// plus connected two-colorable components, with the size conditions
/// n_R <= n_Bu and n_Gk <= n_{Bc\G,k}. Rejection is a value, not an error.
SpecialDetection detect_special_class(const WeightedGraph& g, const Coloring& c);

/// Weighted local complementation at vertex a:
/// Gamma'_bc = Gamma_bc + lambda * Gamma_ab * Gamma_ac for b != c != a.
WeightedGraph local_complement(const WeightedGraph& g, int a, int lambda);

/// True iff every square submatrix of m is nonsingular over F_d.
/// Exhaustive; refused when min(rows, cols) > 6.
bool all_square_submatrices_nonsingular(const FieldMatrix& m);

struct KuniformAdjacencyReport {
  bool a_ok = false;
  std::optional<bool> b1_ok;  // set only for accepted special layouts with s=1
};

KuniformAdjacencyReport kuniform_adjacency_check(const WeightedGraph& g,
                                                 const Coloring& c);

}  // namespace chromastate
