#pragma once

#include <cstdint>

#include "chromastate/closedform.hpp"
#include "chromastate/graph.hpp"

namespace chromastate {

/// Schmidt-measure and Z-eigenbasis term-count bounds, all pure functions
/// of the adjacency and coloring.
struct SchmidtBounds {
  int gamma_rank;          // rank of the adjacency over F_d
  double lower_rank;       // gamma_rank / 2
  bool lower_color_applicable;
  bool lower_color_from_sum;  // sum-of-free-classes rule vs second-largest class
  int lower_color;
  int upper;               // floor(n/2) for chi<=2, floor((n+K)/2) otherwise
  int removed_vertices;    // K, minimum deletions to reach a bipartite graph
  bool term_lower_applicable;
  std::uint64_t term_lower;   // d^lower_color
  bool term_upper_applicable; // chi == 2 only
  std::uint64_t term_upper;   // d^upper
};

SchmidtBounds schmidt_bounds(const WeightedGraph& g, const Coloring& c);

/// Minimum number of vertex deletions making the support graph bipartite,
/// exact by subset enumeration ordered by size. Refused for n > 20.
int odd_cycle_transversal(const WeightedGraph& g);

struct TermCount {
  std::uint64_t count;  // d^m
  bool meets_lower;     // m equals the applicable color lower bound
};

TermCount term_count(const ClosedForm& cf, const SchmidtBounds& bounds);

}  // namespace chromastate
