#pragma once

#include <string>
#include <vector>

#include "chromastate/graph.hpp"
#include "chromastate/simulator.hpp"

namespace chromastate {

/// Canonical closed form of a colored graph state: kets are rows of
/// `generator` indexed by free-class assignments, phases come from the
/// strictly upper-triangular quadratic form `phase`.
///
/// Columns of `generator` follow vertex_order (classes c_1..c_chi
/// concatenated, ascending inside a class); the leading m columns are the
/// identity. Row/column j of `phase` belongs to free position j.
struct ClosedForm {
  int n;
  PrimeDimension dim;
  int m;    // free-index count, sum of all class sizes but the last
  int chi;
  std::vector<int> vertex_order;  // position -> original vertex
  std::vector<int> class_sizes;
  FieldMatrix generator;  // m x n
  FieldMatrix phase;      // m x m, strictly upper triangular
};

ClosedForm compile_chi_color(const WeightedGraph& g, const Coloring& c);

/// chi = 2 specialization; the phase form is exactly zero.
ClosedForm compile_two_color(const WeightedGraph& g, const Coloring& c);

/// One factor of the coupling layer: Z^(f) on greens, X^(f) on blues, with
/// f the red-weighted linear form sum_r coeffs[r] * u_r.
struct DeltaEntry {
  int vertex;
  bool z_type;
  std::vector<int> red_coeffs;
};

struct SpecialFormComponent {
  std::vector<int> greens;
  std::vector<int> blues;
  FieldMatrix inner_generator;  // n_G x (n_G + n_blues)
  std::vector<DeltaEntry> delta;  // component vertices, ascending
};

/// Factored presentation: outer sum over red assignments on R and B_u,
/// a coupling layer per component, and an inner two-colorable sum per
/// component. `base` is the equivalent canonical form; both expansions
/// agree amplitude for amplitude.
struct SpecialForm {
  ClosedForm base;
  std::vector<int> reds;
  std::vector<int> b_u;
  FieldMatrix outer_generator;  // n_R x (n_R + n_Bu)
  std::vector<SpecialFormComponent> components;
};

SpecialForm compile_special(const WeightedGraph& g, const Coloring& c,
                            const SpecialClassStructure& s);

StateVector expand(const ClosedForm& cf);
/// Expands through the factored route (outer x coupling x inner).
StateVector expand(const SpecialForm& sf);

/// Builds the graph state, applies Hdag to every vertex of the last color
/// class, and returns the fidelity against expand(cf).
double verify(const ClosedForm& cf, const WeightedGraph& g, const Coloring& c);
/// Same contract; Hdag targets are B_u and every component's blues.
double verify(const SpecialForm& sf, const WeightedGraph& g, const Coloring& c);

/// Human-readable form, e.g.
/// "Σ ω^{i1*i3 + i4*i5} |i1, i1+i3+i5, i3, i4, i5, i1+i4+i5⟩".
/// Free indices are named i<v+1> for vertex v; ket entries follow original
/// vertex order with terms sorted by vertex.
std::string summation_string(const ClosedForm& cf);

struct SpecialRendering {
  std::string outer;
  std::vector<std::string> deltas;
  std::vector<std::string> inners;
};

SpecialRendering special_rendering(const SpecialForm& sf);

/// Factored action of the chain operator
/// Hdag^(odd positions) (prod CZ along the chain) H^(all) on a basis ket:
/// X^{i} prefactors on odd 1-based positions, Z^{i} on even ones, and an
/// inner sum with one free index per even position.
struct ChainOperatorForm {
  int length;
  PrimeDimension dim;
  std::vector<int> weights;  // weights[j] couples positions j and j+1
};

ChainOperatorForm chain_operator_form(int length, const std::vector<int>& weights,
                                      PrimeDimension dim);

/// State the factored form assigns to basis input |i_1..i_k>; equals the
/// directly computed operator column exactly, including global phase.
StateVector chain_apply_factored(const ChainOperatorForm& form,
                                 const std::vector<int>& input);

std::string chain_prefactor_string(const ChainOperatorForm& form);
std::string chain_inner_string(const ChainOperatorForm& form);

}  // namespace chromastate
