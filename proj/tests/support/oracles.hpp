#pragma once

#include <vector>

#include "chromastate/field.hpp"
#include "chromastate/graph.hpp"
#include "chromastate/simulator.hpp"

namespace chromastate::testing {

/// Rank by enumerating the full row span: log_d of the span cardinality.
/// Independent of the elimination path in mat_rank.
int rank_by_row_span(const FieldMatrix& m);

/// Partial trace by the definition: double loop over basis pairs with an
/// explicit environment-equality test. Independent of the library gather.
DensityMatrix brute_partial_trace(const StateVector& s,
                                  const std::vector<int>& keep);

/// Chain operator computed directly from gates: H on every position, CZ
/// along the chain, Hdag on odd 1-based positions, applied to |input>.
StateVector chain_apply_direct(int length, const std::vector<int>& weights,
                               PrimeDimension dim, const std::vector<int>& input);

/// True iff every j-column projection of the table is balanced; written
/// against the definition, separate from oa_strength's loop.
bool balanced_projection(const std::vector<std::vector<int>>& rows, int d,
                         const std::vector<int>& cols);

}  // namespace chromastate::testing
