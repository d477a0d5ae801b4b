#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromastate/closedform.hpp"
#include "chromastate/field.hpp"

namespace chromastate {

/// r x n symbol table over [0, d). Rows may repeat; balance counting is
/// multiset-based.
struct OrthogonalArray {
  std::uint64_t rows;
  int cols;
  PrimeDimension dim;
  std::vector<int> table;  // row-major
  int strength = -1;

  int at(std::uint64_t r, int c) const {
    return table[r * static_cast<std::uint64_t>(cols) + c];
  }
};

/// All d^m generator combinations as rows, in enumeration order, with the
/// strength computed exhaustively.
OrthogonalArray oa_from_generator(const FieldMatrix& generator);

/// Exact maximum strength: k grows until some k-column projection is
/// unbalanced. Limits: r <= 2^20, n <= 16.
int oa_strength(const OrthogonalArray& oa);

struct QoaCertificate {
  std::uint64_t rows;
  int cols;
  int d;
  int k_star;
  double residual;  // max |rho - I/d^k| at k_star (at k=1 when k_star=0)
};

/// Expands the closed form and certifies its uniformity level numerically.
QoaCertificate qoa_certify(const ClosedForm& cf, const WeightedGraph& g);

/// Equivalence probe over column permutations and per-column affine symbol
/// relabelings x -> a*x + b (the full symbol group for d = 2). Restricted
/// relabeling group for d > 2 by design. Limits: n <= 8, r <= 256.
bool oa_equivalence_probe(const OrthogonalArray& a, const OrthogonalArray& b);

/// Plain text serialization: header "OA r n d k", then one row per line.
std::string oa_text(const OrthogonalArray& oa);

}  // namespace chromastate
