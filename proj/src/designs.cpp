#include "chromastate/designs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chromastate/simulator.hpp"

namespace chromastate {

OrthogonalArray oa_from_generator(const FieldMatrix& generator) {
  VectorEnumerator assignments(generator.rows, generator.dim);
  OrthogonalArray oa{assignments.count(), generator.cols, generator.dim, {}, -1};
  oa.table.reserve(oa.rows * static_cast<std::uint64_t>(oa.cols));
  std::vector<int> w;
  while (assignments.next(w)) {
    const FieldVector row = mat_vec_mul(FieldVector(generator.dim, w), generator);
    oa.table.insert(oa.table.end(), row.entries.begin(), row.entries.end());
  }
  oa.strength = oa_strength(oa);
  return oa;
}

namespace {

bool next_combination(std::vector<int>& comb, int limit) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < limit - (k - i)) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool balanced_at(const OrthogonalArray& oa, const std::vector<int>& cols) {
  const int d = oa.dim.value();
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) tuples *= static_cast<std::uint64_t>(d);
  if (oa.rows % tuples != 0) return false;
  const std::uint64_t expect = oa.rows / tuples;
  std::vector<std::uint64_t> counts(tuples, 0);
  for (std::uint64_t r = 0; r < oa.rows; ++r) {
    std::uint64_t key = 0;
    for (int c : cols) key = key * d + static_cast<std::uint64_t>(oa.at(r, c));
    ++counts[key];
  }
  return std::all_of(counts.begin(), counts.end(),
                     [&](std::uint64_t c) { return c == expect; });
}

}  // namespace

int oa_strength(const OrthogonalArray& oa) {
  if (oa.rows > (std::uint64_t(1) << 20) || oa.cols > 16) {
    throw CapError("strength computation refused beyond r=2^20, n=16");
  }
  int strength = 0;
  for (int k = 1; k <= oa.cols; ++k) {
    std::uint64_t tuples = 1;
    bool overflow = false;
    for (int i = 0; i < k; ++i) {
      tuples *= static_cast<std::uint64_t>(oa.dim.value());
      if (tuples > oa.rows) {
        overflow = true;
        break;
      }
    }
    if (overflow || oa.rows % tuples != 0) break;
    std::vector<int> cols(static_cast<std::size_t>(k));
    std::iota(cols.begin(), cols.end(), 0);
    bool all_balanced = true;
    do {
      if (!balanced_at(oa, cols)) {
        all_balanced = false;
        break;
      }
    } while (next_combination(cols, oa.cols));
    if (!all_balanced) break;
    strength = k;
  }
  return strength;
}

QoaCertificate qoa_certify(const ClosedForm& cf, const WeightedGraph& g) {
  (void)g;
  const StateVector state = expand(cf);
  const int k_star = k_uniformity(state);
  const double residual =
      state.n >= 1 ? max_mixed_residual(state, std::max(k_star, 1)) : 0.0;
  std::uint64_t rows = 1;
  for (int i = 0; i < cf.m; ++i) rows *= static_cast<std::uint64_t>(cf.dim.value());
  return QoaCertificate{rows, cf.n, cf.dim.value(), k_star, residual};
}

namespace {

using Row = std::vector<int>;

std::vector<Row> table_rows(const OrthogonalArray& oa) {
  std::vector<Row> rows(oa.rows, Row(static_cast<std::size_t>(oa.cols)));
  for (std::uint64_t r = 0; r < oa.rows; ++r) {
    for (int c = 0; c < oa.cols; ++c) rows[r][c] = oa.at(r, c);
  }
  return rows;
}

// Prefix multisets after applying the column permutation and per-column
// affine maps chosen so far; backtracks column by column.
bool match_columns(const std::vector<Row>& a, const std::vector<Row>& b,
                   const std::vector<int>& perm, PrimeDimension dim,
                   std::vector<std::vector<int>>& a_prefix,
                   std::vector<std::vector<int>>& b_prefix, int col) {
  const int n = static_cast<int>(perm.size());
  if (col == n) return true;
  const int d = dim.value();
  for (int alpha = 1; alpha < d; ++alpha) {
    for (int beta = 0; beta < d; ++beta) {
      for (std::size_t r = 0; r < a.size(); ++r) {
        const int mapped = dim.add(dim.mul(alpha, a[r][perm[col]]), beta);
        a_prefix[r].push_back(mapped);
        b_prefix[r].push_back(b[r][col]);
      }
      std::vector<std::vector<int>> sa = a_prefix;
      std::vector<std::vector<int>> sb = b_prefix;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      const bool prefix_ok = (sa == sb);
      if (prefix_ok &&
          match_columns(a, b, perm, dim, a_prefix, b_prefix, col + 1)) {
        return true;
      }
      for (std::size_t r = 0; r < a.size(); ++r) {
        a_prefix[r].pop_back();
        b_prefix[r].pop_back();
      }
    }
  }
  return false;
}

}  // namespace

bool oa_equivalence_probe(const OrthogonalArray& a, const OrthogonalArray& b) {
  if (a.rows != b.rows || a.cols != b.cols || a.dim != b.dim) return false;
  if (a.cols > 8 || a.rows > 256) {
    throw CapError("equivalence probe refused beyond n=8, r=256");
  }
  const auto rows_a = table_rows(a);
  const auto rows_b = table_rows(b);
  std::vector<int> perm(static_cast<std::size_t>(a.cols));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::vector<int>> a_prefix(rows_a.size());
    std::vector<std::vector<int>> b_prefix(rows_b.size());
    if (match_columns(rows_a, rows_b, perm, a.dim, a_prefix, b_prefix, 0)) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string oa_text(const OrthogonalArray& oa) {
  std::ostringstream out;
  out << "OA " << oa.rows << " " << oa.cols << " " << oa.dim.value() << " "
      << oa.strength << "\n";
  for (std::uint64_t r = 0; r < oa.rows; ++r) {
    for (int c = 0; c < oa.cols; ++c) {
      if (c > 0) out << " ";
      out << oa.at(r, c);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace chromastate
