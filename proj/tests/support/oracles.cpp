#include "support/oracles.hpp"

#include <cmath>
#include <map>
#include <set>

namespace chromastate::testing {

int rank_by_row_span(const FieldMatrix& m) {
  std::set<std::vector<int>> span;
  VectorEnumerator coeffs(m.rows, m.dim);
  std::vector<int> w;
  while (coeffs.next(w)) {
    span.insert(mat_vec_mul(FieldVector(m.dim, w), m).entries);
  }
  int rank = 0;
  std::size_t power = 1;
  while (power < span.size()) {
    power *= static_cast<std::size_t>(m.dim.value());
    ++rank;
  }
  return rank;
}

DensityMatrix brute_partial_trace(const StateVector& s,
                                  const std::vector<int>& keep) {
  const int d = s.dim.value();
  const int k = static_cast<int>(keep.size());
  const std::uint64_t side = pow_u64(d, k);
  DensityMatrix rho{k, s.dim, std::vector<Amp>(side * side, Amp(0.0, 0.0))};
  std::vector<int> rest;
  for (int q = 0; q < s.n; ++q) {
    bool kept = false;
    for (int kv : keep) kept = kept || kv == q;
    if (!kept) rest.push_back(q);
  }
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    const auto di = amp_digits(i, s.n, d);
    for (std::uint64_t j = 0; j < s.size(); ++j) {
      const auto dj = amp_digits(j, s.n, d);
      bool same_env = true;
      for (int q : rest) same_env = same_env && di[q] == dj[q];
      if (!same_env) continue;
      std::vector<int> row_digits, col_digits;
      for (int q : keep) {
        row_digits.push_back(di[q]);
        col_digits.push_back(dj[q]);
      }
      rho.entries[amp_index(row_digits, d) * side + amp_index(col_digits, d)] +=
          s.amps[i] * std::conj(s.amps[j]);
    }
  }
  return rho;
}

StateVector chain_apply_direct(int length, const std::vector<int>& weights,
                               PrimeDimension dim, const std::vector<int>& input) {
  StateVector s = basis_state(length, dim, input);
  for (int q = 0; q < length; ++q) s = apply_h(std::move(s), q);
  for (int j = 0; j + 1 < length; ++j) {
    s = apply_cz(std::move(s), j, j + 1, weights[j]);
  }
  for (int q = 0; q < length; q += 2) {
    s = apply_hdag(std::move(s), q);
  }
  return s;
}

bool balanced_projection(const std::vector<std::vector<int>>& rows, int d,
                         const std::vector<int>& cols) {
  std::map<std::vector<int>, std::size_t> counts;
  for (const auto& row : rows) {
    std::vector<int> key;
    for (int c : cols) key.push_back(row[c]);
    ++counts[key];
  }
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    tuples *= static_cast<std::size_t>(d);
  }
  if (counts.size() != tuples) return false;
  const std::size_t expect = rows.size() / tuples;
  if (expect * tuples != rows.size()) return false;
  for (const auto& [key, count] : counts) {
    if (count != expect) return false;
  }
  return true;
}

}  // namespace chromastate::testing
