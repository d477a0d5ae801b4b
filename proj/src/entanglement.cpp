#include "chromastate/entanglement.hpp"

#include <numeric>

namespace chromastate {

namespace {

bool bipartite_without(const WeightedGraph& g, const std::vector<bool>& removed) {
  std::vector<int> side(static_cast<std::size_t>(g.n), -1);
  for (int start = 0; start < g.n; ++start) {
    if (removed[start] || side[start] != -1) continue;
    side[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < g.n; ++u) {
        if (removed[u] || g.gamma.at(v, u) == 0) continue;
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

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

}  // namespace

int odd_cycle_transversal(const WeightedGraph& g) {
  if (g.n > 20) throw CapError("odd cycle transversal refused for n > 20");
  std::vector<bool> removed(static_cast<std::size_t>(g.n), false);
  if (bipartite_without(g, removed)) return 0;
  for (int k = 1; k <= g.n; ++k) {
    std::vector<int> sel(static_cast<std::size_t>(k));
    std::iota(sel.begin(), sel.end(), 0);
    do {
      std::fill(removed.begin(), removed.end(), false);
      for (int v : sel) removed[v] = true;
      if (bipartite_without(g, removed)) return k;
    } while (next_combination(sel, g.n));
  }
  return g.n;
}

SchmidtBounds schmidt_bounds(const WeightedGraph& g, const Coloring& c) {
  SchmidtBounds b{};
  b.gamma_rank = mat_rank(g.gamma);
  b.lower_rank = 0.5 * b.gamma_rank;

  int free_sum = 0;
  for (int cls = 0; cls + 1 < c.chi; ++cls) {
    free_sum += static_cast<int>(c.classes[cls].size());
  }
  const int last = c.chi >= 1 ? static_cast<int>(c.classes[c.chi - 1].size()) : 0;
  if (free_sum <= last) {
    b.lower_color_applicable = true;
    b.lower_color_from_sum = true;
    b.lower_color = free_sum;
  } else if (c.chi == 3) {
    b.lower_color_applicable = true;
    b.lower_color_from_sum = false;
    b.lower_color = static_cast<int>(c.classes[1].size());
  } else {
    b.lower_color_applicable = false;
    b.lower_color = 0;
  }

  if (c.chi <= 2) {
    b.removed_vertices = 0;
    b.upper = g.n / 2;
  } else {
    b.removed_vertices = odd_cycle_transversal(g);
    b.upper = (g.n + b.removed_vertices) / 2;
  }

  b.term_lower_applicable = b.lower_color_applicable;
  b.term_lower =
      b.lower_color_applicable ? pow_u64(g.dim.value(), b.lower_color) : 0;
  b.term_upper_applicable = (c.chi == 2);
  b.term_upper = b.term_upper_applicable ? pow_u64(g.dim.value(), b.upper) : 0;
  return b;
}

TermCount term_count(const ClosedForm& cf, const SchmidtBounds& bounds) {
  TermCount out{};
  out.count = pow_u64(cf.dim.value(), cf.m);
  out.meets_lower =
      bounds.lower_color_applicable && cf.m == bounds.lower_color;
  return out;
}

}  // namespace chromastate
