#include "chromastate/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chromastate {

std::vector<int> WeightedGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n; ++u) {
    if (u != v && gamma.at(v, u) != 0) out.push_back(u);
  }
  return out;
}

int WeightedGraph::edge_count() const {
  int count = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (gamma.at(u, v) != 0) ++count;
    }
  }
  return count;
}

WeightedGraph make_graph(int n, PrimeDimension dim,
                         const std::vector<std::array<int, 3>>& edges) {
  if (n < 1) throw InputError("vertex count must be positive");
  WeightedGraph g(n, dim);
  for (const auto& e : edges) {
    const int u = e[0], v = e[1];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge endpoint out of range: " + std::to_string(u) +
                       " " + std::to_string(v));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    const int w = dim.reduce(e[2]);
    if (w == 0) {
      throw InputError("edge " + std::to_string(u) + " " + std::to_string(v) +
                       " has weight congruent to zero");
    }
    const int existing = g.gamma.at(u, v);
    if (existing != 0 && existing != w) {
      throw InputError("conflicting duplicate edge " + std::to_string(u) + " " +
                       std::to_string(v));
    }
    g.gamma.at(u, v) = w;
    g.gamma.at(v, u) = w;
  }
  return g;
}

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

ParsedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<int> dim_value;
  std::optional<int> vertex_count;
  std::vector<std::array<int, 3>> edges;
  std::vector<std::pair<int, int>> colors;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(strip_comment(line));
    std::string key;
    if (!(ls >> key)) continue;
    const std::string where = " (line " + std::to_string(line_no) + ")";
    if (key == "dim") {
      int d;
      if (!(ls >> d)) throw InputError("malformed dim line" + where);
      if (dim_value) throw InputError("duplicate dim line" + where);
      dim_value = d;
    } else if (key == "vertices") {
      int n;
      if (!(ls >> n)) throw InputError("malformed vertices line" + where);
      if (vertex_count) throw InputError("duplicate vertices line" + where);
      if (n < 1) throw InputError("vertex count must be positive" + where);
      vertex_count = n;
    } else if (key == "edge") {
      int u, v, w;
      if (!(ls >> u >> v >> w)) throw InputError("malformed edge line" + where);
      if (!dim_value || !vertex_count) {
        throw InputError("edge before dim/vertices" + where);
      }
      edges.push_back({u, v, w});
    } else if (key == "color") {
      int v, c;
      if (!(ls >> v >> c)) throw InputError("malformed color line" + where);
      if (!vertex_count) throw InputError("color before vertices" + where);
      if (v < 0 || v >= *vertex_count) {
        throw InputError("color vertex out of range" + where);
      }
      if (c < 0) throw InputError("negative color" + where);
      colors.emplace_back(v, c);
    } else {
      throw InputError("unknown directive '" + key + "'" + where);
    }
  }
  if (!dim_value) throw InputError("missing dim line");
  if (!vertex_count) throw InputError("missing vertices line");
  PrimeDimension dim(*dim_value);
  ParsedGraph out{make_graph(*vertex_count, dim, edges), {}};
  if (!colors.empty()) {
    std::vector<int> hint(static_cast<std::size_t>(*vertex_count), -1);
    for (const auto& [v, c] : colors) {
      if (hint[v] != -1 && hint[v] != c) {
        throw InputError("conflicting colors for vertex " + std::to_string(v));
      }
      hint[v] = c;
    }
    for (int v = 0; v < *vertex_count; ++v) {
      if (hint[v] < 0) {
        throw InputError("color hint misses vertex " + std::to_string(v));
      }
    }
    out.color_hint = std::move(hint);
  }
  return out;
}

std::string write_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "dim " << g.dim.value() << "\n";
  out << "vertices " << g.n << "\n";
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.gamma.at(u, v) != 0) {
        out << "edge " << u << " " << v << " " << g.gamma.at(u, v) << "\n";
      }
    }
  }
  return out.str();
}

namespace {

void check_proper(const WeightedGraph& g, const std::vector<int>& assignment) {
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.gamma.at(u, v) != 0 && assignment[u] == assignment[v]) {
        throw InputError("coloring not proper: vertices " + std::to_string(u) +
                         " and " + std::to_string(v) +
                         " are adjacent and share a color");
      }
    }
  }
}

Coloring coloring_from_ordered_classes(const WeightedGraph& g,
                                       std::vector<std::vector<int>> classes,
                                       bool canonical_ties) {
  if (canonical_ties) {
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a.front() < b.front();
              });
  } else {
    std::stable_sort(classes.begin(), classes.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                       return a.size() < b.size();
                     });
  }
  Coloring c;
  c.chi = static_cast<int>(classes.size());
  c.assignment.assign(static_cast<std::size_t>(g.n), -1);
  for (int idx = 0; idx < c.chi; ++idx) {
    for (int v : classes[idx]) c.assignment[v] = idx;
  }
  c.classes = std::move(classes);
  check_proper(g, c.assignment);
  return c;
}

// Backtracking k-colorability over the support graph. Vertices are tried in
// `order`; colors for a vertex are capped at one past the highest color used
// so far, which prunes color-permutation symmetry.
bool color_with_k(const WeightedGraph& g, const std::vector<int>& order, int k,
                  std::vector<int>& assignment) {
  const int n = g.n;
  std::vector<int> chosen(static_cast<std::size_t>(n), -1);
  int pos = 0;
  std::vector<int> next_try(static_cast<std::size_t>(n), 0);
  while (pos >= 0 && pos < n) {
    const int v = order[pos];
    int max_used = -1;
    for (int p = 0; p < pos; ++p) max_used = std::max(max_used, chosen[order[p]]);
    const int limit = std::min(k - 1, max_used + 1);
    int color = -1;
    for (int c = next_try[pos]; c <= limit; ++c) {
      bool ok = true;
      for (int u = 0; u < n; ++u) {
        if (g.gamma.at(v, u) != 0 && chosen[u] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color = c;
        break;
      }
    }
    if (color < 0) {
      next_try[pos] = 0;
      chosen[v] = -1;
      --pos;
      if (pos >= 0) {
        next_try[pos] = chosen[order[pos]] + 1;
        chosen[order[pos]] = -1;
      }
      continue;
    }
    chosen[v] = color;
    next_try[pos] = color;
    ++pos;
  }
  if (pos < 0) return false;
  assignment = chosen;
  return true;
}

}  // namespace

Coloring chromatic_coloring(const WeightedGraph& g) {
  if (g.n > 24) {
    throw CapError("exact chromatic search refused for n > 24 without a hint");
  }
  std::vector<int> order(static_cast<std::size_t>(g.n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> degree(static_cast<std::size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v) {
    degree[v] = static_cast<int>(g.neighbors(v).size());
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return a < b;
  });
  for (int k = 1; k <= g.n; ++k) {
    std::vector<int> assignment;
    if (!color_with_k(g, order, k, assignment)) continue;
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(k));
    for (int v = 0; v < g.n; ++v) classes[assignment[v]].push_back(v);
    return coloring_from_ordered_classes(g, std::move(classes), true);
  }
  throw std::logic_error("unreachable: every graph is n-colorable");
}

Coloring chromatic_coloring(const WeightedGraph& g, const std::vector<int>& hint) {
  if (static_cast<int>(hint.size()) != g.n) {
    throw InputError("color hint must cover every vertex");
  }
  check_proper(g, hint);
  std::vector<int> labels = hint;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<std::vector<int>> classes(labels.size());
  for (int v = 0; v < g.n; ++v) {
    const auto it = std::lower_bound(labels.begin(), labels.end(), hint[v]);
    classes[static_cast<std::size_t>(it - labels.begin())].push_back(v);
  }
  return coloring_from_ordered_classes(g, std::move(classes), false);
}

BlockDecomposition block_decompose(const WeightedGraph& g, const Coloring& c) {
  check_proper(g, c.assignment);
  BlockDecomposition bd;
  for (const auto& cls : c.classes) {
    bd.ordering.insert(bd.ordering.end(), cls.begin(), cls.end());
  }
  for (int i = 1; i < c.chi; ++i) {
    for (int k = 0; k < i; ++k) {
      const auto& rows = c.classes[i];
      const auto& cols = c.classes[k];
      FieldMatrix block(g.dim, static_cast<int>(rows.size()),
                        static_cast<int>(cols.size()));
      for (int r = 0; r < block.rows; ++r) {
        for (int cc = 0; cc < block.cols; ++cc) {
          block.at(r, cc) = g.gamma.at(rows[r], cols[cc]);
        }
      }
      bd.blocks.emplace(std::make_pair(i, k), std::move(block));
    }
  }
  return bd;
}

FieldMatrix reassemble_blocks(const BlockDecomposition& bd, int n,
                              PrimeDimension dim) {
  FieldMatrix out(dim, n, n);
  // position of each class in the permuted layout
  std::vector<int> starts;
  {
    // class sizes are recoverable from the block shapes; fall back to the
    // ordering length for the single-class case
    std::map<int, int> sizes;
    for (const auto& [key, block] : bd.blocks) {
      sizes[key.first] = block.rows;
      sizes[key.second] = block.cols;
    }
    if (sizes.empty()) sizes[0] = static_cast<int>(bd.ordering.size());
    int acc = 0;
    for (const auto& [cls, sz] : sizes) {
      (void)cls;
      starts.push_back(acc);
      acc += sz;
    }
  }
  for (const auto& [key, block] : bd.blocks) {
    const auto [i, k] = key;
    for (int r = 0; r < block.rows; ++r) {
      for (int c = 0; c < block.cols; ++c) {
        const int u = bd.ordering[starts[i] + r];
        const int v = bd.ordering[starts[k] + c];
        out.at(u, v) = block.at(r, c);
        out.at(v, u) = block.at(r, c);
      }
    }
  }
  return out;
}

namespace {

struct SpecialAttempt {
  bool ok = false;
  SpecialClassStructure structure;
  std::string failure;
};

SpecialAttempt try_special_roles(const WeightedGraph& g, const Coloring& c,
                                 int green_class, int red_class) {
  SpecialAttempt attempt;
  const auto& greens = c.classes[green_class];
  const auto& reds = c.classes[red_class];
  const auto& blues = c.classes[2];

  // Connected components of the green-union-blue subgraph. Only green-blue
  // edges can exist there, so green-free components are isolated blues.
  std::vector<int> members;
  members.insert(members.end(), greens.begin(), greens.end());
  members.insert(members.end(), blues.begin(), blues.end());
  std::sort(members.begin(), members.end());
  std::map<int, int> comp_of;
  int comp_count = 0;
  for (int start : members) {
    if (comp_of.count(start)) continue;
    const int id = comp_count++;
    std::vector<int> stack{start};
    comp_of[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : members) {
        if (!comp_of.count(u) && g.gamma.at(v, u) != 0) {
          comp_of[u] = id;
          stack.push_back(u);
        }
      }
    }
  }
  std::vector<SpecialComponent> comps(static_cast<std::size_t>(comp_count));
  for (int v : greens) comps[comp_of[v]].greens.push_back(v);
  for (int v : blues) comps[comp_of[v]].blues.push_back(v);

  SpecialClassStructure s;
  s.red_class = red_class;
  s.green_class = green_class;
  s.reds = reds;
  for (auto& comp : comps) {
    if (comp.greens.empty()) {
      s.b_u.insert(s.b_u.end(), comp.blues.begin(), comp.blues.end());
    } else {
      s.components.push_back(std::move(comp));
    }
  }
  std::sort(s.b_u.begin(), s.b_u.end());

  if (static_cast<int>(s.reds.size()) > static_cast<int>(s.b_u.size())) {
    attempt.failure = "size condition n_R <= n_Bu fails: n_R=" +
                      std::to_string(s.reds.size()) +
                      " > n_Bu=" + std::to_string(s.b_u.size());
    return attempt;
  }
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    const auto& comp = s.components[k];
    if (comp.greens.size() > comp.blues.size()) {
      attempt.failure = "size condition n_G <= n_{Bc\\G} fails in component " +
                        std::to_string(k + 1) + ": n_G=" +
                        std::to_string(comp.greens.size()) + " > n_{Bc\\G}=" +
                        std::to_string(comp.blues.size());
      return attempt;
    }
  }
  attempt.ok = true;
  attempt.structure = std::move(s);
  return attempt;
}

}  // namespace

SpecialDetection detect_special_class(const WeightedGraph& g, const Coloring& c) {
  SpecialDetection out;
  if (c.chi == 2) {
    out.accepted = true;
    out.structure.red_class = 0;
    out.structure.green_class = -1;
    out.structure.reds = c.classes[0];
    out.structure.b_u = c.classes[1];
    return out;
  }
  if (c.chi != 3) {
    out.rejection = "special-class layout needs chi in {2,3}, got chi=" +
                    std::to_string(c.chi);
    return out;
  }
  const SpecialAttempt first = try_special_roles(g, c, 0, 1);
  if (first.ok) {
    out.accepted = true;
    out.structure = first.structure;
    return out;
  }
  const SpecialAttempt second = try_special_roles(g, c, 1, 0);
  if (second.ok) {
    out.accepted = true;
    out.structure = second.structure;
    return out;
  }
  out.rejection = first.failure;
  return out;
}

WeightedGraph local_complement(const WeightedGraph& g, int a, int lambda) {
  if (a < 0 || a >= g.n) throw InputError("vertex out of range");
  if (lambda <= 0 || lambda >= g.dim.value()) {
    throw InputError("lambda must be a nonzero field element");
  }
  WeightedGraph out = g;
  for (int b = 0; b < g.n; ++b) {
    if (b == a || g.gamma.at(a, b) == 0) continue;
    for (int c = b + 1; c < g.n; ++c) {
      if (c == a || g.gamma.at(a, c) == 0) continue;
      const int delta =
          g.dim.mul(lambda, g.dim.mul(g.gamma.at(a, b), g.gamma.at(a, c)));
      const int w = g.dim.add(g.gamma.at(b, c), delta);
      out.gamma.at(b, c) = w;
      out.gamma.at(c, b) = w;
    }
  }
  return out;
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

}  // namespace

bool all_square_submatrices_nonsingular(const FieldMatrix& m) {
  const int min_dim = std::min(m.rows, m.cols);
  if (min_dim > 6) {
    throw CapError("exhaustive submatrix check refused for min dimension > 6");
  }
  for (int s = 1; s <= min_dim; ++s) {
    std::vector<int> row_sel(static_cast<std::size_t>(s));
    std::iota(row_sel.begin(), row_sel.end(), 0);
    do {
      std::vector<int> col_sel(static_cast<std::size_t>(s));
      std::iota(col_sel.begin(), col_sel.end(), 0);
      do {
        FieldMatrix sub(m.dim, s, s);
        for (int r = 0; r < s; ++r) {
          for (int c = 0; c < s; ++c) {
            sub.at(r, c) = m.at(row_sel[r], col_sel[c]);
          }
        }
        if (mat_rank(sub) != s) return false;
      } while (next_combination(col_sel, m.cols));
    } while (next_combination(row_sel, m.rows));
  }
  return true;
}

KuniformAdjacencyReport kuniform_adjacency_check(const WeightedGraph& g,
                                                 const Coloring& c) {
  KuniformAdjacencyReport report;
  if (c.chi == 2) {
    const auto& small = c.classes[0];
    const auto& large = c.classes[1];
    FieldMatrix a(g.dim, static_cast<int>(small.size()),
                  static_cast<int>(large.size()));
    for (int r = 0; r < a.rows; ++r) {
      for (int cc = 0; cc < a.cols; ++cc) {
        a.at(r, cc) = g.gamma.at(small[r], large[cc]);
      }
    }
    report.a_ok = all_square_submatrices_nonsingular(a);
    return report;
  }
  if (c.chi != 3) {
    throw InputError("k-uniform adjacency check needs chi=2 or chi=3");
  }
  const SpecialDetection det = detect_special_class(g, c);
  if (!det.accepted) {
    throw InputError("k-uniform adjacency check needs the special layout: " +
                     det.rejection);
  }
  const auto& s = det.structure;
  std::vector<int> others;
  for (int v = 0; v < g.n; ++v) {
    if (std::find(s.reds.begin(), s.reds.end(), v) == s.reds.end()) {
      others.push_back(v);
    }
  }
  FieldMatrix a(g.dim, static_cast<int>(s.reds.size()),
                static_cast<int>(others.size()));
  for (int r = 0; r < a.rows; ++r) {
    for (int cc = 0; cc < a.cols; ++cc) {
      a.at(r, cc) = g.gamma.at(s.reds[r], others[cc]);
    }
  }
  report.a_ok = all_square_submatrices_nonsingular(a);
  if (s.components.size() == 1) {
    const auto& comp = s.components[0];
    FieldMatrix b1(g.dim, static_cast<int>(comp.greens.size()),
                   static_cast<int>(comp.blues.size()));
    for (int r = 0; r < b1.rows; ++r) {
      for (int cc = 0; cc < b1.cols; ++cc) {
        b1.at(r, cc) = g.gamma.at(comp.greens[r], comp.blues[cc]);
      }
    }
    report.b1_ok = all_square_submatrices_nonsingular(b1);
  }
  return report;
}

}  // namespace chromastate
