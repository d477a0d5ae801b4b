#include "chromastate/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace chromastate {

namespace {

std::vector<Amp> unit_roots(int d) {
  std::vector<Amp> roots(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / d;
    roots[k] = Amp(std::cos(angle), std::sin(angle));
  }
  return roots;
}

std::string index_name(int vertex) { return "i" + std::to_string(vertex + 1); }

// "i3" for weight 1, "2*i3" otherwise; terms arrive sorted by vertex.
std::string linear_form_string(const std::vector<std::pair<int, int>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t > 0) out += "+";
    if (terms[t].second != 1) out += std::to_string(terms[t].second) + "*";
    out += index_name(terms[t].first);
  }
  return out;
}

}  // namespace

ClosedForm compile_chi_color(const WeightedGraph& g, const Coloring& c) {
  Coloring coloring = c;
  // free classes first, ascending inside each class
  std::vector<int> free_vertices;
  for (int cls = 0; cls + 1 < coloring.chi; ++cls) {
    free_vertices.insert(free_vertices.end(), coloring.classes[cls].begin(),
                         coloring.classes[cls].end());
  }
  const std::vector<int>& last = coloring.classes[coloring.chi - 1];
  const int m = static_cast<int>(free_vertices.size());

  ClosedForm cf{g.n,
                g.dim,
                m,
                coloring.chi,
                {},
                {},
                FieldMatrix(g.dim, m, g.n),
                FieldMatrix(g.dim, m, m)};
  cf.vertex_order = free_vertices;
  cf.vertex_order.insert(cf.vertex_order.end(), last.begin(), last.end());
  for (const auto& cls : coloring.classes) {
    cf.class_sizes.push_back(static_cast<int>(cls.size()));
  }

  for (int j = 0; j < m; ++j) {
    cf.generator.at(j, j) = 1;
    for (int t = 0; t < static_cast<int>(last.size()); ++t) {
      cf.generator.at(j, m + t) = g.gamma.at(free_vertices[j], last[t]);
    }
  }
  // residual phases couple free vertices of different classes; same-class
  // entries are zero by properness
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      cf.phase.at(a, b) = g.gamma.at(free_vertices[a], free_vertices[b]);
    }
  }
  return cf;
}

ClosedForm compile_two_color(const WeightedGraph& g, const Coloring& c) {
  if (c.chi != 2) {
    throw std::invalid_argument("compile_two_color needs chi=2, got chi=" +
                                std::to_string(c.chi));
  }
  return compile_chi_color(g, c);
}

SpecialForm compile_special(const WeightedGraph& g, const Coloring& c,
                            const SpecialClassStructure& s) {
  SpecialForm sf{compile_chi_color(g, c), s.reds, s.b_u,
                 FieldMatrix(g.dim, static_cast<int>(s.reds.size()),
                             static_cast<int>(s.reds.size() + s.b_u.size())),
                 {}};
  const int n_r = static_cast<int>(s.reds.size());
  for (int j = 0; j < n_r; ++j) {
    sf.outer_generator.at(j, j) = 1;
    for (int t = 0; t < static_cast<int>(s.b_u.size()); ++t) {
      sf.outer_generator.at(j, n_r + t) = g.gamma.at(s.reds[j], s.b_u[t]);
    }
  }
  for (const auto& comp : s.components) {
    SpecialFormComponent out{comp.greens, comp.blues,
                             FieldMatrix(g.dim, static_cast<int>(comp.greens.size()),
                                         static_cast<int>(comp.greens.size() +
                                                          comp.blues.size())),
                             {}};
    const int n_g = static_cast<int>(comp.greens.size());
    for (int j = 0; j < n_g; ++j) {
      out.inner_generator.at(j, j) = 1;
      for (int t = 0; t < static_cast<int>(comp.blues.size()); ++t) {
        out.inner_generator.at(j, n_g + t) =
            g.gamma.at(comp.greens[j], comp.blues[t]);
      }
    }
    std::vector<int> members = comp.greens;
    members.insert(members.end(), comp.blues.begin(), comp.blues.end());
    std::sort(members.begin(), members.end());
    for (int v : members) {
      DeltaEntry entry;
      entry.vertex = v;
      entry.z_type = std::find(comp.greens.begin(), comp.greens.end(), v) !=
                     comp.greens.end();
      for (int r : s.reds) entry.red_coeffs.push_back(g.gamma.at(r, v));
      out.delta.push_back(std::move(entry));
    }
    sf.components.push_back(std::move(out));
  }
  return sf;
}

StateVector expand(const ClosedForm& cf) {
  const int d = cf.dim.value();
  const auto roots = unit_roots(d);
  StateVector out(cf.n, cf.dim);
  const double scale = std::pow(static_cast<double>(d), -0.5 * cf.m);

  std::vector<int> inverse_order(static_cast<std::size_t>(cf.n), 0);
  for (int p = 0; p < cf.n; ++p) inverse_order[cf.vertex_order[p]] = p;

  VectorEnumerator assignments(cf.m, cf.dim);
  std::vector<int> w;
  std::vector<int> ket(static_cast<std::size_t>(cf.n), 0);
  while (assignments.next(w)) {
    for (int v = 0; v < cf.n; ++v) {
      const int p = inverse_order[v];
      if (p < cf.m) {
        ket[v] = w[p];
      } else {
        int acc = 0;
        for (int j = 0; j < cf.m; ++j) {
          acc = cf.dim.add(acc, cf.dim.mul(w[j], cf.generator.at(j, p)));
        }
        ket[v] = acc;
      }
    }
    int phase = 0;
    for (int a = 0; a < cf.m; ++a) {
      if (w[a] == 0) continue;
      for (int b = a + 1; b < cf.m; ++b) {
        if (cf.phase.at(a, b) == 0) continue;
        phase = cf.dim.add(phase, cf.dim.mul(cf.phase.at(a, b),
                                             cf.dim.mul(w[a], w[b])));
      }
    }
    out.amps[amp_index(ket, d)] += scale * roots[phase];
  }
  return out;
}

StateVector expand(const SpecialForm& sf) {
  const int d = sf.base.dim.value();
  const auto roots = unit_roots(d);
  StateVector out(sf.base.n, sf.base.dim);
  const double scale = std::pow(static_cast<double>(d), -0.5 * sf.base.m);

  std::vector<int> all_greens;
  for (const auto& comp : sf.components) {
    all_greens.insert(all_greens.end(), comp.greens.begin(), comp.greens.end());
  }

  VectorEnumerator outer(static_cast<int>(sf.reds.size()), sf.base.dim);
  std::vector<int> u;
  std::vector<int> ket(static_cast<std::size_t>(sf.base.n), 0);
  while (outer.next(u)) {
    for (std::size_t j = 0; j < sf.reds.size(); ++j) ket[sf.reds[j]] = u[j];
    for (std::size_t t = 0; t < sf.b_u.size(); ++t) {
      int acc = 0;
      for (std::size_t j = 0; j < sf.reds.size(); ++j) {
        acc = sf.base.dim.add(
            acc, sf.base.dim.mul(u[j], sf.outer_generator.at(static_cast<int>(j),
                                                             static_cast<int>(
                                                                 sf.reds.size() + t))));
      }
      ket[sf.b_u[t]] = acc;
    }
    // coupling exponents f_k = sum_r Gamma_rk u_r per component vertex
    std::vector<std::vector<int>> f_values(sf.components.size());
    for (std::size_t ci = 0; ci < sf.components.size(); ++ci) {
      for (const auto& entry : sf.components[ci].delta) {
        int f = 0;
        for (std::size_t j = 0; j < sf.reds.size(); ++j) {
          f = sf.base.dim.add(f, sf.base.dim.mul(entry.red_coeffs[j], u[j]));
        }
        f_values[ci].push_back(f);
      }
    }
    VectorEnumerator inner(static_cast<int>(all_greens.size()), sf.base.dim);
    std::vector<int> gvals;
    while (inner.next(gvals)) {
      int phase = 0;
      std::size_t g_offset = 0;
      for (std::size_t ci = 0; ci < sf.components.size(); ++ci) {
        const auto& comp = sf.components[ci];
        const int n_g = static_cast<int>(comp.greens.size());
        for (int j = 0; j < n_g; ++j) {
          ket[comp.greens[j]] = gvals[g_offset + j];
        }
        for (std::size_t t = 0; t < comp.blues.size(); ++t) {
          int acc = 0;
          for (int j = 0; j < n_g; ++j) {
            acc = sf.base.dim.add(
                acc, sf.base.dim.mul(gvals[g_offset + j],
                                     comp.inner_generator.at(
                                         j, n_g + static_cast<int>(t))));
          }
          ket[comp.blues[t]] = acc;
        }
        // coupling layer: Z^f phases greens, X^f shifts blues
        for (std::size_t e = 0; e < comp.delta.size(); ++e) {
          const auto& entry = comp.delta[e];
          const int f = f_values[ci][e];
          if (entry.z_type) {
            phase = sf.base.dim.add(phase, sf.base.dim.mul(f, ket[entry.vertex]));
          } else {
            ket[entry.vertex] = sf.base.dim.add(ket[entry.vertex], f);
          }
        }
        g_offset += comp.greens.size();
      }
      out.amps[amp_index(ket, d)] += scale * roots[phase];
    }
  }
  return out;
}

namespace {

double verify_against(const StateVector& expanded, const WeightedGraph& g,
                      const std::vector<int>& hdag_targets) {
  StateVector reference = build_graph_state(g);
  for (int v : hdag_targets) reference = apply_hdag(std::move(reference), v);
  return fidelity_up_to_phase(reference, expanded);
}

}  // namespace

double verify(const ClosedForm& cf, const WeightedGraph& g, const Coloring& c) {
  return verify_against(expand(cf), g, c.classes[c.chi - 1]);
}

double verify(const SpecialForm& sf, const WeightedGraph& g, const Coloring& c) {
  (void)c;
  std::vector<int> targets = sf.b_u;
  for (const auto& comp : sf.components) {
    targets.insert(targets.end(), comp.blues.begin(), comp.blues.end());
  }
  std::sort(targets.begin(), targets.end());
  return verify_against(expand(sf), g, targets);
}

std::string summation_string(const ClosedForm& cf) {
  std::vector<int> inverse_order(static_cast<std::size_t>(cf.n), 0);
  for (int p = 0; p < cf.n; ++p) inverse_order[cf.vertex_order[p]] = p;

  std::vector<std::string> phase_terms;
  for (int a = 0; a < cf.m; ++a) {
    for (int b = a + 1; b < cf.m; ++b) {
      const int coeff = cf.phase.at(a, b);
      if (coeff == 0) continue;
      const int va = cf.vertex_order[a];
      const int vb = cf.vertex_order[b];
      std::string term = coeff != 1 ? std::to_string(coeff) + "*" : "";
      term += index_name(std::min(va, vb)) + "*" + index_name(std::max(va, vb));
      phase_terms.push_back(std::move(term));
    }
  }

  std::vector<std::string> kets;
  for (int v = 0; v < cf.n; ++v) {
    const int p = inverse_order[v];
    std::vector<std::pair<int, int>> terms;  // (free vertex, weight)
    for (int j = 0; j < cf.m; ++j) {
      if (cf.generator.at(j, p) != 0) {
        terms.emplace_back(cf.vertex_order[j], cf.generator.at(j, p));
      }
    }
    std::sort(terms.begin(), terms.end());
    kets.push_back(linear_form_string(terms));
  }

  std::ostringstream out;
  out << "Σ ";
  if (!phase_terms.empty()) {
    out << "ω^{";
    for (std::size_t t = 0; t < phase_terms.size(); ++t) {
      if (t > 0) out << " + ";
      out << phase_terms[t];
    }
    out << "} ";
  }
  out << "|";
  for (std::size_t v = 0; v < kets.size(); ++v) {
    if (v > 0) out << ", ";
    out << kets[v];
  }
  out << "⟩";
  return out.str();
}

SpecialRendering special_rendering(const SpecialForm& sf) {
  SpecialRendering render;

  std::vector<int> outer_vertices = sf.reds;
  outer_vertices.insert(outer_vertices.end(), sf.b_u.begin(), sf.b_u.end());
  std::sort(outer_vertices.begin(), outer_vertices.end());
  std::ostringstream outer;
  outer << "Σ |";
  for (std::size_t i = 0; i < outer_vertices.size(); ++i) {
    if (i > 0) outer << ", ";
    const int v = outer_vertices[i];
    const auto red_it = std::find(sf.reds.begin(), sf.reds.end(), v);
    if (red_it != sf.reds.end()) {
      outer << index_name(v);
    } else {
      const auto bu_it = std::find(sf.b_u.begin(), sf.b_u.end(), v);
      const int col = static_cast<int>(sf.reds.size()) +
                      static_cast<int>(bu_it - sf.b_u.begin());
      std::vector<std::pair<int, int>> terms;
      for (std::size_t j = 0; j < sf.reds.size(); ++j) {
        const int coeff = sf.outer_generator.at(static_cast<int>(j), col);
        if (coeff != 0) terms.emplace_back(sf.reds[j], coeff);
      }
      std::sort(terms.begin(), terms.end());
      outer << linear_form_string(terms);
    }
  }
  outer << "⟩";
  render.outer = outer.str();

  for (const auto& comp : sf.components) {
    std::ostringstream delta;
    for (std::size_t e = 0; e < comp.delta.size(); ++e) {
      if (e > 0) delta << " ";
      const auto& entry = comp.delta[e];
      std::vector<std::pair<int, int>> terms;
      for (std::size_t j = 0; j < sf.reds.size(); ++j) {
        if (entry.red_coeffs[j] != 0) {
          terms.emplace_back(sf.reds[j], entry.red_coeffs[j]);
        }
      }
      std::sort(terms.begin(), terms.end());
      delta << (entry.z_type ? "Z" : "X") << "^(" << linear_form_string(terms)
            << ")";
    }
    render.deltas.push_back(delta.str());

    std::vector<int> members = comp.greens;
    members.insert(members.end(), comp.blues.begin(), comp.blues.end());
    std::sort(members.begin(), members.end());
    std::ostringstream inner;
    inner << "Σ |";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) inner << ", ";
      const int v = members[i];
      const auto green_it = std::find(comp.greens.begin(), comp.greens.end(), v);
      if (green_it != comp.greens.end()) {
        inner << index_name(v);
      } else {
        const auto blue_it = std::find(comp.blues.begin(), comp.blues.end(), v);
        const int col = static_cast<int>(comp.greens.size()) +
                        static_cast<int>(blue_it - comp.blues.begin());
        std::vector<std::pair<int, int>> terms;
        for (std::size_t j = 0; j < comp.greens.size(); ++j) {
          const int coeff = comp.inner_generator.at(static_cast<int>(j), col);
          if (coeff != 0) terms.emplace_back(comp.greens[j], coeff);
        }
        std::sort(terms.begin(), terms.end());
        inner << linear_form_string(terms);
      }
    }
    inner << "⟩";
    render.inners.push_back(inner.str());
  }
  return render;
}

ChainOperatorForm chain_operator_form(int length, const std::vector<int>& weights,
                                      PrimeDimension dim) {
  if (length < 2) throw std::invalid_argument("chain needs at least 2 particles");
  if (static_cast<int>(weights.size()) != length - 1) {
    throw std::invalid_argument("chain of length k needs k-1 weights");
  }
  for (int w : weights) {
    if (w <= 0 || w >= dim.value()) {
      throw std::invalid_argument("chain weights must be nonzero field elements");
    }
  }
  return ChainOperatorForm{length, dim, weights};
}

StateVector chain_apply_factored(const ChainOperatorForm& form,
                                 const std::vector<int>& input) {
  const int k = form.length;
  const int d = form.dim.value();
  if (static_cast<int>(input.size()) != k) {
    throw std::invalid_argument("chain input length mismatch");
  }
  const auto roots = unit_roots(d);
  // 0-based odd positions (1-based even) carry the free inner indices and
  // Z prefactors; 0-based even positions carry X prefactors.
  std::vector<int> free_positions;
  for (int p = 1; p < k; p += 2) free_positions.push_back(p);
  const int m = static_cast<int>(free_positions.size());

  StateVector out(k, form.dim);
  const double scale = std::pow(static_cast<double>(d), -0.5 * m);
  VectorEnumerator assignments(m, form.dim);
  std::vector<int> l;
  std::vector<int> ket(static_cast<std::size_t>(k), 0);
  while (assignments.next(l)) {
    for (int t = 0; t < m; ++t) ket[free_positions[t]] = l[t];
    for (int p = 0; p < k; p += 2) {
      int acc = 0;
      if (p - 1 >= 0) acc = form.dim.add(acc, form.dim.mul(form.weights[p - 1], ket[p - 1]));
      if (p + 1 < k) acc = form.dim.add(acc, form.dim.mul(form.weights[p], ket[p + 1]));
      ket[p] = acc;
    }
    int phase = 0;
    for (int p = 1; p < k; p += 2) {
      phase = form.dim.add(phase, form.dim.mul(input[p], ket[p]));
    }
    for (int p = 0; p < k; p += 2) {
      ket[p] = form.dim.add(ket[p], input[p]);
    }
    out.amps[amp_index(ket, d)] += scale * roots[phase];
  }
  return out;
}

std::string chain_prefactor_string(const ChainOperatorForm& form) {
  std::ostringstream out;
  for (int p = 0; p < form.length; ++p) {
    if (p > 0) out << " ⊗ ";
    out << (p % 2 == 0 ? "X" : "Z") << "^{i" << (p + 1) << "}";
  }
  return out.str();
}

std::string chain_inner_string(const ChainOperatorForm& form) {
  std::ostringstream out;
  out << "Σ |";
  for (int p = 0; p < form.length; ++p) {
    if (p > 0) out << ", ";
    if (p % 2 == 1) {
      out << "l" << (p + 1);
    } else {
      std::vector<std::pair<int, int>> terms;  // (free position, weight)
      if (p - 1 >= 0) terms.emplace_back(p - 1, form.weights[p - 1]);
      if (p + 1 < form.length) terms.emplace_back(p + 1, form.weights[p]);
      bool first = true;
      bool any = false;
      for (const auto& [pos, coeff] : terms) {
        if (coeff == 0) continue;
        any = true;
        if (!first) out << "+";
        first = false;
        if (coeff != 1) out << coeff << "*";
        out << "l" << (pos + 1);
      }
      if (!any) out << "0";
    }
  }
  out << "⟩";
  return out.str();
}

}  // namespace chromastate
