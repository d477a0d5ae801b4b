#include "chromastate/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chromastate/closedform.hpp"
#include "chromastate/designs.hpp"
#include "chromastate/entanglement.hpp"
#include "chromastate/field.hpp"
#include "chromastate/graph.hpp"
#include "chromastate/simulator.hpp"

namespace chromastate {

namespace {

using nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char byte : data) {
    h ^= byte;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

/// Collects matching text lines and a JSON document; both renderings are
/// byte-deterministic for identical inputs.
class Report {
 public:
  explicit Report(const std::string& command) {
    doc["schema"] = 1;
    doc["command"] = command;
    lines.push_back("schema 1");
    lines.push_back("command " + command);
  }

  void scalar(const std::string& key, const std::string& value) {
    doc[key] = value;
    lines.push_back(key + " " + value);
  }
  void scalar(const std::string& key, long long value) {
    doc[key] = value;
    lines.push_back(key + " " + std::to_string(value));
  }
  void scalar_u64(const std::string& key, std::uint64_t value) {
    doc[key] = value;
    lines.push_back(key + " " + std::to_string(value));
  }
  void scalar(const std::string& key, double value, int precision) {
    const std::string text = format_double(value, precision);
    doc[key] = text;
    lines.push_back(key + " " + text);
  }
  void boolean(const std::string& key, bool value) {
    doc[key] = value;
    lines.push_back(key + " " + (value ? "true" : "false"));
  }
  void not_applicable(const std::string& key) {
    doc[key] = nullptr;
    lines.push_back(key + " n/a");
  }
  void ints(const std::string& key, const std::vector<int>& values) {
    doc[key] = values;
    std::string line = key;
    for (int v : values) line += " " + std::to_string(v);
    lines.push_back(line);
  }
  // text-only line; the caller fills the JSON side explicitly
  void text_line(const std::string& line) { lines.push_back(line); }

  ordered_json doc;
  std::vector<std::string> lines;

  void finish(bool json_mode, std::ostream& out) {
    doc["status"] = "ok";
    if (json_mode) {
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& line : lines) out << line << "\n";
      out << "status ok\n";
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct LoadedGraph {
  WeightedGraph graph;
  Coloring coloring;
  std::string digest;
};

std::vector<int> parse_inline_hint(const std::string& text, int n) {
  std::vector<int> hint(static_cast<std::size_t>(n), -1);
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto sep = item.find(':');
    if (sep == std::string::npos) {
      throw InputError("color hint entries look like vertex:color");
    }
    int v, c;
    try {
      v = std::stoi(item.substr(0, sep));
      c = std::stoi(item.substr(sep + 1));
    } catch (const std::exception&) {
      throw InputError("malformed color hint entry '" + item + "'");
    }
    if (v < 0 || v >= n) throw InputError("color hint vertex out of range");
    if (c < 0) throw InputError("negative color in hint");
    hint[v] = c;
  }
  for (int v = 0; v < n; ++v) {
    if (hint[v] < 0) throw InputError("color hint misses vertex " + std::to_string(v));
  }
  return hint;
}

LoadedGraph load_graph(const std::string& path, const std::string& inline_hint,
                       int d_override) {
  const std::string text = read_file(path);
  ParsedGraph parsed = parse_graph(text);
  WeightedGraph g = parsed.graph;
  if (d_override > 0) {
    std::vector<std::array<int, 3>> edges;
    for (int u = 0; u < g.n; ++u) {
      for (int v = u + 1; v < g.n; ++v) {
        if (g.gamma.at(u, v) != 0) edges.push_back({u, v, g.gamma.at(u, v)});
      }
    }
    g = make_graph(g.n, PrimeDimension(d_override), edges);
  }
  Coloring coloring = [&] {
    if (!inline_hint.empty()) {
      return chromatic_coloring(g, parse_inline_hint(inline_hint, g.n));
    }
    if (!parsed.color_hint.empty()) {
      return chromatic_coloring(g, parsed.color_hint);
    }
    return chromatic_coloring(g);
  }();
  return LoadedGraph{std::move(g), std::move(coloring), fnv1a_hex(text)};
}

void emit_graph_header(Report& report, const std::string& path,
                       const LoadedGraph& lg) {
  report.scalar("input", path);
  report.scalar("digest", lg.digest);
  report.scalar("dim", static_cast<long long>(lg.graph.dim.value()));
  report.scalar("vertices", static_cast<long long>(lg.graph.n));
}

void emit_coloring(Report& report, const Coloring& c) {
  report.scalar("chi", static_cast<long long>(c.chi));
  ordered_json classes = ordered_json::array();
  for (int idx = 0; idx < c.chi; ++idx) {
    classes.push_back(c.classes[idx]);
    std::string line = "class " + std::to_string(idx + 1) + " vertices";
    for (int v : c.classes[idx]) line += " " + std::to_string(v);
    report.text_line(line);
  }
  report.doc["classes"] = classes;
}

void emit_special(Report& report, const WeightedGraph& g, const Coloring& c) {
  const SpecialDetection det = detect_special_class(g, c);
  if (!det.accepted) {
    report.scalar("special", std::string("rejected"));
    report.scalar("special_reason", det.rejection);
    return;
  }
  report.scalar("special", std::string("accepted"));
  report.scalar("special_s",
                static_cast<long long>(det.structure.components.size()));
  report.ints("special_reds", det.structure.reds);
  report.ints("special_bu", det.structure.b_u);
  ordered_json comps = ordered_json::array();
  for (std::size_t k = 0; k < det.structure.components.size(); ++k) {
    const auto& comp = det.structure.components[k];
    comps.push_back({{"greens", comp.greens}, {"blues", comp.blues}});
    std::string line1 = "component " + std::to_string(k + 1) + " greens";
    for (int v : comp.greens) line1 += " " + std::to_string(v);
    report.text_line(line1);
    std::string line2 = "component " + std::to_string(k + 1) + " blues";
    for (int v : comp.blues) line2 += " " + std::to_string(v);
    report.text_line(line2);
  }
  report.doc["special_components"] = comps;
}

int cmd_inspect(const std::string& path, bool json_mode, std::ostream& out) {
  const LoadedGraph lg = load_graph(path, "", 0);
  Report report("inspect");
  emit_graph_header(report, path, lg);
  report.scalar("edge_count", static_cast<long long>(lg.graph.edge_count()));
  ordered_json edges = ordered_json::array();
  for (int u = 0; u < lg.graph.n; ++u) {
    for (int v = u + 1; v < lg.graph.n; ++v) {
      if (lg.graph.gamma.at(u, v) != 0) {
        edges.push_back({u, v, lg.graph.gamma.at(u, v)});
        report.text_line("edge " + std::to_string(u) + " " + std::to_string(v) +
                         " " + std::to_string(lg.graph.gamma.at(u, v)));
      }
    }
  }
  report.doc["edges"] = edges;
  emit_coloring(report, lg.coloring);
  emit_special(report, lg.graph, lg.coloring);
  report.finish(json_mode, out);
  return 0;
}

void emit_matrix(Report& report, const std::string& key, const FieldMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows; ++r) {
    std::vector<int> row(static_cast<std::size_t>(m.cols));
    for (int c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
    rows.push_back(row);
    std::string line = key;
    for (int v : row) line += " " + std::to_string(v);
    report.text_line(line);
  }
  report.doc[key] = rows;
}

int cmd_closed_form(const std::string& path, const std::string& inline_hint,
                    bool special, bool json_mode, std::ostream& out) {
  const LoadedGraph lg = load_graph(path, inline_hint, 0);
  const ClosedForm cf = compile_chi_color(lg.graph, lg.coloring);
  Report report("closed-form");
  emit_graph_header(report, path, lg);
  emit_coloring(report, lg.coloring);
  report.scalar("m", static_cast<long long>(cf.m));
  report.scalar_u64("term_count", pow_u64(cf.dim.value(), cf.m));
  report.ints("vertex_order", cf.vertex_order);
  emit_matrix(report, "G", cf.generator);
  emit_matrix(report, "Q", cf.phase);
  report.scalar("summation", summation_string(cf));
  if (special) {
    const SpecialDetection det = detect_special_class(lg.graph, lg.coloring);
    if (!det.accepted) {
      report.scalar("special", std::string("rejected"));
      report.scalar("special_reason", det.rejection);
    } else {
      const SpecialForm sf = compile_special(lg.graph, lg.coloring, det.structure);
      const SpecialRendering render = special_rendering(sf);
      report.scalar("special", std::string("accepted"));
      report.scalar("special_s", static_cast<long long>(sf.components.size()));
      report.ints("special_reds", sf.reds);
      report.ints("special_bu", sf.b_u);
      report.scalar("outer", render.outer);
      ordered_json deltas = ordered_json::array();
      ordered_json inners = ordered_json::array();
      for (std::size_t k = 0; k < sf.components.size(); ++k) {
        deltas.push_back(render.deltas[k]);
        inners.push_back(render.inners[k]);
        report.text_line("delta " + std::to_string(k + 1) + " " + render.deltas[k]);
        report.text_line("inner " + std::to_string(k + 1) + " " + render.inners[k]);
      }
      report.doc["deltas"] = deltas;
      report.doc["inners"] = inners;
    }
  }
  report.finish(json_mode, out);
  return 0;
}

int cmd_verify(const std::string& path, int d_override, bool corrupt,
               bool json_mode, std::ostream& out) {
  const LoadedGraph lg = load_graph(path, "", d_override);
  ClosedForm cf = compile_chi_color(lg.graph, lg.coloring);
  if (corrupt && cf.m > 0) {
    // negative-control hook: damage one generator entry before expansion
    cf.generator.at(0, cf.n - 1) = cf.dim.add(cf.generator.at(0, cf.n - 1), 1);
  }
  const double fidelity = verify(cf, lg.graph, lg.coloring);
  Report report("verify");
  emit_graph_header(report, path, lg);
  report.scalar("fidelity", fidelity, 12);
  const bool ok = fidelity >= 1.0 - 1e-9;
  report.boolean("verified", ok);
  report.finish(json_mode, out);
  return ok ? 0 : 1;
}

int cmd_designs(const std::string& path, const std::string& oa_out, bool qoa,
                bool json_mode, std::ostream& out) {
  const LoadedGraph lg = load_graph(path, "", 0);
  const ClosedForm cf = compile_chi_color(lg.graph, lg.coloring);
  const OrthogonalArray oa = oa_from_generator(cf.generator);
  Report report("designs");
  emit_graph_header(report, path, lg);
  report.scalar("m", static_cast<long long>(cf.m));
  report.scalar_u64("oa_rows", oa.rows);
  report.scalar("oa_cols", static_cast<long long>(oa.cols));
  report.scalar("oa_strength", static_cast<long long>(oa.strength));
  report.scalar("oa_header", "OA " + std::to_string(oa.rows) + " " +
                                 std::to_string(oa.cols) + " " +
                                 std::to_string(oa.dim.value()) + " " +
                                 std::to_string(oa.strength));
  if (!oa_out.empty()) {
    std::ofstream file(oa_out, std::ios::binary);
    if (!file) throw InputError("cannot write OA file: " + oa_out);
    file << oa_text(oa);
    report.scalar("oa_out", oa_out);
  }
  if (qoa) {
    const QoaCertificate cert = qoa_certify(cf, lg.graph);
    report.scalar("qoa_k_star", static_cast<long long>(cert.k_star));
    report.scalar("qoa_residual", cert.residual, 12);
  }
  report.finish(json_mode, out);
  return 0;
}

int cmd_bounds(const std::string& path, bool json_mode, std::ostream& out) {
  const LoadedGraph lg = load_graph(path, "", 0);
  const SchmidtBounds b = schmidt_bounds(lg.graph, lg.coloring);
  const ClosedForm cf = compile_chi_color(lg.graph, lg.coloring);
  const TermCount tc = term_count(cf, b);
  Report report("bounds");
  emit_graph_header(report, path, lg);
  report.scalar("chi", static_cast<long long>(lg.coloring.chi));
  report.scalar("rank_gamma", static_cast<long long>(b.gamma_rank));
  report.scalar("lower_rank", b.lower_rank, 1);
  report.scalar("lower_rank_origin", std::string("adjacency-rank-half"));
  if (b.lower_color_applicable) {
    report.scalar("lower_color", static_cast<long long>(b.lower_color));
    report.scalar("lower_color_origin",
                  std::string(b.lower_color_from_sum ? "free-class-sum"
                                                     : "second-largest-class"));
  } else {
    report.not_applicable("lower_color");
  }
  report.scalar("upper", static_cast<long long>(b.upper));
  report.scalar("upper_origin",
                std::string(lg.coloring.chi <= 2 ? "floor-half-vertices"
                                                 : "vertex-deletion"));
  report.scalar("K", static_cast<long long>(b.removed_vertices));
  if (b.term_lower_applicable) {
    report.scalar_u64("term_lower", b.term_lower);
  } else {
    report.not_applicable("term_lower");
  }
  if (b.term_upper_applicable) {
    report.scalar_u64("term_upper", b.term_upper);
  } else {
    report.not_applicable("term_upper");
  }
  report.scalar_u64("term_count", tc.count);
  report.boolean("meets_lower", tc.meets_lower);
  report.finish(json_mode, out);
  return 0;
}

int cmd_lc(const std::string& path, int vertex, int lambda,
           const std::string& out_path, bool json_mode, std::ostream& out) {
  const LoadedGraph lg = load_graph(path, "", 0);
  const WeightedGraph result = local_complement(lg.graph, vertex, lambda);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw InputError("cannot write graph file: " + out_path);
  file << write_graph(result);
  Report report("lc");
  emit_graph_header(report, path, lg);
  report.scalar("vertex", static_cast<long long>(vertex));
  report.scalar("lambda", static_cast<long long>(lambda));
  report.scalar("out", out_path);
  report.scalar("edges_before", static_cast<long long>(lg.graph.edge_count()));
  report.scalar("edges_after", static_cast<long long>(result.edge_count()));
  report.finish(json_mode, out);
  return 0;
}

int cmd_kuniform(const std::string& path, bool json_mode, std::ostream& out) {
  const LoadedGraph lg = load_graph(path, "", 0);
  const KuniformAdjacencyReport r = kuniform_adjacency_check(lg.graph, lg.coloring);
  Report report("kuniform");
  emit_graph_header(report, path, lg);
  report.scalar("chi", static_cast<long long>(lg.coloring.chi));
  report.boolean("A_ok", r.a_ok);
  if (r.b1_ok.has_value()) {
    report.boolean("B1_ok", *r.b1_ok);
  } else {
    report.not_applicable("B1_ok");
  }
  report.finish(json_mode, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"qudit graph states: closed forms, designs, and bounds"};
  app.name("chromastate");
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  std::string inline_hint;
  std::string oa_out;
  std::string lc_out;
  bool special = false;
  bool qoa = false;
  bool corrupt = false;
  int d_override = 0;
  int lc_vertex = 0;
  int lc_lambda = 1;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "graph file")->required();
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* inspect = app.add_subcommand("inspect", "parse, color, and classify");
  add_common(inspect);

  CLI::App* closed_form =
      app.add_subcommand("closed-form", "compile the closed-form expression");
  add_common(closed_form);
  closed_form->add_option("--color-hint", inline_hint,
                          "comma-separated vertex:color assignment");
  closed_form->add_flag("--special", special,
                        "emit the factored presentation when the layout allows");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check the compiled form against simulation");
  add_common(verify_cmd);
  verify_cmd->add_option("--d-override", d_override,
                         "reinterpret the graph over another prime dimension");
  verify_cmd->add_flag("--inject-corruption", corrupt, "")->group("");

  CLI::App* designs =
      app.add_subcommand("designs", "orthogonal-array extraction and strength");
  add_common(designs);
  designs->add_option("--oa-out", oa_out, "write the OA table to this path");
  designs->add_flag("--qoa", qoa, "certify uniformity of the expanded state");

  CLI::App* bounds = app.add_subcommand("bounds", "Schmidt-measure bounds");
  add_common(bounds);

  CLI::App* lc = app.add_subcommand("lc", "local complementation");
  add_common(lc);
  lc->add_option("--vertex", lc_vertex, "pivot vertex")->required();
  lc->add_option("--lambda", lc_lambda, "nonzero field element, default 1");
  lc->add_option("--out", lc_out, "output graph file")->required();

  CLI::App* kuniform =
      app.add_subcommand("kuniform", "adjacency nonsingularity conditions");
  add_common(kuniform);

  std::vector<const char*> argv;
  argv.push_back("chromastate");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool json_mode = (format == "json");
  try {
    if (inspect->parsed()) return cmd_inspect(file, json_mode, out);
    if (closed_form->parsed()) {
      return cmd_closed_form(file, inline_hint, special, json_mode, out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(file, d_override, corrupt, json_mode, out);
    }
    if (designs->parsed()) return cmd_designs(file, oa_out, qoa, json_mode, out);
    if (bounds->parsed()) return cmd_bounds(file, json_mode, out);
    if (lc->parsed()) return cmd_lc(file, lc_vertex, lc_lambda, lc_out, json_mode, out);
    if (kuniform->parsed()) return cmd_kuniform(file, json_mode, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace chromastate
