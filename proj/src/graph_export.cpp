#include "lienil/graph_export.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lienil/error.hpp"

namespace lienil {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string vertex_label(const LieAlgebra& algebra, std::uint64_t index) {
  const Vec x = algebra.coords_of(index);
  return algebra.matrix_basis() ? format_matrix(algebra, x) : format_coords(algebra, x);
}

std::string to_dot(const NilGraph& g) {
  const LieAlgebra& alg = *g.algebra();
  std::ostringstream os;
  os << "graph \"" << dot_escape(alg.name()) << ' ' << to_string(g.kind()) << "\" {\n";
  for (auto v : g.vertices()) os << "  v" << v << " [label=\"" << dot_escape(vertex_label(alg, v)) << "\"];\n";
  for (auto [a, b] : g.edges()) os << "  v" << g.vertices()[a] << " -- v" << g.vertices()[b] << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const NilGraph& g) {
  using nlohmann::json;
  const LieAlgebra& alg = *g.algebra();
  const auto summary = components(g);
  json doc;
  doc["schema"] = 1;
  doc["algebra"] = alg.name();
  doc["field"] = alg.F().name();
  doc["dim"] = alg.dim();
  doc["kind"] = to_string(g.kind());
  doc["nil"] = g.nil().members;
  doc["nil_is_subspace"] = g.nil().is_subspace;
  json vertices = json::array();
  for (std::size_t r = 0; r < g.vertex_count(); ++r) {
    const auto v = g.vertices()[r];
    vertices.push_back({{"index", v}, {"label", vertex_label(alg, v)}, {"degree", g.degree(r)}});
  }
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.vertices()[a], g.vertices()[b]});
  doc["edges"] = std::move(edges);
  json comps = json::array();
  for (const auto& c : summary.components) {
    json members = json::array();
    for (auto r : c.vertices) members.push_back(g.vertices()[r]);
    comps.push_back({{"vertices", std::move(members)}, {"complete", c.complete}});
  }
  doc["components"] = {{"kappa", summary.kappa},
                       {"sizes", summary.sizes},
                       {"list", std::move(comps)},
                       {"regular_degree", summary.regular_degree ? json(*summary.regular_degree) : json(nullptr)}};
  doc["bipartite"] = is_bipartite(g);
  doc["eulerian"] = is_eulerian(g);
  doc["star"] = is_star(g);
  doc["connected"] = summary.kappa == 1;
  return doc.dump(2) + "\n";
}

std::string to_csv(const NilGraph& g) {
  std::ostringstream os;
  os << "source,target\n";
  for (auto [a, b] : g.edges()) os << g.vertices()[a] << ',' << g.vertices()[b] << '\n';
  return os.str();
}

std::string summary_line(const NilGraph& g, const ComponentSummary& summary) {
  std::ostringstream os;
  os << g.vertex_count() << " vertices, " << g.edge_count() << " edges, κ=" << summary.kappa << ", sizes=[";
  for (std::size_t i = 0; i < summary.sizes.size(); ++i) os << (i ? "," : "") << summary.sizes[i];
  os << "], ";
  if (summary.regular_degree)
    os << *summary.regular_degree << "-regular";
  else
    os << "not regular";
  return os.str();
}

std::string summary_text(const NilGraph& g) {
  const auto summary = components(g);
  std::ostringstream os;
  os << summary_line(g, summary) << '\n'
     << "bipartite=" << yes_no(is_bipartite(g)) << ", eulerian=" << yes_no(is_eulerian(g))
     << ", star=" << yes_no(is_star(g)) << ", connected=" << yes_no(summary.kappa == 1) << '\n';
  return os.str();
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  if (name == "csv") return ExportFormat::csv;
  throw InvalidArgument("unknown export format '" + std::string(name) + "', expected dot, json or csv");
}

std::string render(const NilGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::dot: return to_dot(g);
    case ExportFormat::json: return to_json(g);
    case ExportFormat::csv: return to_csv(g);
  }
  return {};
}

void write_export(const NilGraph& g, ExportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << render(g, format);
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace lienil
