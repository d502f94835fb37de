#include "lienil/cli.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lienil/catalog.hpp"
#include "lienil/constructions.hpp"
#include "lienil/error.hpp"
#include "lienil/graph_checks.hpp"
#include "lienil/graph_export.hpp"
#include "lienil/structure.hpp"

namespace lienil::cli {

namespace {

struct Common {
  std::string algebra;
  std::string field;
  std::uint64_t max_elements = kDefaultMaxElements;
  std::uint64_t max_subspaces = kDefaultMaxSubspaces;
  unsigned threads = 1;
  bool naive = false;

  AlgebraPtr make_algebra() const {
    return parse_algebra_expr(algebra, field.empty() ? nullptr : parse_field(field));
  }
  BuildOptions build_options() const { return {naive, threads, max_elements}; }
  NilCaps caps() const { return {max_elements, max_subspaces}; }
};

void add_caps(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-elements", c.max_elements, "Largest algebra (element count) to enumerate");
  cmd->add_option("--max-subspaces", c.max_subspaces, "Largest subspace enumeration");
}

void add_algebra(CLI::App* cmd, Common& c, bool required) {
  auto* opt = cmd->add_option("--algebra", c.algebra, "Algebra expression, e.g. t:2, gl:2+ab:1, file:path");
  if (required) opt->required();
  cmd->add_option("--field", c.field, "Field GF(p^k) as p^k");
}

void add_build(CLI::App* cmd, Common& c) {
  cmd->add_flag("--naive", c.naive, "Unmemoized pair-by-pair build");
  cmd->add_option("--threads", c.threads, "Worker threads for the build")->check(CLI::Range(1u, 256u));
}

Vec parse_coords(const std::string& text, const LieAlgebra& alg) {
  Vec out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    Scalar v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty() || !alg.F().contains(v))
      throw InvalidArgument("bad coordinate '" + part + "' in --element");
    out.push_back(v);
  }
  if (out.size() != alg.dim())
    throw InvalidArgument("--element needs " + std::to_string(alg.dim()) + " coordinates");
  return out;
}

std::vector<std::string> labels_of(const LieAlgebra& alg, const std::vector<std::uint64_t>& members) {
  std::vector<std::string> out;
  for (auto m : members) out.push_back(format_coords(alg, alg.coords_of(m)));
  return out;
}

int cmd_graph(const Common& c, const std::string& kind_name, const std::vector<std::string>& exports, bool summary,
              bool json, std::ostream& out) {
  GraphKind kind;
  if (kind_name == "nilpotent")
    kind = GraphKind::nilpotent;
  else if (kind_name == "complement")
    kind = GraphKind::complement;
  else
    throw InvalidArgument("--kind must be nilpotent or complement");
  std::vector<std::pair<ExportFormat, std::string>> targets;
  for (const auto& e : exports) {
    const auto colon = e.find(':');
    if (colon == std::string::npos || colon + 1 == e.size()) throw InvalidArgument("--export expects format:path");
    targets.emplace_back(parse_export_format(e.substr(0, colon)), e.substr(colon + 1));
  }
  const AlgebraPtr alg = c.make_algebra();
  const NilGraph g = build(alg, kind, c.build_options());
  for (const auto& [format, path] : targets) write_export(g, format, path);
  if (json) out << to_json(g);
  if (summary || (!json && targets.empty())) out << summary_text(g);
  return ok;
}

int cmd_nil(const Common& c, const std::string& element, bool json, std::ostream& out) {
  const AlgebraPtr alg = c.make_algebra();
  const NilpotencyOracle oracle(alg);
  const NilSet nil = nil_of_algebra(oracle, c.max_elements);
  const Subspace zstar = hypercenter(alg);
  const bool equal_hypercenter = nil.is_subspace && *nil.as_subspace == zstar;
  std::optional<NilSet> local;
  Vec h;
  if (!element.empty()) {
    h = parse_coords(element, *alg);
    local = nil_of_element(oracle, h, c.max_elements);
  }
  if (json) {
    nlohmann::json doc{{"schema", 1},
                       {"algebra", alg->name()},
                       {"field", alg->F().name()},
                       {"nil", nil.members},
                       {"nil_is_subspace", nil.is_subspace},
                       {"nil_equals_hypercenter", equal_hypercenter}};
    if (local) {
      doc["element"] = h;
      doc["nil_of_element"] = local->members;
      doc["nil_of_element_is_subspace"] = local->is_subspace;
    }
    out << doc.dump(2) << '\n';
    return ok;
  }
  out << alg->name() << '\n';
  out << "nil(L): " << nil.size() << " elements, "
      << (nil.is_subspace ? "subspace " + nil.as_subspace->to_string() : std::string("not a subspace")) << '\n';
  out << "Z*(L): " << zstar.to_string() << (equal_hypercenter ? ", equal to nil(L)" : ", differs from nil(L)") << '\n';
  if (local) {
    out << "nil_L(" << format_coords(*alg, h) << "): " << local->size() << " elements, "
        << (local->is_subspace ? "subspace " + local->as_subspace->to_string() : std::string("not a subspace"))
        << '\n';
    for (const auto& s : labels_of(*alg, local->members)) out << "  " << s << '\n';
  }
  return ok;
}

int print_reports(const std::vector<Report>& reports, std::ostream& out) {
  std::size_t failures = 0, checks = 0;
  for (const auto& r : reports) {
    out << r.to_text();
    failures += r.failures();
    checks += r.checks().size();
  }
  out << (failures == 0 ? "all " + std::to_string(checks) + " checks passed"
                        : std::to_string(failures) + " of " + std::to_string(checks) + " checks failed")
      << '\n';
  return failures == 0 ? ok : verification_failed;
}

int verify_t2(const Common& c, const std::vector<std::uint64_t>& qs, std::ostream& out) {
  std::vector<Report> reports;
  for (auto q : qs) reports.push_back(check_t2_components(q, c.build_options()));
  return print_reports(reports, out);
}

int verify_sums(const Common& c, std::uint64_t max_total, std::ostream& out) {
  std::vector<Report> reports;
  for (const auto& [a, b] : direct_sum_pairs(max_total))
    reports.push_back(check_direct_sum_laws(a.make(), b.make(), c.build_options()));
  return print_reports(reports, out);
}

int verify_lemmas(const Common& c, std::ostream& out) {
  const AlgebraPtr alg = c.make_algebra();
  const auto caps = c.caps();
  std::vector<Report> reports;
  reports.push_back(check_containment_chain(alg, caps));
  for (const auto& ideal : enumerate_ideals(alg, caps.max_subspaces))
    if (!ideal.is_zero() && ideal.dim() < alg->dim()) reports.push_back(check_quotient_laws(ideal, caps));
  reports.push_back(check_maximal_nilpotent_equivalence(alg, caps));
  const NilpotencyOracle oracle(alg);
  const NilGraph g = build(oracle, GraphKind::nilpotent, c.build_options());
  reports.push_back(verify_degree_formula(oracle, g));
  reports.push_back(check_eulerian_obstruction(g));
  Report shape("graph shape of " + alg->name());
  shape.add("not a star", !is_star(g), std::to_string(g.vertex_count()) + " vertices");
  auto complement = g.complement();
  bool partition = true;
  for (std::size_t b = 1; b < g.vertex_count(); ++b)
    for (std::size_t a = 0; a < b; ++a) partition = partition && (g.adjacent(a, b) != complement.adjacent(a, b));
  shape.add("graph and complement partition the vertex pairs", partition);
  reports.push_back(shape);
  return print_reports(reports, out);
}

int cmd_search(const Common& c, const std::vector<std::string>& extra, std::ostream& out, std::ostream& err) {
  auto entries = standard_catalog();
  for (auto& e : nilpotent_catalog()) entries.push_back(e);
  for (const auto& expr : extra) entries.push_back({expr, c.field});
  std::vector<std::string> findings;
  for (const auto& e : entries) {
    try {
      const AlgebraPtr alg = parse_algebra_expr(e.expr, e.field.empty() ? nullptr : parse_field(e.field));
      const NilGraph g = build(alg, GraphKind::nilpotent, c.build_options());
      const NilSet& nil = g.nil();
      const bool equal = nil.is_subspace && *nil.as_subspace == hypercenter(alg);
      const bool bipartite = g.vertex_count() > 0 && is_bipartite(g);
      out << alg->name() << ": nil(L) subspace=" << (nil.is_subspace ? "yes" : "no")
          << ", Z*(L)=nil(L)=" << (equal ? "yes" : "no") << ", bipartite=" << (bipartite ? "yes" : "no") << '\n';
      if (!nil.is_subspace) findings.push_back(alg->name() + ": nil(L) is not a subspace");
      if (!equal) findings.push_back(alg->name() + ": Z*(L) differs from nil(L)");
      if (bipartite && alg->name() != "t(2,GF(2))") findings.push_back(alg->name() + ": bipartite graph");
    } catch (const CapExceeded& ex) {
      err << e.label() << ": skipped, " << ex.what() << '\n';
    }
  }
  if (findings.empty()) {
    out << "no candidates found in " << entries.size() << " algebras\n";
  } else {
    out << "candidates:\n";
    for (const auto& f : findings) out << "  " << f << '\n';
  }
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent graphs of finite Lie algebras", "lienil"};
  app.require_subcommand(1);
  Common common;

  auto* graph = app.add_subcommand("graph", "Build the nilpotent graph or its complement");
  add_algebra(graph, common, true);
  add_build(graph, common);
  add_caps(graph, common);
  std::string kind = "nilpotent";
  std::vector<std::string> exports;
  bool summary = false, json = false;
  graph->add_option("--kind", kind, "nilpotent or complement");
  graph->add_option("--export", exports, "format:path with format dot, json or csv (repeatable)");
  graph->add_flag("--summary", summary, "Print the component summary");
  graph->add_flag("--json", json, "Print the graph as JSON");

  auto* nil = app.add_subcommand("nil", "Print nil(L), and nil_L(x) for --element");
  add_algebra(nil, common, true);
  add_caps(nil, common);
  std::string element;
  nil->add_option("--element", element, "Coordinates as comma-separated field indices");
  nil->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  auto* t2 = verify->add_subcommand("t2", "Components of the graph of t(2, F_q)");
  std::vector<std::uint64_t> qs{2, 3, 4, 5};
  t2->add_option("--q", qs, "Field orders")->delimiter(',');
  add_build(t2, common);
  add_caps(t2, common);
  auto* sums = verify->add_subcommand("sums", "Direct-sum laws on the built-in pair catalog");
  std::uint64_t max_total = 256;
  sums->add_option("--max-total", max_total, "Largest direct sum (element count) in the pair catalog");
  add_build(sums, common);
  add_caps(sums, common);
  auto* lemmas = verify->add_subcommand("lemmas", "Nilpotentizer identities on one algebra");
  add_algebra(lemmas, common, true);
  add_build(lemmas, common);
  add_caps(lemmas, common);

  auto* search = app.add_subcommand("search", "Scan the catalog for the open questions");
  std::vector<std::string> extra;
  search->add_option("--algebra", extra, "Additional algebra expressions (repeatable)");
  search->add_option("--field", common.field, "Field for the additional expressions");
  add_build(search, common);
  add_caps(search, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return bad_arguments;
  }

  try {
    if (*graph) return cmd_graph(common, kind, exports, summary, json, out);
    if (*nil) return cmd_nil(common, element, json, out);
    if (*t2) return verify_t2(common, qs, out);
    if (*sums) return verify_sums(common, max_total, out);
    if (*lemmas) return verify_lemmas(common, out);
    if (*search) return cmd_search(common, extra, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return cap_exceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return bad_arguments;
  }
  return bad_arguments;
}

}  // namespace lienil::cli
