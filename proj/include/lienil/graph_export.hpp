#pragma once

#include <string>
#include <string_view>

#include "lienil/nil_graph.hpp"

namespace lienil {

// Matrix rendering when the algebra has a matrix basis, coordinates otherwise.
std::string vertex_label(const LieAlgebra& algebra, std::uint64_t index);

// Nodes are named v<canonical index>; edges follow rank order.
std::string to_dot(const NilGraph& g);
// Versioned document: {"schema": 1, ...}.
std::string to_json(const NilGraph& g);
// Header "source,target", then one edge per line as canonical indices.
std::string to_csv(const NilGraph& g);

// "24 vertices, 60 edges, κ=4, sizes=[6,6,6,6], 5-regular"
std::string summary_line(const NilGraph& g, const ComponentSummary& summary);
// summary_line plus a line with the bipartite / Eulerian / star / connected flags.
std::string summary_text(const NilGraph& g);

enum class ExportFormat { dot, json, csv };
ExportFormat parse_export_format(std::string_view name);
std::string render(const NilGraph& g, ExportFormat format);
void write_export(const NilGraph& g, ExportFormat format, const std::string& path);

}  // namespace lienil
