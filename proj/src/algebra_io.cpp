#include "lienil/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "lienil/error.hpp"

namespace lienil {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InvalidArgument("algebra file line " + std::to_string(line) + ": " + msg);
}

}  // namespace

AlgebraPtr parse_algebra_text(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  FieldPtr field;
  std::size_t dim = 0;
  bool have_dim = false;
  std::vector<std::string> labels;
  struct Entry {
    std::size_t i, j, k;
    long long value;
    std::size_t line;
  };
  std::vector<Entry> entries;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string keyword;
    if (!(line >> keyword)) continue;
    if (keyword == "field") {
      std::string text;
      if (!(line >> text)) fail(line_no, "field needs p^k");
      field = parse_field(text);
    } else if (keyword == "dim") {
      if (!(line >> dim)) fail(line_no, "dim needs a nonnegative integer");
      have_dim = true;
    } else if (keyword == "labels") {
      std::string l;
      while (line >> l) labels.push_back(l);
    } else if (keyword == "sc") {
      Entry e{};
      e.line = line_no;
      if (!(line >> e.i >> e.j >> e.k >> e.value)) fail(line_no, "sc needs i j k value");
      entries.push_back(e);
    } else {
      fail(line_no, "unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (keyword != "labels" && (line >> extra)) fail(line_no, "trailing text '" + extra + "'");
  }
  if (!field) throw InvalidArgument("algebra file: missing 'field' line");
  if (!have_dim) throw InvalidArgument("algebra file: missing 'dim' line");
  if (!labels.empty() && labels.size() != dim) throw InvalidArgument("algebra file: label count does not match dim");

  const Field& f = *field;
  StructureConstants sc(dim);
  std::vector<bool> explicit_entry(dim * dim * dim, false);
  auto slot = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * dim + j) * dim + k; };
  for (const auto& e : entries) {
    if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > dim || e.j > dim || e.k > dim) fail(e.line, "index out of range");
    Scalar v = 0;
    if (f.degree() == 1) {
      v = f.from_integer(e.value);
    } else {
      if (e.value < 0 || e.value >= static_cast<long long>(f.order())) fail(e.line, "value is not a field index");
      v = static_cast<Scalar>(e.value);
    }
    const std::size_t i = e.i - 1, j = e.j - 1, k = e.k - 1;
    if (i == j) {
      if (v != 0) fail(e.line, "c_{ii}^k must vanish");
      continue;
    }
    // An explicit entry always wins over completion; two explicit entries must agree.
    if (explicit_entry[slot(j, i, k)] && sc.get(j, i, k) != f.neg(v)) fail(e.line, "contradicts antisymmetric entry");
    if (explicit_entry[slot(i, j, k)] && sc.get(i, j, k) != v) fail(e.line, "duplicate entry with a different value");
    sc.set(i, j, k, v);
    sc.set(j, i, k, f.neg(v));
    explicit_entry[slot(i, j, k)] = true;
  }
  auto algebra = make_algebra(field, std::move(name), std::move(labels), std::move(sc));
  const auto report = validate(*algebra);
  if (!report.ok()) throw InvalidArgument("algebra file is not a Lie algebra: " + report.describe());
  return algebra;
}

AlgebraPtr load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open algebra file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_text(buffer.str(), "file:" + path);
}

std::string write_algebra_text(const LieAlgebra& algebra) {
  std::ostringstream out;
  out << "# " << algebra.name() << "\n";
  out << "field " << algebra.F().name() << "\n";
  out << "dim " << algebra.dim() << "\n";
  if (algebra.dim() > 0) {
    out << "labels";
    for (const auto& l : algebra.labels()) out << " " << l;
    out << "\n";
  }
  const auto& sc = algebra.structure_constants();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra.dim(); ++j)
      for (std::size_t k = 0; k < algebra.dim(); ++k)
        if (sc.get(i, j, k) != 0) out << "sc " << i + 1 << " " << j + 1 << " " << k + 1 << " " << sc.get(i, j, k) << "\n";
  return out.str();
}

}  // namespace lienil
