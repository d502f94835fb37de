#include "lienil/constructions.hpp"

#include <charconv>

#include "lienil/algebra_io.hpp"
#include "lienil/error.hpp"
#include "lienil/structure.hpp"

namespace lienil {

namespace {

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m.at(i, j) = 1;
  return m;
}

std::string ij_label(std::size_t i, std::size_t j) {
  const bool wide = i >= 9 || j >= 9;
  return "E" + std::to_string(i + 1) + (wide ? "_" : "") + std::to_string(j + 1);
}

std::string algebra_name(const char* kind, std::size_t n, const Field& f) {
  const std::string field = f.degree() == 1 ? std::to_string(f.characteristic()) : f.name();
  return std::string(kind) + "(" + std::to_string(n) + ",GF(" + field + "))";
}

Matrix commutator(const Field& f, const Matrix& a, const Matrix& b) {
  const Matrix ab = multiply(f, a, b);
  const Matrix ba = multiply(f, b, a);
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = f.sub(ab.at(i, j), ba.at(i, j));
  return out;
}

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || v == 0) {
    throw InvalidArgument("bad size in algebra expression '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

AlgebraPtr matrix_lie_algebra(const FieldPtr& field, std::string name, std::vector<std::string> labels,
                              std::vector<Matrix> basis) {
  const Field& f = *field;
  const std::size_t d = basis.size();
  if (d == 0) return make_algebra(field, std::move(name), {}, StructureConstants(0));
  const std::size_t cells = basis.front().rows() * basis.front().cols();
  // Columns are the flattened basis matrices; solving A c = vec(C) gives coordinates.
  Matrix coordinate_system(cells, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t c = 0; c < cells; ++c) coordinate_system.at(c, k) = basis[k].data()[c];
  Matrix reduced = coordinate_system;
  if (rref_in_place(f, reduced).size() != d) throw InvalidArgument(name + ": matrix basis is linearly dependent");

  auto coordinates = [&](const Matrix& target) {
    Matrix aug(cells, d + 1);
    for (std::size_t c = 0; c < cells; ++c) {
      for (std::size_t k = 0; k < d; ++k) aug.at(c, k) = coordinate_system.at(c, k);
      aug.at(c, d) = target.data()[c];
    }
    const auto pivots = rref_in_place(f, aug);
    if (!pivots.empty() && pivots.back() == d) throw InvalidArgument(name + ": basis is not closed under the commutator");
    Vec coords(d, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = aug.at(r, d);
    return coords;
  };

  StructureConstants sc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec c = coordinates(commutator(f, basis[i], basis[j]));
      for (std::size_t k = 0; k < d; ++k) sc.set_antisymmetric(f, i, j, k, c[k]);
    }
  return make_algebra(field, std::move(name), std::move(labels), std::move(sc), std::move(basis));
}

AlgebraPtr gl(std::size_t n, const FieldPtr& field) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(unit(n, i, j));
      labels.push_back(ij_label(i, j));
    }
  return matrix_lie_algebra(field, algebra_name("gl", n, *field), std::move(labels), std::move(basis));
}

AlgebraPtr t(std::size_t n, const FieldPtr& field) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      basis.push_back(unit(n, i, j));
      labels.push_back(ij_label(i, j));
    }
  return matrix_lie_algebra(field, algebra_name("t", n, *field), std::move(labels), std::move(basis));
}

AlgebraPtr u(std::size_t n, const FieldPtr& field) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      basis.push_back(unit(n, i, j));
      labels.push_back(ij_label(i, j));
    }
  return matrix_lie_algebra(field, algebra_name("u", n, *field), std::move(labels), std::move(basis));
}

AlgebraPtr sl(std::size_t n, const FieldPtr& field) {
  const Field& f = *field;
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      basis.push_back(unit(n, i, j));
      labels.push_back(ij_label(i, j));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix h(n, n);
    h.at(i, i) = 1;
    h.at(i + 1, i + 1) = f.neg(1);
    basis.push_back(std::move(h));
    labels.push_back("H" + std::to_string(i + 1));
  }
  return matrix_lie_algebra(field, algebra_name("sl", n, f), std::move(labels), std::move(basis));
}

AlgebraPtr two_dim_nonabelian(const FieldPtr& field) {
  StructureConstants sc(2);
  sc.set_antisymmetric(*field, 0, 1, 1, 1);
  const std::string fname = field->degree() == 1 ? std::to_string(field->characteristic()) : field->name();
  return make_algebra(field, "aff1(GF(" + fname + "))", {"x", "y"}, std::move(sc));
}

AlgebraPtr three_dim_example(const FieldPtr& field) {
  StructureConstants sc(3);
  sc.set_antisymmetric(*field, 0, 2, 0, 1);  // [e, g] = e
  sc.set_antisymmetric(*field, 1, 2, 1, 1);  // [f, g] = f
  const std::string fname = field->degree() == 1 ? std::to_string(field->characteristic()) : field->name();
  return make_algebra(field, "ex3d(GF(" + fname + "))", {"e", "f", "g"}, std::move(sc));
}

AlgebraPtr abelian(std::size_t n, const FieldPtr& field) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return make_algebra(field, algebra_name("ab", n, *field), std::move(labels), StructureConstants(n));
}

AlgebraPtr parse_algebra_expr(std::string_view text, const FieldPtr& field) {
  if (text.empty()) throw InvalidArgument("empty algebra expression");
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto plus = text.find('+', start);
    parts.push_back(text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  AlgebraPtr result;
  for (const auto part : parts) {
    AlgebraPtr next;
    const auto colon = part.find(':');
    const std::string_view kind = part.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : part.substr(colon + 1);
    if (kind == "file") {
      if (arg.empty()) throw InvalidArgument("file: needs a path");
      next = load_algebra_file(std::string(arg));
      if (field && !(next->F() == *field)) {
        throw InvalidArgument("algebra file " + std::string(arg) + " is over GF(" + next->F().name() +
                              "), not GF(" + field->name() + ")");
      }
    } else {
      if (!field) throw InvalidArgument("algebra expression '" + std::string(part) + "' needs a field");
      if (kind == "aff1" && arg.empty()) {
        next = two_dim_nonabelian(field);
      } else if (kind == "ex3d" && arg.empty()) {
        next = three_dim_example(field);
      } else if (kind == "gl") {
        next = gl(parse_size(arg, part), field);
      } else if (kind == "t") {
        next = t(parse_size(arg, part), field);
      } else if (kind == "u") {
        next = u(parse_size(arg, part), field);
      } else if (kind == "sl") {
        next = sl(parse_size(arg, part), field);
      } else if (kind == "ab") {
        next = abelian(parse_size(arg, part), field);
      } else {
        throw InvalidArgument("unknown algebra '" + std::string(part) + "'");
      }
    }
    result = result ? direct_sum(result, next).algebra : next;
  }
  return result;
}

}  // namespace lienil
