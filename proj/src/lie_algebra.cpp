#include "lienil/lie_algebra.hpp"

#include <sstream>

#include "lienil/error.hpp"

namespace lienil {

void StructureConstants::set_antisymmetric(const Field& f, std::size_t i, std::size_t j, std::size_t k,
                                           Scalar v) {
  set(i, j, k, v);
  set(j, i, k, f.neg(v));
}

namespace {

bool is_alternating_table(const Field& f, const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sc.get(i, i, k) != 0) return false;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (sc.get(i, j, k) != f.neg(sc.get(j, i, k))) return false;
      }
    }
  return true;
}

}  // namespace

LieAlgebra::LieAlgebra(FieldPtr field, std::string name, std::vector<std::string> labels, StructureConstants sc,
                       std::optional<std::vector<Matrix>> matrix_basis)
    : field_(std::move(field)),
      dim_(sc.dim()),
      name_(std::move(name)),
      labels_(std::move(labels)),
      sc_(std::move(sc)),
      matrix_basis_(std::move(matrix_basis)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i + 1));
  }
  if (labels_.size() != dim_) throw InvalidArgument("number of basis labels does not match dimension");
  if (matrix_basis_ && matrix_basis_->size() != dim_) {
    throw InvalidArgument("matrix basis size does not match dimension");
  }
  half_table_ = is_alternating_table(*field_, sc_);
  for (std::uint32_t i = 0; i < dim_; ++i)
    for (std::uint32_t j = half_table_ ? i + 1 : 0; j < dim_; ++j)
      for (std::uint32_t k = 0; k < dim_; ++k) {
        const Scalar c = sc_.get(i, j, k);
        if (c != 0) terms_.push_back({i, j, k, c});
      }
}

void LieAlgebra::bracket_into(std::span<const Scalar> x, std::span<const Scalar> y, std::span<Scalar> out) const {
  const Field& f = *field_;
  std::fill(out.begin(), out.end(), Scalar{0});
  for (const Term& t : terms_) {
    // Alternating tables only store i < j: contribution x_i y_j - x_j y_i.
    Scalar coeff = f.mul(x[t.i], y[t.j]);
    if (half_table_) coeff = f.sub(coeff, f.mul(x[t.j], y[t.i]));
    if (coeff != 0) out[t.k] = f.add(out[t.k], f.mul(coeff, t.c));
  }
}

Vec LieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Vec out(dim_, 0);
  bracket_into(x, y, out);
  return out;
}

std::uint64_t LieAlgebra::element_count(std::uint64_t max_elements) const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (count > max_elements / field_->order()) {
      throw CapExceeded("algebra " + name_ + " has " + std::to_string(field_->order()) + "^" +
                        std::to_string(dim_) + " elements, cap is " + std::to_string(max_elements));
    }
    count *= field_->order();
  }
  if (count > max_elements) {
    throw CapExceeded("algebra " + name_ + " has " + std::to_string(count) + " elements, cap is " +
                      std::to_string(max_elements));
  }
  return count;
}

std::uint64_t LieAlgebra::index_of(std::span<const Scalar> coords) const {
  std::uint64_t index = 0;
  for (std::size_t i = dim_; i-- > 0;) index = index * field_->order() + coords[i];
  return index;
}

Vec LieAlgebra::coords_of(std::uint64_t index) const {
  Vec out(dim_);
  coords_of(index, out);
  return out;
}

void LieAlgebra::coords_of(std::uint64_t index, std::span<Scalar> out) const {
  const std::uint64_t q = field_->order();
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i] = static_cast<Scalar>(index % q);
    index /= q;
  }
}

AlgebraPtr make_algebra(FieldPtr field, std::string name, std::vector<std::string> labels, StructureConstants sc,
                        std::optional<std::vector<Matrix>> matrix_basis) {
  return std::make_shared<const LieAlgebra>(std::move(field), std::move(name), std::move(labels), std::move(sc),
                                            std::move(matrix_basis));
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b) {
    throw MismatchError("operands belong to different algebras (" + (a ? a->name() : "null") + ", " +
                        (b ? b->name() : "null") + ")");
  }
}

Element::Element(AlgebraPtr algebra, Vec coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_->dim()) throw InvalidArgument("coordinate vector length does not match dimension");
  for (Scalar c : coords_) {
    if (!algebra_->F().contains(c)) throw InvalidArgument("coordinate is not a field element");
  }
}

Element Element::zero(const AlgebraPtr& algebra) { return {algebra, Vec(algebra->dim(), 0)}; }

Element Element::basis(const AlgebraPtr& algebra, std::size_t i) {
  Vec v(algebra->dim(), 0);
  v.at(i) = 1;
  return {algebra, std::move(v)};
}

Element Element::from_index(const AlgebraPtr& algebra, std::uint64_t index) {
  return {algebra, algebra->coords_of(index)};
}

bool Element::is_zero() const { return lienil::is_zero(coords_); }

Element Element::operator+(const Element& o) const {
  require_same_algebra(algebra_, o.algebra_);
  Vec out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = algebra_->F().add(coords_[i], o.coords_[i]);
  return {algebra_, std::move(out)};
}

Element Element::operator-(const Element& o) const {
  require_same_algebra(algebra_, o.algebra_);
  Vec out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = algebra_->F().sub(coords_[i], o.coords_[i]);
  return {algebra_, std::move(out)};
}

Element Element::scaled(Scalar lambda) const {
  Vec out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = algebra_->F().mul(lambda, coords_[i]);
  return {algebra_, std::move(out)};
}

std::string Element::to_string() const { return format_coords(*algebra_, coords_); }

Element bracket(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return {x.algebra(), x.algebra()->bracket(x.coords(), y.coords())};
}

Matrix ad_matrix(const LieAlgebra& algebra, std::span<const Scalar> x) {
  const std::size_t n = algebra.dim();
  Matrix m(n, n);
  Vec basis(n, 0);
  Vec image(n);
  for (std::size_t j = 0; j < n; ++j) {
    basis[j] = 1;
    algebra.bracket_into(basis, x, image);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = image[i];
    basis[j] = 0;
  }
  return m;
}

Matrix ad_matrix(const Element& x) { return ad_matrix(*x.algebra(), x.coords()); }

std::string ValidationReport::describe() const {
  auto triple = [&] {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  };
  switch (kind) {
    case Kind::ok:
      return "ok";
    case Kind::alternating:
      return "alternating violation: c_{ii}^k nonzero at (i,i,k) = " + triple();
    case Kind::antisymmetry:
      return "antisymmetry violation: c_{ij}^k != -c_{ji}^k at (i,j,k) = " + triple();
    case Kind::jacobi:
      return "Jacobi violation at basis triple " + triple();
  }
  return "unknown";
}

ValidationReport validate(const LieAlgebra& algebra) {
  const Field& f = algebra.F();
  const auto& sc = algebra.structure_constants();
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (sc.get(i, i, k) != 0) return {ValidationReport::Kind::alternating, i + 1, i + 1, k + 1};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sc.get(i, j, k) != f.neg(sc.get(j, i, k))) return {ValidationReport::Kind::antisymmetry, i + 1, j + 1, k + 1};

  // Jacobi: [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] = 0.
  std::vector<Vec> basis(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec a = algebra.bracket(basis[i], algebra.bracket(basis[j], basis[k]));
        const Vec b = algebra.bracket(basis[j], algebra.bracket(basis[k], basis[i]));
        const Vec c = algebra.bracket(basis[k], algebra.bracket(basis[i], basis[j]));
        for (std::size_t t = 0; t < n; ++t) {
          if (f.add(f.add(a[t], b[t]), c[t]) != 0) return {ValidationReport::Kind::jacobi, i + 1, j + 1, k + 1};
        }
      }
  return {};
}

std::string format_coords(const LieAlgebra& algebra, std::span<const Scalar> coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += algebra.F().to_string(coords[i]);
  }
  return out + ")";
}

std::string format_matrix(const LieAlgebra& algebra, std::span<const Scalar> coords) {
  if (!algebra.matrix_basis()) return format_coords(algebra, coords);
  const auto& mb = *algebra.matrix_basis();
  const Field& f = algebra.F();
  const std::size_t r = mb.front().rows();
  const std::size_t c = mb.front().cols();
  Matrix m(r, c);
  for (std::size_t b = 0; b < coords.size(); ++b) {
    if (coords[b] == 0) continue;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.add(m.at(i, j), f.mul(coords[b], mb[b].at(i, j)));
  }
  std::string out = "[";
  for (std::size_t i = 0; i < r; ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < c; ++j) {
      if (j) out += " ";
      out += f.to_string(m.at(i, j));
    }
  }
  return out + "]";
}

}  // namespace lienil
