#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lienil/field.hpp"
#include "lienil/linalg.hpp"

namespace lienil {

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Dense c_{ij}^k tensor with [b_i, b_j] = sum_k c_{ij}^k b_k.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t dim = 0) : dim_(dim), data_(dim * dim * dim, 0) {}

  std::size_t dim() const { return dim_; }
  Scalar get(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * dim_ + j) * dim_ + k]; }
  void set(std::size_t i, std::size_t j, std::size_t k, Scalar v) { data_[(i * dim_ + j) * dim_ + k] = v; }
  // Writes c_{ij}^k = v and c_{ji}^k = -v.
  void set_antisymmetric(const Field& f, std::size_t i, std::size_t j, std::size_t k, Scalar v);

  bool operator==(const StructureConstants&) const = default;

 private:
  std::size_t dim_;
  std::vector<Scalar> data_;
};

/// A finite-dimensional Lie algebra given by structure constants. The
/// constructor does not validate; call validate() (factories and the file
/// loader do).
class LieAlgebra {
 public:
  LieAlgebra(FieldPtr field, std::string name, std::vector<std::string> labels, StructureConstants sc,
             std::optional<std::vector<Matrix>> matrix_basis = std::nullopt);

  const FieldPtr& field() const { return field_; }
  const Field& F() const { return *field_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureConstants& structure_constants() const { return sc_; }
  // Present for algebras built from matrices; basis element i as a matrix.
  const std::optional<std::vector<Matrix>>& matrix_basis() const { return matrix_basis_; }

  // Fast path: out = [x, y] in coordinates. out must have length dim().
  void bracket_into(std::span<const Scalar> x, std::span<const Scalar> y, std::span<Scalar> out) const;
  Vec bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  bool is_abelian() const { return terms_.empty(); }

  // q^n, throwing CapExceeded when it exceeds max_elements.
  std::uint64_t element_count(std::uint64_t max_elements) const;
  // Canonical index: coordinate 0 least significant, base q.
  std::uint64_t index_of(std::span<const Scalar> coords) const;
  Vec coords_of(std::uint64_t index) const;
  void coords_of(std::uint64_t index, std::span<Scalar> out) const;

 private:
  struct Term {
    std::uint32_t i, j, k;
    Scalar c;
  };

  FieldPtr field_;
  std::size_t dim_;
  std::string name_;
  std::vector<std::string> labels_;
  StructureConstants sc_;
  std::optional<std::vector<Matrix>> matrix_basis_;
  bool half_table_ = false;
  std::vector<Term> terms_;  // nonzero c_{ij}^k, only i < j when half_table_
};

AlgebraPtr make_algebra(FieldPtr field, std::string name, std::vector<std::string> labels, StructureConstants sc,
                        std::optional<std::vector<Matrix>> matrix_basis = std::nullopt);

class Element {
 public:
  Element(AlgebraPtr algebra, Vec coords);
  static Element zero(const AlgebraPtr& algebra);
  static Element basis(const AlgebraPtr& algebra, std::size_t i);
  static Element from_index(const AlgebraPtr& algebra, std::uint64_t index);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Vec& coords() const { return coords_; }
  std::uint64_t index() const { return algebra_->index_of(coords_); }
  bool is_zero() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element scaled(Scalar lambda) const;
  bool operator==(const Element& o) const { return algebra_ == o.algebra_ && coords_ == o.coords_; }

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  Vec coords_;
};

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

Element bracket(const Element& x, const Element& y);

// Matrix of y -> [y, x] (right action); column j holds [b_j, x].
Matrix ad_matrix(const Element& x);
Matrix ad_matrix(const LieAlgebra& algebra, std::span<const Scalar> x);

struct ValidationReport {
  enum class Kind { ok, alternating, antisymmetry, jacobi };
  Kind kind = Kind::ok;
  // 1-based basis indices of the first violation.
  std::size_t i = 0, j = 0, k = 0;

  bool ok() const { return kind == Kind::ok; }
  std::string describe() const;
};

ValidationReport validate(const LieAlgebra& algebra);

// Renders an element as a coordinate tuple, or as a matrix when the algebra
// carries a matrix basis.
std::string format_coords(const LieAlgebra& algebra, std::span<const Scalar> coords);
std::string format_matrix(const LieAlgebra& algebra, std::span<const Scalar> coords);

}  // namespace lienil
