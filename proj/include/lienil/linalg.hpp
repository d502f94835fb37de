#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lienil/field.hpp"

namespace lienil {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of field indices. Arithmetic takes the field
/// explicitly so the value type stays trivially comparable.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vec> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec column(std::size_t c) const;

  void append_row(std::span<const Scalar> v);
  void remove_row(std::size_t r);
  const std::vector<Scalar>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix transpose(const Matrix& a);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Vec apply(const Field& f, const Matrix& a, std::span<const Scalar> v);
Matrix power(const Field& f, const Matrix& a, std::size_t e);
bool is_zero(std::span<const Scalar> v);

// Reduced row echelon form in place, dropping zero rows. Returns pivot columns.
std::vector<std::size_t> rref_in_place(const Field& f, Matrix& m);
Matrix rref(const Field& f, Matrix m);
std::size_t rank(const Field& f, Matrix m);
// Basis (as RREF rows) of the right null space {v : a v = 0}.
Matrix kernel(const Field& f, const Matrix& a);

/// Incrementally maintained RREF basis. Rows stay fully reduced after
/// every insertion, so the final matrix is canonical.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Subtracts the projection onto the span; zero result iff v is in the span.
  void reduce(const Field& f, std::span<Scalar> v) const;
  bool contains(const Field& f, std::span<const Scalar> v) const;
  // Returns true if v enlarged the span.
  bool insert(const Field& f, Vec v);
  Matrix to_matrix() const { return Matrix::from_rows(rows_, dim_); }
  void clear() {
    rows_.clear();
    pivots_.clear();
  }

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lienil
