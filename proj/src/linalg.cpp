#include "lienil/linalg.hpp"

#include <algorithm>

#include "lienil/error.hpp"

namespace lienil {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void Matrix::append_row(std::span<const Scalar> v) {
  if (v.size() != cols_) throw InvalidArgument("row length does not match matrix width");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::remove_row(std::size_t r) {
  data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  --rows_;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t.at(c, r) = a.at(r, c);
  return t;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix dimensions do not match");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Scalar x = a.at(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(l, j)));
      }
    }
  }
  return out;
}

Vec apply(const Field& f, const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw InvalidArgument("vector length does not match matrix width");
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s = f.add(s, f.mul(a.at(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

Matrix power(const Field& f, const Matrix& a, std::size_t e) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = multiply(f, result, base);
    e >>= 1;
    if (e > 0) base = multiply(f, base, base);
  }
  return result;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

std::vector<std::size_t> rref_in_place(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m.at(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(lead_row, j));
    }
    const Scalar inv = f.inv(m.at(lead_row, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(lead_row, j) = f.mul(m.at(lead_row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row) continue;
      const Scalar factor = m.at(i, c);
      if (factor == 0) continue;
      const Scalar nf = f.neg(factor);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m.at(i, j) = f.add(m.at(i, j), f.mul(nf, m.at(lead_row, j)));
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  while (m.rows() > lead_row) m.remove_row(m.rows() - 1);
  return pivots;
}

Matrix rref(const Field& f, Matrix m) {
  rref_in_place(f, m);
  return m;
}

std::size_t rank(const Field& f, Matrix m) { return rref_in_place(f, m).size(); }

Matrix kernel(const Field& f, const Matrix& a) {
  Matrix r = a;
  const auto pivots = rref_in_place(f, r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out(0, a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r.at(i, free));
    out.append_row(v);
  }
  return rref(f, std::move(out));
}

void EchelonBasis::reduce(const Field& f, std::span<Scalar> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c == 0) continue;
    const Scalar nc = f.neg(c);
    const Vec& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < dim_; ++j) {
      if (row[j] != 0) v[j] = f.add(v[j], f.mul(nc, row[j]));
    }
  }
}

bool EchelonBasis::contains(const Field& f, std::span<const Scalar> v) const {
  Vec tmp(v.begin(), v.end());
  reduce(f, tmp);
  return is_zero(tmp);
}

bool EchelonBasis::insert(const Field& f, Vec v) {
  reduce(f, v);
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const Scalar inv = f.inv(v[pivot]);
  for (std::size_t j = pivot; j < dim_; ++j) v[j] = f.mul(v[j], inv);
  // Clear the new pivot column in the existing rows.
  for (auto& row : rows_) {
    const Scalar c = row[pivot];
    if (c == 0) continue;
    const Scalar nc = f.neg(c);
    for (std::size_t j = pivot; j < dim_; ++j) {
      if (v[j] != 0) row[j] = f.add(row[j], f.mul(nc, v[j]));
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

}  // namespace lienil
