#include "lienil/subspace.hpp"

#include <limits>

#include "lienil/error.hpp"

namespace lienil {

namespace {

std::vector<std::size_t> pivots_of(const Matrix& m) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t c = 0;
    while (c < m.cols() && m.at(r, c) == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

}  // namespace

Subspace::Subspace(AlgebraPtr algebra, Matrix rref_basis)
    : algebra_(std::move(algebra)), basis_(std::move(rref_basis)) {
  if (basis_.cols() != algebra_->dim()) throw InvalidArgument("subspace basis width does not match dimension");
  // Canonicalize defensively; callers usually hand in RREF already.
  rref_in_place(algebra_->F(), basis_);
  pivots_ = pivots_of(basis_);
}

Subspace Subspace::zero(const AlgebraPtr& algebra) { return {algebra, Matrix(0, algebra->dim())}; }
Subspace Subspace::whole(const AlgebraPtr& algebra) { return {algebra, Matrix::identity(algebra->dim())}; }

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row_vec(r));
  return out;
}

Vec Subspace::reduce(std::span<const Scalar> v) const {
  const Field& f = algebra_->F();
  Vec out(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar c = out[pivots_[r]];
    if (c == 0) continue;
    const Scalar nc = f.neg(c);
    for (std::size_t j = pivots_[r]; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(nc, basis_.at(r, j)));
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return lienil::is_zero(reduce(v)); }

bool Subspace::contains(const Element& x) const {
  require_same_algebra(algebra_, x.algebra());
  return contains(std::span<const Scalar>(x.coords()));
}

bool Subspace::contains(const Subspace& other) const {
  require_same_algebra(algebra_, other.algebra_);
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

std::uint64_t Subspace::size(std::uint64_t max_elements) const {
  std::uint64_t count = 1;
  const std::uint64_t q = algebra_->F().order();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (count > max_elements / q) throw CapExceeded("subspace has more than " + std::to_string(max_elements) + " elements");
    count *= q;
  }
  return count;
}

std::vector<std::uint64_t> Subspace::element_indices(std::uint64_t max_elements) const {
  const std::uint64_t count = size(max_elements);
  const Field& f = algebra_->F();
  const std::uint64_t q = f.order();
  std::vector<std::uint64_t> out;
  out.reserve(count);
  Vec v(algebra_->dim());
  for (std::uint64_t t = 0; t < count; ++t) {
    std::fill(v.begin(), v.end(), Scalar{0});
    std::uint64_t rest = t;
    for (std::size_t r = 0; r < dim(); ++r) {
      const Scalar c = static_cast<Scalar>(rest % q);
      rest /= q;
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(c, basis_.at(r, j)));
    }
    out.push_back(algebra_->index_of(v));
  }
  return out;
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    if (r) out += ", ";
    out += format_coords(*algebra_, basis_.row(r));
  }
  return out + "}";
}

Subspace span(const AlgebraPtr& algebra, std::span<const Vec> vectors) {
  return {algebra, Matrix::from_rows(vectors, algebra->dim())};
}

Subspace span(std::span<const Element> elements) {
  if (elements.empty()) throw InvalidArgument("span of an empty element list needs an algebra");
  std::vector<Vec> rows;
  for (const auto& e : elements) {
    require_same_algebra(elements.front().algebra(), e.algebra());
    rows.push_back(e.coords());
  }
  return span(elements.front().algebra(), rows);
}

bool member(const Subspace& s, const Element& x) { return s.contains(x); }

Subspace sum(const Subspace& s, const Subspace& t) {
  require_same_algebra(s.algebra(), t.algebra());
  auto rows = s.basis_vectors();
  for (auto& r : t.basis_vectors()) rows.push_back(std::move(r));
  return span(s.algebra(), rows);
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  require_same_algebra(s.algebra(), t.algebra());
  const Field& f = s.algebra()->F();
  const std::size_t n = s.algebra()->dim();
  if (s.is_zero() || t.is_zero()) return Subspace::zero(s.algebra());
  // (a, b) with a S + b T = 0 gives a S in the intersection.
  Matrix stacked(0, n);
  for (std::size_t r = 0; r < s.dim(); ++r) stacked.append_row(s.basis().row(r));
  for (std::size_t r = 0; r < t.dim(); ++r) stacked.append_row(t.basis().row(r));
  const Matrix left_kernel = kernel(f, transpose(stacked));
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < left_kernel.rows(); ++r) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const Scalar a = left_kernel.at(r, i);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(a, s.basis().at(i, j)));
    }
    rows.push_back(std::move(v));
  }
  return span(s.algebra(), rows);
}

std::uint64_t count_subspaces(std::uint64_t q, std::size_t n, std::size_t max_dim) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Gaussian binomial via the recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<std::uint64_t> row{1};
  auto sat_add = [&](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [&](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > kMax / b) ? kMax : a * b; };
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 0);
    std::uint64_t qk = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      const std::uint64_t lower = k > 0 ? row[k - 1] : 0;
      const std::uint64_t upper = k < m ? sat_mul(qk, row[k]) : 0;
      next[k] = sat_add(lower, upper);
      qk = sat_mul(qk, q);
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= std::min(n, max_dim); ++k) total = sat_add(total, row[k]);
  return total;
}

std::uint64_t count_subspaces(std::uint64_t q, std::size_t n) { return count_subspaces(q, n, n); }

void for_each_subspace(const AlgebraPtr& algebra, std::size_t max_dim, std::uint64_t max_subspaces,
                       const std::function<void(const Subspace&)>& fn) {
  const std::size_t n = algebra->dim();
  const std::uint32_t q = algebra->F().order();
  const std::uint64_t total = count_subspaces(q, n, max_dim);
  if (total > max_subspaces) {
    throw CapExceeded(algebra->name() + " has " + std::to_string(total) + " subspaces, cap is " +
                      std::to_string(max_subspaces));
  }
  for (std::size_t r = 0; r <= std::min(n, max_dim); ++r) {
    // Pivot sets as increasing r-subsets of {0..n-1}.
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (auto p : piv) is_pivot[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = piv[i] + 1; c < n; ++c)
          if (!is_pivot[c]) free.emplace_back(i, c);
      std::vector<Scalar> digits(free.size(), 0);
      while (true) {
        Matrix m(r, n);
        for (std::size_t i = 0; i < r; ++i) m.at(i, piv[i]) = 1;
        for (std::size_t t = 0; t < free.size(); ++t) m.at(free[t].first, free[t].second) = digits[t];
        fn(Subspace(algebra, std::move(m)));
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      // Next r-subset in lexicographic order.
      std::size_t i = r;
      while (i > 0 && piv[i - 1] == n - r + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

std::vector<Subspace> enumerate_subspaces(const AlgebraPtr& algebra, std::uint64_t max_subspaces) {
  std::vector<Subspace> out;
  for_each_subspace(algebra, algebra->dim(), max_subspaces, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

}  // namespace lienil
