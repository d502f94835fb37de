#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lienil/lie_algebra.hpp"

namespace lienil {

inline constexpr std::uint64_t kDefaultMaxSubspaces = 1'000'000;
inline constexpr std::uint64_t kDefaultMaxElements = 4096;

/// Subspace of an algebra, stored as its canonical RREF basis. Two
/// subspaces are equal iff they have the same algebra and the same RREF.
class Subspace {
 public:
  Subspace(AlgebraPtr algebra, Matrix rref_basis);

  static Subspace zero(const AlgebraPtr& algebra);
  static Subspace whole(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Element& x) const;
  bool contains(const Subspace& other) const;
  // v minus its component along the pivot columns; zero iff v is a member.
  Vec reduce(std::span<const Scalar> v) const;

  // q^dim members in index order of the coefficient vector.
  std::uint64_t size(std::uint64_t max_elements = kDefaultMaxElements) const;
  std::vector<std::uint64_t> element_indices(std::uint64_t max_elements = kDefaultMaxElements) const;

  bool operator==(const Subspace& o) const { return algebra_ == o.algebra_ && basis_ == o.basis_; }

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span(const AlgebraPtr& algebra, std::span<const Vec> vectors);
Subspace span(std::span<const Element> elements);
bool member(const Subspace& s, const Element& x);
Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

// Number of subspaces of GF(q)^n of dimension <= max_dim (Gaussian binomials),
// saturating at UINT64_MAX.
std::uint64_t count_subspaces(std::uint64_t q, std::size_t n, std::size_t max_dim);
std::uint64_t count_subspaces(std::uint64_t q, std::size_t n);

// Calls fn on every subspace of L with dim <= max_dim, ordered by dimension
// then by pivot set then by free entries. Throws CapExceeded when the count
// exceeds max_subspaces.
void for_each_subspace(const AlgebraPtr& algebra, std::size_t max_dim, std::uint64_t max_subspaces,
                       const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> enumerate_subspaces(const AlgebraPtr& algebra,
                                          std::uint64_t max_subspaces = kDefaultMaxSubspaces);

}  // namespace lienil
