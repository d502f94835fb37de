#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lienil/lie_algebra.hpp"
#include "lienil/subspace.hpp"

namespace lienil {

// [S, T]: span of brackets of basis vectors.
Subspace bracket_space(const Subspace& s, const Subspace& t);
bool is_subalgebra(const Subspace& s);
// [S, L] subset of S.
bool is_ideal(const Subspace& s);

/// Smallest bracket-closed subspace containing the generators.
Subspace subalgebra_closure(std::span<const Element> generators);
Subspace subalgebra_closure(const AlgebraPtr& algebra, std::span<const Vec> generators);

struct NilpotencyInfo {
  bool nilpotent = false;
  // Last index c with S^c != 0; present iff nilpotent.
  std::optional<std::size_t> nilpotency_class;
};

// S^1 = S, S^{k+1} = [S^k, S], up to and including the first repeated or zero term.
std::vector<Subspace> lower_central_series(const Subspace& s);
NilpotencyInfo nilpotency(const Subspace& s);
bool is_nilpotent(const Subspace& s);
bool is_nilpotent(const AlgebraPtr& algebra);

// S^(0) = S, S^(k+1) = [S^(k), S^(k)], up to stabilization.
std::vector<Subspace> derived_series(const Subspace& s);
bool is_solvable(const Subspace& s);
bool is_solvable(const AlgebraPtr& algebra);

Subspace center(const AlgebraPtr& algebra);
// C_L(S) = {y : [y, s] = 0 for all s in S}.
Subspace centralizer(const Subspace& s);
Subspace centralizer(const Element& x);

// Z_0 = 0, Z_1 = Z(L), ... up to the stable term.
std::vector<Subspace> upper_central_series(const AlgebraPtr& algebra);
Subspace hypercenter(const AlgebraPtr& algebra);

/// L/J realised on the non-pivot coordinates of J's RREF.
struct Quotient {
  AlgebraPtr algebra;
  Subspace ideal;
  std::vector<std::size_t> complement;  // coordinates of L kept in L/J

  Vec project(std::span<const Scalar> v) const;
  Element project(const Element& x) const;
  // Representative in L whose pivot-column coordinates are zero.
  Element lift(const Element& x) const;
};

Quotient quotient(const Subspace& ideal);

// Fitting null component of ad x: kernel of (ad x)^dim.
Subspace engel_set(const Element& x);
// Elements lying in E_L(x) for every x in L.
Subspace engel_elements(const AlgebraPtr& algebra, std::uint64_t max_elements = kDefaultMaxElements);

Subspace nilradical(const AlgebraPtr& algebra, std::uint64_t max_subspaces = kDefaultMaxSubspaces);
// Largest solvable ideal, same brute force as nilradical.
Subspace solvable_radical(const AlgebraPtr& algebra, std::uint64_t max_subspaces = kDefaultMaxSubspaces);

struct DirectSum {
  AlgebraPtr algebra;
  AlgebraPtr left;
  AlgebraPtr right;

  Element embed_left(const Element& a) const;
  Element embed_right(const Element& b) const;
  Element pair(const Element& a, const Element& b) const;
  std::pair<Element, Element> split(const Element& x) const;
};

DirectSum direct_sum(const AlgebraPtr& left, const AlgebraPtr& right);

std::vector<Element> enumerate_elements(const AlgebraPtr& algebra, std::uint64_t max_elements = kDefaultMaxElements);
std::vector<Subspace> enumerate_subalgebras(const AlgebraPtr& algebra,
                                            std::uint64_t max_subspaces = kDefaultMaxSubspaces);
std::vector<Subspace> enumerate_ideals(const AlgebraPtr& algebra, std::uint64_t max_subspaces = kDefaultMaxSubspaces);
// Subalgebras in `candidates` (or all subalgebras) that are nilpotent, contain x,
// and are maximal under inclusion among such.
std::vector<Subspace> maximal_nilpotent_subalgebras(const Element& through,
                                                    std::uint64_t max_subspaces = kDefaultMaxSubspaces);
std::vector<Subspace> maximal_nilpotent_subalgebras(const Element& through, std::span<const Subspace> subalgebras);

namespace detail {

// Closes the span held in `basis` under the bracket of `algebra`.
void close_under_bracket(const LieAlgebra& algebra, EchelonBasis& basis);
// Lower central series test on an already bracket-closed basis.
bool is_nilpotent_closed(const LieAlgebra& algebra, const std::vector<Vec>& basis);

}  // namespace detail

}  // namespace lienil
