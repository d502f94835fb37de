#include "lienil/structure.hpp"

#include <algorithm>
#include <set>

#include "lienil/error.hpp"

namespace lienil {

namespace detail {

void close_under_bracket(const LieAlgebra& algebra, EchelonBasis& basis) {
  const Field& f = algebra.F();
  std::vector<Vec> gens = basis.rows();
  Vec product(algebra.dim());
  for (std::size_t t = 0; t < gens.size(); ++t) {
    for (std::size_t s = 0; s < t; ++s) {
      algebra.bracket_into(gens[s], gens[t], product);
      if (basis.insert(f, product)) gens.push_back(product);
      if (basis.rank() == algebra.dim()) return;
    }
  }
}

bool is_nilpotent_closed(const LieAlgebra& algebra, const std::vector<Vec>& basis) {
  const Field& f = algebra.F();
  std::vector<Vec> current = basis;
  std::size_t current_rank = basis.size();
  Vec product(algebra.dim());
  while (current_rank > 0) {
    EchelonBasis next(algebra.dim());
    for (const auto& t : current) {
      for (const auto& s : basis) {
        algebra.bracket_into(t, s, product);
        next.insert(f, product);
      }
      // Terms only shrink; an equal-rank term means the series has stabilised.
      if (next.rank() == current_rank) return false;
    }
    if (next.rank() == 0) return true;
    current = next.rows();
    current_rank = next.rank();
  }
  return true;
}

}  // namespace detail

namespace {

Subspace from_echelon(const AlgebraPtr& algebra, const EchelonBasis& e) { return {algebra, e.to_matrix()}; }

void require_subalgebra(const Subspace& s, const char* op) {
  if (!is_subalgebra(s)) throw NotASubalgebra(std::string(op) + ": subspace is not closed under the bracket");
}

}  // namespace

Subspace bracket_space(const Subspace& s, const Subspace& t) {
  require_same_algebra(s.algebra(), t.algebra());
  const LieAlgebra& alg = *s.algebra();
  EchelonBasis out(alg.dim());
  Vec product(alg.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) {
      alg.bracket_into(s.basis().row(i), t.basis().row(j), product);
      out.insert(alg.F(), product);
    }
  return from_echelon(s.algebra(), out);
}

bool is_subalgebra(const Subspace& s) {
  const LieAlgebra& alg = *s.algebra();
  Vec product(alg.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      alg.bracket_into(s.basis().row(i), s.basis().row(j), product);
      if (!s.contains(product)) return false;
    }
  return true;
}

bool is_ideal(const Subspace& s) {
  const LieAlgebra& alg = *s.algebra();
  Vec product(alg.dim());
  Vec basis(alg.dim(), 0);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      basis[j] = 1;
      alg.bracket_into(s.basis().row(i), basis, product);
      basis[j] = 0;
      if (!s.contains(product)) return false;
    }
  return true;
}

Subspace subalgebra_closure(const AlgebraPtr& algebra, std::span<const Vec> generators) {
  EchelonBasis basis(algebra->dim());
  for (const auto& g : generators) {
    if (g.size() != algebra->dim()) throw InvalidArgument("generator length does not match dimension");
    basis.insert(algebra->F(), g);
  }
  detail::close_under_bracket(*algebra, basis);
  return from_echelon(algebra, basis);
}

Subspace subalgebra_closure(std::span<const Element> generators) {
  if (generators.empty()) throw InvalidArgument("subalgebra closure needs at least one generator");
  std::vector<Vec> vs;
  for (const auto& g : generators) {
    require_same_algebra(generators.front().algebra(), g.algebra());
    vs.push_back(g.coords());
  }
  return subalgebra_closure(generators.front().algebra(), vs);
}

std::vector<Subspace> lower_central_series(const Subspace& s) {
  require_subalgebra(s, "lower_central_series");
  std::vector<Subspace> series{s};
  while (!series.back().is_zero()) {
    Subspace next = bracket_space(series.back(), s);
    const bool stable = next.dim() == series.back().dim();
    if (stable) break;
    series.push_back(std::move(next));
  }
  return series;
}

NilpotencyInfo nilpotency(const Subspace& s) {
  const auto series = lower_central_series(s);
  if (!series.back().is_zero()) return {false, std::nullopt};
  return {true, series.size() - 1};
}

bool is_nilpotent(const Subspace& s) { return nilpotency(s).nilpotent; }
bool is_nilpotent(const AlgebraPtr& algebra) { return is_nilpotent(Subspace::whole(algebra)); }

std::vector<Subspace> derived_series(const Subspace& s) {
  require_subalgebra(s, "derived_series");
  std::vector<Subspace> series{s};
  while (!series.back().is_zero()) {
    Subspace next = bracket_space(series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const Subspace& s) { return derived_series(s).back().is_zero(); }
bool is_solvable(const AlgebraPtr& algebra) { return is_solvable(Subspace::whole(algebra)); }

Subspace centralizer(const Subspace& s) {
  const LieAlgebra& alg = *s.algebra();
  const std::size_t n = alg.dim();
  Matrix stacked(0, n);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Matrix ad = ad_matrix(alg, s.basis().row(i));
    for (std::size_t r = 0; r < n; ++r) stacked.append_row(ad.row(r));
  }
  if (stacked.rows() == 0) return Subspace::whole(s.algebra());
  return {s.algebra(), kernel(alg.F(), stacked)};
}

Subspace centralizer(const Element& x) {
  const std::vector<Vec> v{x.coords()};
  return centralizer(span(x.algebra(), v));
}

Subspace center(const AlgebraPtr& algebra) { return centralizer(Subspace::whole(algebra)); }

std::vector<Subspace> upper_central_series(const AlgebraPtr& algebra) {
  const LieAlgebra& alg = *algebra;
  const Field& f = alg.F();
  const std::size_t n = alg.dim();
  std::vector<Subspace> series{Subspace::zero(algebra)};
  while (true) {
    const Subspace& prev = series.back();
    // x in Z_i iff reduce_{Z_{i-1}}([x, b_j]) = 0 for every basis vector b_j.
    Matrix reduction(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      Vec e(n, 0);
      e[c] = 1;
      const Vec r = prev.reduce(e);
      for (std::size_t i = 0; i < n; ++i) reduction.at(i, c) = r[i];
    }
    Matrix stacked(0, n);
    Vec e(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = 1;
      const Matrix m = multiply(f, reduction, ad_matrix(alg, e));
      e[j] = 0;
      for (std::size_t r = 0; r < n; ++r) stacked.append_row(m.row(r));
    }
    Subspace next = n == 0 ? Subspace::zero(algebra) : Subspace(algebra, kernel(f, stacked));
    if (next.dim() == prev.dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subspace hypercenter(const AlgebraPtr& algebra) { return upper_central_series(algebra).back(); }

Vec Quotient::project(std::span<const Scalar> v) const {
  const Vec r = ideal.reduce(v);
  Vec out(complement.size());
  for (std::size_t i = 0; i < complement.size(); ++i) out[i] = r[complement[i]];
  return out;
}

Element Quotient::project(const Element& x) const {
  require_same_algebra(ideal.algebra(), x.algebra());
  return {algebra, project(std::span<const Scalar>(x.coords()))};
}

Element Quotient::lift(const Element& x) const {
  require_same_algebra(algebra, x.algebra());
  Vec out(ideal.algebra()->dim(), 0);
  for (std::size_t i = 0; i < complement.size(); ++i) out[complement[i]] = x.coords()[i];
  return {ideal.algebra(), std::move(out)};
}

Quotient quotient(const Subspace& ideal) {
  if (!is_ideal(ideal)) throw NotAnIdeal("quotient: subspace is not an ideal");
  const AlgebraPtr& base = ideal.algebra();
  const LieAlgebra& alg = *base;
  const std::size_t n = alg.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      complement.push_back(c);
      labels.push_back(alg.labels()[c] + "+J");
    }
  }
  const std::size_t m = complement.size();
  StructureConstants sc(m);
  Vec ea(n, 0), eb(n, 0), product(n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      ea[complement[a]] = 1;
      eb[complement[b]] = 1;
      alg.bracket_into(ea, eb, product);
      ea[complement[a]] = 0;
      eb[complement[b]] = 0;
      const Vec r = ideal.reduce(product);
      for (std::size_t k = 0; k < m; ++k) sc.set(a, b, k, r[complement[k]]);
    }
  auto q = make_algebra(alg.field(), alg.name() + "/J", std::move(labels), std::move(sc));
  return {std::move(q), ideal, std::move(complement)};
}

Subspace engel_set(const Element& x) {
  const LieAlgebra& alg = *x.algebra();
  const Field& f = alg.F();
  if (alg.dim() == 0) return Subspace::zero(x.algebra());
  return {x.algebra(), kernel(f, power(f, ad_matrix(x), alg.dim()))};
}

Subspace engel_elements(const AlgebraPtr& algebra, std::uint64_t max_elements) {
  const LieAlgebra& alg = *algebra;
  const Field& f = alg.F();
  const std::size_t n = alg.dim();
  Subspace result = Subspace::whole(algebra);
  // Kernels over the basis first; this already cuts most candidates.
  for (std::size_t i = 0; i < n && !result.is_zero(); ++i) {
    result = intersect(result, engel_set(Element::basis(algebra, i)));
  }
  const std::uint64_t count = alg.element_count(max_elements);
  Vec x(n);
  for (std::uint64_t idx = 1; idx < count && !result.is_zero(); ++idx) {
    alg.coords_of(idx, x);
    // E_L(lambda x) = E_L(x): visit one vector per line (leading coordinate 1).
    std::size_t lead = 0;
    while (x[lead] == 0) ++lead;
    if (x[lead] != 1) continue;
    const Matrix adn = power(f, ad_matrix(alg, x), n);
    bool inside = true;
    for (std::size_t r = 0; r < result.dim() && inside; ++r) inside = is_zero(apply(f, adn, result.basis().row(r)));
    if (!inside) result = intersect(result, Subspace(algebra, kernel(f, adn)));
  }
  return result;
}

namespace {

Subspace largest_ideal_with(const AlgebraPtr& algebra, std::uint64_t max_subspaces, bool (*property)(const Subspace&),
                            const char* what) {
  std::vector<Subspace> found;
  for_each_subspace(algebra, algebra->dim(), max_subspaces, [&](const Subspace& s) {
    if (is_ideal(s) && property(s)) found.push_back(s);
  });
  const auto best = std::max_element(found.begin(), found.end(),
                                     [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  for (const auto& s : found) {
    if (!best->contains(s)) throw Error(std::string(what) + " is not unique: found incomparable maximal ideals");
  }
  return *best;
}

}  // namespace

Subspace nilradical(const AlgebraPtr& algebra, std::uint64_t max_subspaces) {
  return largest_ideal_with(algebra, max_subspaces, [](const Subspace& s) { return is_nilpotent(s); }, "nilradical");
}

Subspace solvable_radical(const AlgebraPtr& algebra, std::uint64_t max_subspaces) {
  return largest_ideal_with(algebra, max_subspaces, [](const Subspace& s) { return is_solvable(s); }, "radical");
}

Element DirectSum::embed_left(const Element& a) const {
  require_same_algebra(left, a.algebra());
  Vec v(algebra->dim(), 0);
  std::copy(a.coords().begin(), a.coords().end(), v.begin());
  return {algebra, std::move(v)};
}

Element DirectSum::embed_right(const Element& b) const {
  require_same_algebra(right, b.algebra());
  Vec v(algebra->dim(), 0);
  std::copy(b.coords().begin(), b.coords().end(), v.begin() + static_cast<std::ptrdiff_t>(left->dim()));
  return {algebra, std::move(v)};
}

Element DirectSum::pair(const Element& a, const Element& b) const { return embed_left(a) + embed_right(b); }

std::pair<Element, Element> DirectSum::split(const Element& x) const {
  require_same_algebra(algebra, x.algebra());
  const auto mid = x.coords().begin() + static_cast<std::ptrdiff_t>(left->dim());
  return {Element(left, Vec(x.coords().begin(), mid)), Element(right, Vec(mid, x.coords().end()))};
}

DirectSum direct_sum(const AlgebraPtr& left, const AlgebraPtr& right) {
  if (!(left->F() == right->F())) {
    throw MismatchError("direct sum of algebras over GF(" + left->F().name() + ") and GF(" + right->F().name() + ")");
  }
  const std::size_t n1 = left->dim();
  const std::size_t n2 = right->dim();
  StructureConstants sc(n1 + n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) sc.set(i, j, k, left->structure_constants().get(i, j, k));
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k < n2; ++k) sc.set(n1 + i, n1 + j, n1 + k, right->structure_constants().get(i, j, k));

  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& l : left->labels()) labels.push_back(l);
  for (const auto& l : right->labels()) labels.push_back(l);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen.insert(labels[i]).second) {
      labels[i] += (i < n1 ? "_1" : "_2");
      seen.insert(labels[i]);
    }
  }

  // Block-diagonal matrices when both summands are matrix algebras.
  std::optional<std::vector<Matrix>> mb;
  if (left->matrix_basis() && right->matrix_basis() && n1 > 0 && n2 > 0) {
    const std::size_t r1 = left->matrix_basis()->front().rows();
    const std::size_t r2 = right->matrix_basis()->front().rows();
    std::vector<Matrix> blocks;
    for (const auto& m : *left->matrix_basis()) {
      Matrix b(r1 + r2, r1 + r2);
      for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t j = 0; j < r1; ++j) b.at(i, j) = m.at(i, j);
      blocks.push_back(std::move(b));
    }
    for (const auto& m : *right->matrix_basis()) {
      Matrix b(r1 + r2, r1 + r2);
      for (std::size_t i = 0; i < r2; ++i)
        for (std::size_t j = 0; j < r2; ++j) b.at(r1 + i, r1 + j) = m.at(i, j);
      blocks.push_back(std::move(b));
    }
    mb = std::move(blocks);
  }
  auto sum_alg = make_algebra(left->field(), left->name() + "+" + right->name(), std::move(labels), std::move(sc),
                              std::move(mb));
  return {std::move(sum_alg), left, right};
}

std::vector<Element> enumerate_elements(const AlgebraPtr& algebra, std::uint64_t max_elements) {
  const std::uint64_t count = algebra->element_count(max_elements);
  std::vector<Element> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(Element::from_index(algebra, i));
  return out;
}

std::vector<Subspace> enumerate_subalgebras(const AlgebraPtr& algebra, std::uint64_t max_subspaces) {
  std::vector<Subspace> out;
  for_each_subspace(algebra, algebra->dim(), max_subspaces, [&](const Subspace& s) {
    if (is_subalgebra(s)) out.push_back(s);
  });
  return out;
}

std::vector<Subspace> enumerate_ideals(const AlgebraPtr& algebra, std::uint64_t max_subspaces) {
  std::vector<Subspace> out;
  for_each_subspace(algebra, algebra->dim(), max_subspaces, [&](const Subspace& s) {
    if (is_ideal(s)) out.push_back(s);
  });
  return out;
}

std::vector<Subspace> maximal_nilpotent_subalgebras(const Element& through, std::span<const Subspace> subalgebras) {
  std::vector<Subspace> nilpotent;
  for (const auto& s : subalgebras) {
    if (s.contains(through) && is_nilpotent(s)) nilpotent.push_back(s);
  }
  std::vector<Subspace> maximal;
  for (const auto& s : nilpotent) {
    const bool dominated = std::any_of(nilpotent.begin(), nilpotent.end(), [&](const Subspace& t) {
      return t.dim() > s.dim() && t.contains(s);
    });
    if (!dominated) maximal.push_back(s);
  }
  return maximal;
}

std::vector<Subspace> maximal_nilpotent_subalgebras(const Element& through, std::uint64_t max_subspaces) {
  const auto subalgebras = enumerate_subalgebras(through.algebra(), max_subspaces);
  return maximal_nilpotent_subalgebras(through, subalgebras);
}

}  // namespace lienil
