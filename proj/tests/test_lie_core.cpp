#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lienil/algebra_io.hpp"
#include "lienil/constructions.hpp"
#include "lienil/error.hpp"
#include "lienil/structure.hpp"
#include "oracle.hpp"

using namespace lienil;

namespace {

std::vector<AlgebraPtr> matrix_algebras() {
  std::vector<AlgebraPtr> out;
  for (auto q : {2u, 3u, 4u}) {
    const auto f = field_of_order(q);
    for (std::size_t n : {1u, 2u, 3u}) {
      out.push_back(t(n, f));
      out.push_back(u(n, f));
      if (n <= 2 || q == 2) out.push_back(gl(n, f));
      if (n >= 2) out.push_back(sl(n, f));
    }
  }
  return out;
}

Subspace span_of(const AlgebraPtr& alg, std::vector<Vec> vs) { return span(alg, vs); }

}  // namespace

TEST_CASE("matrix constructions match commutators of their matrices") {
  for (const auto& alg : matrix_algebras()) {
    CAPTURE(alg->name());
    CHECK(validate(*alg).ok());
    if (alg->dim() == 0) continue;
    REQUIRE(alg->matrix_basis());
    const Field& f = alg->F();
    const auto elems = oracle::all_elements(*alg);
    const std::size_t step = elems.size() > 64 ? elems.size() / 64 : 1;
    for (std::size_t i = 0; i < elems.size(); i += step)
      for (std::size_t j = 0; j < elems.size(); j += step) {
        const auto& x = elems[i];
        const auto& y = elems[j];
        const Vec b = alg->bracket(x, y);
        REQUIRE(oracle::to_matrix(*alg, b) ==
                oracle::commutator(f, oracle::to_matrix(*alg, x), oracle::to_matrix(*alg, y)));
        REQUIRE(b == oracle::raw_bracket(*alg, x, y));
      }
  }
}

TEST_CASE("dimensions and names") {
  const auto f3 = field_of_order(3);
  CHECK(gl(3, f3)->dim() == 9);
  CHECK(t(3, f3)->dim() == 6);
  CHECK(u(3, f3)->dim() == 3);
  CHECK(sl(3, f3)->dim() == 8);
  CHECK(t(2, f3)->name() == "t(2,GF(3))");
  CHECK(t(2, field_of_order(4))->name() == "t(2,GF(2^2))");
  CHECK(t(2, f3)->labels() == std::vector<std::string>{"E11", "E12", "E22"});
  CHECK(sl(2, f3)->labels() == std::vector<std::string>{"E12", "E21", "H1"});
}

TEST_CASE("abstract examples") {
  for (auto q : {2u, 3u, 5u}) {
    const auto f = field_of_order(q);
    const auto a = two_dim_nonabelian(f);
    CHECK(validate(*a).ok());
    CHECK(a->bracket(Vec{1, 0}, Vec{0, 1}) == Vec{0, 1});
    const auto e = three_dim_example(f);
    CHECK(validate(*e).ok());
    CHECK(e->bracket(Vec{1, 0, 0}, Vec{0, 0, 1}) == Vec{1, 0, 0});
    CHECK(e->bracket(Vec{0, 1, 0}, Vec{0, 0, 1}) == Vec{0, 1, 0});
    CHECK(is_zero(e->bracket(Vec{1, 0, 0}, Vec{0, 1, 0})));
    CHECK(validate(*abelian(3, f)).ok());
  }
}

TEST_CASE("validate reports the first violation") {
  const auto f = field_of_order(3);
  StructureConstants sc(3);
  sc.set(0, 0, 1, 1);
  CHECK(validate(*make_algebra(f, "bad", {"a", "b", "c"}, sc)).kind == ValidationReport::Kind::alternating);
  StructureConstants asym(2);
  asym.set(0, 1, 1, 1);
  auto r = validate(*make_algebra(f, "bad", {"a", "b"}, asym));
  CHECK(r.kind == ValidationReport::Kind::antisymmetry);
  CHECK(r.i == 1);
  CHECK(r.j == 2);
  // [a,b] = c, [b,c] = a, [a,c] = a fails Jacobi over GF(3).
  StructureConstants jac(3);
  jac.set_antisymmetric(*f, 0, 1, 2, 1);
  jac.set_antisymmetric(*f, 1, 2, 0, 1);
  jac.set_antisymmetric(*f, 0, 2, 0, 1);
  CHECK(validate(*make_algebra(f, "bad", {"a", "b", "c"}, jac)).kind == ValidationReport::Kind::jacobi);
}

TEST_CASE("element indices and arithmetic") {
  const auto alg = t(2, field_of_order(3));
  for (std::uint64_t i = 0; i < 27; ++i) CHECK(alg->index_of(alg->coords_of(i)) == i);
  CHECK(alg->coords_of(1 + 3 * 2 + 9 * 1) == Vec{1, 2, 1});
  const auto x = Element::from_index(alg, 5), y = Element::from_index(alg, 19);
  CHECK((x + y - y) == x);
  CHECK(x.scaled(2).scaled(2) == x);
  CHECK(bracket(x, y) == Element(alg, alg->bracket(x.coords(), y.coords())));
  CHECK_THROWS_AS(x + Element::basis(t(2, field_of_order(3)), 0), MismatchError);
  CHECK_THROWS_AS(alg->element_count(10), CapExceeded);
  CHECK(format_matrix(*alg, Vec{1, 2, 0}) == "[1 2;0 0]");
}

TEST_CASE("ad convention: column j of ad x is [b_j, x]") {
  const auto alg = gl(2, field_of_order(3));
  const auto x = Element::from_index(alg, 47);
  const Matrix ad = ad_matrix(x);
  for (std::size_t j = 0; j < alg->dim(); ++j) CHECK(ad.column(j) == bracket(Element::basis(alg, j), x).coords());
}

TEST_CASE("center, series and radicals") {
  const auto f2 = field_of_order(2);
  const auto t2 = t(2, f2);
  const auto identity = span_of(t2, {{1, 0, 1}});
  CHECK(center(t2) == identity);
  CHECK(hypercenter(t2) == identity);
  CHECK(!is_nilpotent(t2));
  CHECK(is_solvable(t2));
  CHECK(nilradical(t2) == span_of(t2, {{1, 0, 1}, {0, 1, 0}}));
  CHECK(solvable_radical(t2) == Subspace::whole(t2));

  const auto u3 = u(3, field_of_order(3));
  const auto info = nilpotency(Subspace::whole(u3));
  CHECK(info.nilpotent);
  CHECK(info.nilpotency_class == 2u);
  CHECK(upper_central_series(u3).back() == Subspace::whole(u3));
  CHECK(lower_central_series(Subspace::whole(u3)).back().is_zero());

  const auto sl2 = sl(2, field_of_order(5));
  CHECK(center(sl2).is_zero());
  CHECK(!is_solvable(sl2));
  CHECK(nilradical(sl2).is_zero());

  CHECK_THROWS_AS(nilpotency(span_of(sl2, {{1, 0, 0}, {0, 1, 0}})), NotASubalgebra);
  CHECK(centralizer(Element::basis(sl2, 2)) == span_of(sl2, {{0, 0, 1}}));
}

TEST_CASE("engel sets") {
  const auto t2 = t(2, field_of_order(3));
  // ad E12 is nilpotent, so its Engel set is everything.
  CHECK(engel_set(Element::basis(t2, 1)) == Subspace::whole(t2));
  CHECK(engel_elements(t2) == span_of(t2, {{1, 0, 1}}));
}

TEST_CASE("subalgebra closure agrees with the set oracle") {
  for (const auto& alg : {t(2, field_of_order(3)), sl(2, field_of_order(3)), gl(2, field_of_order(2))}) {
    const auto elems = oracle::all_elements(*alg);
    for (std::size_t i = 0; i < elems.size(); i += 5)
      for (std::size_t j = 0; j < elems.size(); j += 7) {
        const std::vector<Vec> gens{elems[i], elems[j]};
        const auto closed = subalgebra_closure(alg, gens);
        const auto expected = oracle::generated(*alg, gens);
        std::set<Vec> got;
        for (auto idx : closed.element_indices()) got.insert(alg->coords_of(idx));
        CHECK(got == expected);
        CHECK(is_nilpotent(closed) == oracle::set_is_nilpotent(*alg, expected));
      }
  }
}

TEST_CASE("ideals of nilpotent algebras meet the center") {
  for (const auto& alg : {u(3, field_of_order(2)), u(3, field_of_order(3)), u(4, field_of_order(2)),
                          abelian(2, field_of_order(2))}) {
    const Subspace z = center(alg);
    for (const auto& ideal : enumerate_ideals(alg)) {
      if (ideal.is_zero()) continue;
      CHECK(!intersect(ideal, z).is_zero());
    }
  }
}

TEST_CASE("quotient projection is a homomorphism") {
  const auto t2 = t(2, field_of_order(2));
  const auto qt = quotient(span_of(t2, {{1, 0, 1}}));
  REQUIRE(qt.algebra->dim() == 2);
  CHECK(validate(*qt.algebra).ok());
  const auto elems = enumerate_elements(t2);
  for (const auto& x : elems) {
    CHECK(qt.project(qt.lift(qt.project(x))) == qt.project(x));
    for (const auto& y : elems) CHECK(qt.project(bracket(x, y)) == bracket(qt.project(x), qt.project(y)));
  }
  CHECK_THROWS_AS(quotient(span_of(t2, {{1, 0, 0}})), NotAnIdeal);
}

TEST_CASE("direct sums bracket component-wise") {
  const auto f = field_of_order(3);
  const auto ds = direct_sum(two_dim_nonabelian(f), t(2, f));
  CHECK(ds.algebra->dim() == 5);
  CHECK(validate(*ds.algebra).ok());
  const auto a = enumerate_elements(ds.left), b = enumerate_elements(ds.right);
  for (std::size_t i = 0; i < a.size(); i += 2)
    for (std::size_t j = 0; j < b.size(); j += 4) {
      const auto x = ds.pair(a[i], b[j]);
      const auto y = ds.pair(a[(i + 3) % a.size()], b[(j + 5) % b.size()]);
      const auto [l, r] = ds.split(bracket(x, y));
      CHECK(l == bracket(a[i], a[(i + 3) % a.size()]));
      CHECK(r == bracket(b[j], b[(j + 5) % b.size()]));
      CHECK(ds.pair(a[i], b[j]).index() == a[i].index() + 9 * b[j].index());
    }
  CHECK_THROWS_AS(direct_sum(t(2, f), t(2, field_of_order(2))), MismatchError);
}

TEST_CASE("algebra expression grammar") {
  const auto f = field_of_order(2);
  CHECK(parse_algebra_expr("t:2", f)->dim() == 3);
  CHECK(parse_algebra_expr("u:3+t:2", f)->dim() == 6);
  CHECK(parse_algebra_expr("aff1+aff1+ab:1", f)->dim() == 5);
  CHECK_THROWS_AS(parse_algebra_expr("q:2", f), InvalidArgument);
  CHECK_THROWS_AS(parse_algebra_expr("t:x", f), InvalidArgument);
  CHECK_THROWS_AS(parse_algebra_expr("", f), InvalidArgument);
  CHECK_THROWS_AS(parse_algebra_expr("t:2", nullptr), InvalidArgument);
}

TEST_CASE("algebra files round-trip") {
  const auto original = three_dim_example(field_of_order(5));
  const std::string text = write_algebra_text(*original);
  const auto back = parse_algebra_text(text, "copy");
  CHECK(back->structure_constants() == original->structure_constants());
  CHECK(back->labels() == original->labels());

  const std::string path = "lie_core_roundtrip.alg";
  { std::ofstream(path) << text; }
  const auto loaded = parse_algebra_expr("file:" + path, field_of_order(5));
  CHECK(loaded->structure_constants() == original->structure_constants());
  CHECK_THROWS_AS(parse_algebra_expr("file:" + path, field_of_order(3)), InvalidArgument);
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_algebra_text("field 3^1\ndim 2\nsc 1 2 2 1\nsc 2 1 2 1\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_algebra_text("field 3^1\ndim 2\nsc 1 1 2 1\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_algebra_text("dim 2\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_algebra_text("field 3^1\ndim 3\nsc 1 2 3 1\nsc 2 3 1 1\nsc 1 3 1 1\n"), InvalidArgument);
  const auto ok = parse_algebra_text("# aff1\nfield 3^1\ndim 2\nlabels x y\nsc 1 2 2 1\n");
  CHECK(ok->bracket(Vec{0, 1}, Vec{1, 0}) == Vec{0, 2});
}
