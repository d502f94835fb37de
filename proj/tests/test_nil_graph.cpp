#include <doctest.h>

#include <random>

#include <json.hpp>

#include "lienil/catalog.hpp"
#include "lienil/constructions.hpp"
#include "lienil/error.hpp"
#include "lienil/graph_checks.hpp"
#include "lienil/graph_export.hpp"
#include "lienil/structure.hpp"
#include "oracle.hpp"

using namespace lienil;

namespace {

std::vector<AlgebraPtr> catalog_algebras() {
  std::vector<AlgebraPtr> out;
  for (const auto& e : standard_catalog()) out.push_back(e.make());
  return out;
}

NilGraph arbitrary_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const auto alg = abelian(3, field_of_order(2));
  std::vector<std::uint64_t> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(i + 1);
  TriangularBits bits(n);
  for (auto [a, b] : edges) bits.set(a, b, true);
  return {alg, GraphKind::nilpotent, make_nil_set(alg, {0}), vertices, bits};
}

}  // namespace

TEST_CASE("t(2,F_2) graph and complement") {
  const auto alg = t(2, field_of_order(2));
  const NilGraph g = build(alg, GraphKind::nilpotent);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 3);
  CHECK(g.nil().members == std::vector<std::uint64_t>{0, 5});
  CHECK(is_bipartite(g));
  CHECK(!is_star(g));
  const auto s = components(g);
  CHECK(s.kappa == 3);
  CHECK(s.sizes == std::vector<std::size_t>{2, 2, 2});
  const NilGraph c = build(alg, GraphKind::complement);
  CHECK(c.vertex_count() == 6);
  CHECK(c.edge_count() == 12);
  CHECK(components(c).kappa == 1);
  CHECK(c.adjacency() == g.complement().adjacency());
}

TEST_CASE("t(2,F_3) graph") {
  const NilGraph g = build(t(2, field_of_order(3)), GraphKind::nilpotent);
  CHECK(g.vertex_count() == 24);
  CHECK(g.edge_count() == 60);
  const auto s = components(g);
  CHECK(s.kappa == 4);
  CHECK(s.sizes == std::vector<std::size_t>{6, 6, 6, 6});
  CHECK(s.regular_degree == 5u);
  CHECK(!is_bipartite(g));
  for (const auto& c : s.components) CHECK(c.complete);
}

TEST_CASE("memoized, naive and threaded builds agree; adjacency matches the set oracle") {
  for (const auto& alg : catalog_algebras()) {
    CAPTURE(alg->name());
    const NilGraph fast = build(alg, GraphKind::nilpotent);
    const NilGraph naive = build(alg, GraphKind::nilpotent, {.naive = true});
    const NilGraph threaded = build(alg, GraphKind::nilpotent, {.threads = 3});
    CHECK(fast.vertices() == naive.vertices());
    CHECK(fast.adjacency() == naive.adjacency());
    CHECK(fast.adjacency() == threaded.adjacency());
    CHECK(fast.vertex_count() + fast.nil().size() == alg->element_count(kDefaultMaxElements));
    if (alg->element_count(kDefaultMaxElements) <= 27) {
      for (std::size_t b = 1; b < fast.vertex_count(); ++b)
        for (std::size_t a = 0; a < b; ++a)
          REQUIRE(fast.adjacent(a, b) == oracle::pair_nilpotent(*alg, alg->coords_of(fast.vertices()[a]),
                                                                alg->coords_of(fast.vertices()[b])));
    }
  }
}

TEST_CASE("graph invariants on the catalog") {
  for (const auto& alg : catalog_algebras()) {
    CAPTURE(alg->name());
    const NilpotencyOracle o(alg);
    const NilGraph g = build(o, GraphKind::nilpotent);
    const NilGraph c = g.complement();
    const auto s = components(g);
    std::size_t total = 0;
    for (auto sz : s.sizes) total += sz;
    CHECK(total == g.vertex_count());
    CHECK(s.regular_degree.has_value() == is_regular(g));
    CHECK(!is_star(g));
    CHECK(g.edge_count() + c.edge_count() == TriangularBits::pairs(g.vertex_count()));
    for (std::size_t b = 1; b < g.vertex_count(); ++b)
      for (std::size_t a = 0; a < b; ++a) REQUIRE(g.adjacent(a, b) != c.adjacent(a, b));
    const Report r = verify_degree_formula(o, g);
    CAPTURE(r.to_text());
    CHECK(r.ok());
    CHECK(check_eulerian_obstruction(g).ok());
  }
}

TEST_CASE("adjacency is invariant under nonzero scalars") {
  for (const auto& alg : {t(2, field_of_order(5)), sl(2, field_of_order(5)), t(2, field_of_order(4))}) {
    const NilGraph g = build(alg, GraphKind::nilpotent);
    const Field& f = alg->F();
    for (std::size_t a = 0; a < g.vertex_count(); a += 3)
      for (std::size_t b = 0; b < g.vertex_count(); b += 5) {
        if (a == b) continue;
        for (Scalar l = 1; l < f.order(); ++l)
          for (Scalar m = 1; m < f.order(); ++m) {
            auto x = alg->coords_of(g.vertices()[a]);
            auto y = alg->coords_of(g.vertices()[b]);
            for (auto& v : x) v = f.mul(v, l);
            for (auto& v : y) v = f.mul(v, m);
            const auto ra = g.rank_of(alg->index_of(x)), rb = g.rank_of(alg->index_of(y));
            REQUIRE(ra);
            REQUIRE(rb);
            if (*ra != *rb) REQUIRE(g.adjacent(*ra, *rb) == g.adjacent(a, b));
          }
      }
  }
}

TEST_CASE("eulerian agrees with a brute-force circuit search") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::bernoulli_distribution coin(0.3 + 0.1 * (trial % 5));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (coin(rng)) {
          edges.emplace_back(a, b);
          adj[a][b] = adj[b][a] = true;
        }
    const NilGraph g = arbitrary_graph(n, edges);
    CAPTURE(n);
    CAPTURE(edges.size());
    CHECK(is_eulerian(g) == oracle::has_euler_circuit(adj));
  }
  CHECK(!is_eulerian(arbitrary_graph(0, {})));
}

TEST_CASE("star, bipartite and connectivity predicates") {
  CHECK(is_star(arbitrary_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK(is_star(arbitrary_graph(2, {{0, 1}})));
  CHECK(!is_star(arbitrary_graph(1, {})));
  CHECK(!is_star(arbitrary_graph(4, {{0, 1}, {1, 2}, {2, 3}})));
  CHECK(is_bipartite(arbitrary_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  CHECK(!is_bipartite(arbitrary_graph(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK(is_connected(arbitrary_graph(3, {{0, 1}, {1, 2}})));
  CHECK(!is_connected(arbitrary_graph(3, {{0, 1}})));
  CHECK(!is_connected(arbitrary_graph(0, {})));
  const auto s = components(arbitrary_graph(5, {{0, 1}, {1, 2}, {3, 4}}));
  CHECK(s.kappa == 2);
  CHECK(!s.components[0].complete);
  CHECK(s.components[1].complete);
  CHECK(!s.regular_degree);
}

TEST_CASE("cliques of nilpotent subalgebras") {
  for (const auto& alg : {t(2, field_of_order(2)), t(2, field_of_order(3))}) {
    const NilGraph g = build(alg, GraphKind::nilpotent);
    std::size_t tested = 0;
    for (const auto& sub : enumerate_subalgebras(alg)) {
      if (!is_nilpotent(sub)) continue;
      bool inside = true;
      for (auto idx : sub.element_indices()) inside = inside && g.nil().contains(idx);
      if (inside) {
        CHECK_THROWS_AS(clique_of_subalgebra(g, sub), PreconditionFailed);
        continue;
      }
      CHECK(clique_of_subalgebra(g, sub).is_clique);
      ++tested;
    }
    CHECK(tested > 0);
  }
  const auto t3 = t(2, field_of_order(3));
  const NilGraph g3 = build(t3, GraphKind::nilpotent);
  const auto u = span(t3, std::vector<Vec>{{1, 0, 0}, {1, 0, 1}});
  const Clique k = clique_of_subalgebra(g3, u);
  CHECK(k.vertices.size() == 6);
  CHECK(k.is_clique);
  CHECK(clique_lower_bound(g3) == 6);
  CHECK_THROWS_AS(clique_of_subalgebra(g3, Subspace::whole(t3)), PreconditionFailed);

  const auto t2 = t(2, field_of_order(2));
  const NilGraph g2 = build(t2, GraphKind::nilpotent);
  CHECK(clique_of_subalgebra(g2, nilradical(t2)).vertices.size() == 2);
}

TEST_CASE("t(2, F_q) component reports") {
  for (auto q : {2u, 3u, 4u, 5u}) {
    const Report r = check_t2_components(q);
    CAPTURE(r.to_text());
    CHECK(r.ok());
  }
  CHECK(check_t2_components(3, {.naive = true}).ok());
}

TEST_CASE("direct sum laws") {
  const auto f2 = field_of_order(2);
  const auto aff = two_dim_nonabelian(f2);
  const Report both = check_direct_sum_laws(aff, aff);
  CAPTURE(both.to_text());
  CHECK(both.ok());
  CHECK(both.find("connected when no summand is nilpotent"));
  const Report kappa = check_direct_sum_laws(t(2, f2), abelian(1, f2));
  CAPTURE(kappa.to_text());
  CHECK(kappa.ok());
  CHECK(components(build(direct_sum(t(2, f2), abelian(1, f2)).algebra, GraphKind::nilpotent)).kappa == 3);
  CHECK(check_direct_sum_laws(abelian(1, f2), t(2, f2)).ok());
  CHECK(check_direct_sum_laws(u(3, f2), abelian(1, f2)).ok());
}

TEST_CASE("disconnection from strongly self-centralizing subalgebras") {
  const auto aff = two_dim_nonabelian(field_of_order(3));
  CHECK(check_disconnection(span(aff, std::vector<Vec>{{1, 0}})).ok());
  const auto ex = three_dim_example(field_of_order(2));
  CHECK(check_disconnection(span(ex, std::vector<Vec>{{1, 0, 0}, {0, 1, 0}})).ok());
  const auto sl2 = sl(2, field_of_order(5));
  CHECK(check_disconnection(span(sl2, std::vector<Vec>{{0, 0, 1}})).ok());
  const auto t2 = t(2, field_of_order(3));
  CHECK_THROWS_AS(check_disconnection(span(t2, std::vector<Vec>{{1, 0, 1}})), PreconditionFailed);
}

TEST_CASE("exports") {
  const auto alg = t(2, field_of_order(2));
  const NilGraph g = build(alg, GraphKind::nilpotent);
  const auto doc = nlohmann::json::parse(to_json(g));
  CHECK(doc["schema"] == 1);
  CHECK(doc["vertices"].size() == 6);
  CHECK(doc["edges"].size() == 3);
  CHECK(doc["components"]["kappa"] == 3);
  CHECK(doc["nil"] == nlohmann::json::array({0, 5}));
  CHECK(to_csv(g) == "source,target\n1,4\n2,7\n3,6\n");
  const std::string dot = to_dot(g);
  CHECK(dot.find("v1 -- v4;") != std::string::npos);
  CHECK(dot.find("[label=\"[1 0;0 0]\"]") != std::string::npos);
  CHECK(to_dot(g) == to_dot(build(alg, GraphKind::nilpotent, {.naive = true})));
  CHECK(summary_line(build(t(2, field_of_order(3)), GraphKind::nilpotent),
                     components(build(t(2, field_of_order(3)), GraphKind::nilpotent))) ==
        "24 vertices, 60 edges, κ=4, sizes=[6,6,6,6], 5-regular");
  CHECK_THROWS_AS(parse_export_format("png"), InvalidArgument);
}

TEST_CASE("build caps") {
  CHECK_THROWS_AS(build(gl(2, field_of_order(3)), GraphKind::nilpotent, {.max_elements = 80}), CapExceeded);
  CHECK_NOTHROW(build(gl(2, field_of_order(3)), GraphKind::nilpotent, {.max_elements = 81}));
}
