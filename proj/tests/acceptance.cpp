// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lienil/catalog.hpp"
#include "lienil/constructions.hpp"
#include "lienil/error.hpp"
#include "lienil/graph_checks.hpp"
#include "lienil/structure.hpp"

using namespace lienil;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) detail << "failed: " << what << "; ";
    passed = passed && condition;
  }
};

std::vector<AlgebraPtr> catalog() {
  std::vector<AlgebraPtr> out;
  for (const auto& e : standard_catalog()) out.push_back(e.make());
  return out;
}

void criterion_t2(Outcome& o) {
  const auto start = Clock::now();
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const NilGraph g = build(t(2, field_of_order(q)), GraphKind::nilpotent);
    const auto s = components(g);
    o.require(s.kappa == q + 1, "kappa at q=" + std::to_string(q));
    for (const auto& c : s.components)
      o.require(c.complete && c.vertices.size() == q * (q - 1), "component shape at q=" + std::to_string(q));
    o.require(s.regular_degree == q * q - q - 1, "regularity at q=" + std::to_string(q));
  }
  const double small = seconds_since(start);
  o.require(small < 5.0, "q in {2,3,4,5} under 5 s");
  const auto start7 = Clock::now();
  const NilGraph g7 = build(t(2, field_of_order(7)), GraphKind::nilpotent);
  const auto s7 = components(g7);
  const double big = seconds_since(start7);
  o.require(g7.vertex_count() == 336 && s7.kappa == 8 && s7.regular_degree == 41u, "q=7 shape");
  o.require(big < 60.0, "q=7 under 60 s");
  o.detail << "q=2..5 in " << small << " s, q=7 in " << big << " s";
}

void criterion_figure(Outcome& o) {
  const auto alg = t(2, field_of_order(2));
  // Table 1 labels as upper triangular matrices [a b; 0 c], basis (E11, E12, E22).
  const std::map<int, Vec> table{{1, {0, 0, 1}}, {2, {0, 1, 0}}, {3, {0, 1, 1}},
                                 {4, {1, 0, 0}}, {5, {1, 1, 0}}, {6, {1, 1, 1}}};
  std::map<std::uint64_t, int> label_of;
  for (const auto& [label, coords] : table) label_of[alg->index_of(coords)] = label;
  const NilGraph g = build(alg, GraphKind::nilpotent);
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    int x = label_of.at(g.vertices()[a]), y = label_of.at(g.vertices()[b]);
    edges.emplace(std::min(x, y), std::max(x, y));
  }
  o.require(g.vertex_count() == 6 && label_of.size() == 6, "six labelled vertices");
  o.require(edges == std::set<std::pair<int, int>>{{1, 4}, {3, 5}, {2, 6}}, "edges {1,4},{3,5},{2,6}");
  const NilGraph c = build(alg, GraphKind::complement);
  o.require(c.vertex_count() == 6 && c.edge_count() == 12 && components(c).kappa == 1, "complement 12 edges, one component");
  o.detail << "edges";
  for (auto [x, y] : edges) o.detail << " {" << x << "," << y << "}";
  o.detail << ", complement " << c.edge_count() << " edges";
}

void criterion_degree(Outcome& o) {
  std::size_t vertices = 0;
  for (const auto& alg : catalog()) {
    const NilpotencyOracle oracle(alg);
    const NilGraph g = build(oracle, GraphKind::nilpotent);
    const Report r = verify_degree_formula(oracle, g);
    o.require(r.ok(), r.to_text());
    vertices += g.vertex_count();
  }
  o.detail << vertices << " vertices over " << standard_catalog().size() << " algebras";
}

void criterion_chain(Outcome& o) {
  for (const auto& alg : catalog()) {
    const Report r = check_containment_chain(alg);
    o.require(r.ok(), r.to_text());
  }
  o.detail << standard_catalog().size() << " algebras";
}

void criterion_sums(Outcome& o) {
  const auto start = Clock::now();
  std::size_t connected = 0, kappa = 0, pairs = 0;
  for (const auto& [a, b] : direct_sum_pairs(1024)) {
    const Report r = check_direct_sum_laws(a.make(), b.make());
    o.require(r.ok(), r.to_text());
    o.require(r.find("nil(L1+L2) = nil(L1)+nil(L2)") != nullptr, "nil law checked");
    connected += r.find("connected when no summand is nilpotent") != nullptr;
    kappa += r.find("kappa unchanged by a nilpotent summand") != nullptr;
    ++pairs;
  }
  o.require(connected > 0 && kappa > 0, "both graph laws exercised");
  o.detail << pairs << " pairs (" << connected << " connectivity, " << kappa << " kappa) in " << seconds_since(start)
           << " s";
}

void criterion_ssc(Outcome& o) {
  const std::vector<Subspace> cases{
      span(two_dim_nonabelian(field_of_order(3)), std::vector<Vec>{{0, 1}}),
      span(three_dim_example(field_of_order(2)), std::vector<Vec>{{1, 0, 0}, {0, 1, 0}}),
      span(sl(2, field_of_order(3)), std::vector<Vec>{{0, 0, 1}}),
  };
  for (const auto& u : cases) {
    o.require(is_strongly_self_centralizing(u), u.algebra()->name() + " strongly self-centralizing");
    const Report r = check_disconnection(u);
    o.require(r.ok(), r.to_text());
  }
  o.detail << cases.size() << " examples";
}

void criterion_oracle(Outcome& o) {
  std::uint64_t edges = 0;
  for (const auto& alg : catalog()) {
    const NilGraph fast = build(alg, GraphKind::nilpotent);
    const NilGraph naive = build(alg, GraphKind::nilpotent, {.naive = true});
    o.require(fast.nil() == naive.nil() && fast.vertices() == naive.vertices() &&
                  fast.adjacency() == naive.adjacency(),
              alg->name());
    edges += fast.edge_count();
  }
  o.detail << edges << " edges compared";
}

void criterion_properties(Outcome& o) {
  std::size_t constructions = 0;
  for (auto q : {2u, 3u, 4u, 5u}) {
    const auto f = field_of_order(q);
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& alg : {gl(n, f), t(n, f), u(n, f), sl(n, f)}) {
        o.require(validate(*alg).ok(), alg->name() + " validates");
        ++constructions;
      }
    for (const auto& alg : {two_dim_nonabelian(f), three_dim_example(f), abelian(2, f)}) {
      o.require(validate(*alg).ok(), alg->name() + " validates");
      ++constructions;
    }
  }
  for (const auto& alg : catalog()) o.require(validate(*alg).ok(), alg->name() + " validates");

  std::size_t ideals = 0;
  for (const auto& e : nilpotent_catalog()) {
    const auto alg = e.make();
    o.require(is_nilpotent(alg), alg->name() + " nilpotent");
    const Subspace z = center(alg);
    for (const auto& ideal : enumerate_ideals(alg)) {
      if (ideal.is_zero()) continue;
      o.require(!intersect(ideal, z).is_zero(), "ideal meets center in " + alg->name());
      ++ideals;
    }
  }

  const auto t2 = t(2, field_of_order(2));
  const Quotient qt = quotient(span(t2, std::vector<Vec>{{1, 0, 1}}));
  const auto elems = enumerate_elements(t2);
  for (const auto& x : elems)
    for (const auto& y : elems)
      o.require(qt.project(bracket(x, y)) == bracket(qt.project(x), qt.project(y)), "quotient homomorphism");

  for (const auto& alg : catalog()) o.require(!is_star(build(alg, GraphKind::nilpotent)), alg->name() + " not a star");

  std::size_t cliques = 0;
  for (auto q : {2u, 3u}) {
    const auto alg = t(2, field_of_order(q));
    const NilGraph g = build(alg, GraphKind::nilpotent);
    for (const auto& sub : enumerate_subalgebras(alg)) {
      if (!is_nilpotent(sub)) continue;
      bool inside = true;
      for (auto idx : sub.element_indices()) inside = inside && g.nil().contains(idx);
      if (inside) continue;
      o.require(clique_of_subalgebra(g, sub).is_clique, "clique of " + sub.to_string());
      ++cliques;
    }
  }
  o.detail << constructions << " constructions, " << ideals << " ideals, " << elems.size() * elems.size()
           << " bracket pairs, " << cliques << " cliques";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"t(2,F_q) components, completeness and regularity", criterion_t2},
      {"t(2,F_2) labelled edge set and complement", criterion_figure},
      {"degree formula on the catalog", criterion_degree},
      {"Z*(L) in nil(L) in E(L) on the catalog", criterion_chain},
      {"direct-sum laws", criterion_sums},
      {"strongly self-centralizing examples", criterion_ssc},
      {"memoized build equals naive build", criterion_oracle},
      {"property suite", criterion_properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.passed;
    std::cout << "criterion " << i + 1 << ": " << (o.passed ? "PASS" : "FAIL") << " - " << criteria[i].first << " ("
              << o.detail.str() << ")" << std::endl;
  }
  return failures;
}
