#include "lienil/graph_checks.hpp"

#include <algorithm>
#include <sstream>

#include "lienil/constructions.hpp"
#include "lienil/error.hpp"
#include "lienil/structure.hpp"

namespace lienil {

namespace {

std::string coords_text(const LieAlgebra& alg, std::uint64_t index) { return format_coords(alg, alg.coords_of(index)); }

std::vector<std::uint64_t> sorted_members(const Subspace& s) {
  auto members = s.element_indices();
  std::sort(members.begin(), members.end());
  return members;
}

void require_nilpotent_kind(const NilGraph& g) {
  if (g.kind() != GraphKind::nilpotent) throw PreconditionFailed("expected the nilpotent graph, not its complement");
}

// t[a * n + b] = <a, b> nilpotent, over all element indices of one algebra.
std::vector<std::uint8_t> pair_table(const NilpotencyOracle& oracle, std::uint64_t n) {
  std::vector<std::uint8_t> t(n * n, 1);
  for (std::uint64_t b = 1; b < n; ++b)
    for (std::uint64_t a = 1; a < b; ++a) t[a * n + b] = t[b * n + a] = oracle.pair_is_nilpotent(a, b);
  return t;
}

}  // namespace

Report verify_degree_formula(const NilpotencyOracle& oracle, const NilGraph& g) {
  require_nilpotent_kind(g);
  const LieAlgebra& alg = *g.algebra();
  Report report("degree formula on " + alg.name());
  std::size_t bad = 0;
  std::string witness;
  for (std::size_t r = 0; r < g.vertex_count(); ++r) {
    const auto h = alg.coords_of(g.vertices()[r]);
    const std::size_t nil_h = nil_of_element(oracle, h).size();
    const std::size_t expected = nil_h - g.nil().size() - 1;
    if (g.degree(r) != expected) {
      if (bad++ == 0) {
        std::ostringstream os;
        os << "h=" << format_coords(alg, h) << " deg=" << g.degree(r) << " |nil_L(h)|=" << nil_h
           << " |nil(L)|=" << g.nil().size();
        witness = os.str();
      }
    }
  }
  report.add("deg(h) = |nil_L(h)| - |nil(L)| - 1", bad == 0,
             bad == 0 ? std::to_string(g.vertex_count()) + " vertices"
                      : std::to_string(bad) + " violations, first " + witness);
  return report;
}

Report verify_degree_formula(const NilGraph& g) { return verify_degree_formula(NilpotencyOracle(g.algebra()), g); }

Clique clique_of_subalgebra(const NilGraph& g, const Subspace& u) {
  require_nilpotent_kind(g);
  if (u.algebra() != g.algebra()) throw MismatchError("subspace and graph belong to different algebras");
  if (!is_subalgebra(u) || !is_nilpotent(u)) throw PreconditionFailed(u.to_string() + " is not a nilpotent subalgebra");
  Clique out;
  for (auto idx : sorted_members(u))
    if (auto r = g.rank_of(idx)) out.vertices.push_back(*r);
  if (out.vertices.empty()) throw PreconditionFailed(u.to_string() + " is contained in nil(L)");
  out.is_clique = true;
  for (std::size_t i = 0; i < out.vertices.size() && out.is_clique; ++i)
    for (std::size_t j = i + 1; j < out.vertices.size() && out.is_clique; ++j)
      out.is_clique = g.adjacent(out.vertices[i], out.vertices[j]);
  return out;
}

std::size_t clique_lower_bound(const NilGraph& g, std::uint64_t max_subspaces) {
  require_nilpotent_kind(g);
  std::size_t best = 0;
  for (const auto& u : enumerate_subalgebras(g.algebra(), max_subspaces)) {
    if (!is_nilpotent(u)) continue;
    std::size_t outside = 0;
    for (auto idx : u.element_indices())
      if (!g.nil().contains(idx)) ++outside;
    best = std::max(best, outside);
  }
  return best;
}

Report check_t2_components(std::uint64_t q, const BuildOptions& options) {
  const auto alg = t(2, field_of_order(q));
  Report report(alg->name());
  const NilpotencyOracle oracle(alg, !options.naive);
  const NilGraph g = options.naive ? build(alg, GraphKind::nilpotent, options) : build(oracle, GraphKind::nilpotent, options);
  const auto summary = components(g);

  report.add("|V| = q^3 - q", g.vertex_count() == q * q * q - q, std::to_string(g.vertex_count()) + " vertices");
  report.add("kappa = q + 1", summary.kappa == q + 1, "kappa=" + std::to_string(summary.kappa));
  const std::size_t order = q * q - q;
  bool complete = true;
  for (const auto& c : summary.components) complete = complete && c.complete && c.vertices.size() == order;
  report.add("every component is K_{q^2-q}", complete && summary.kappa > 0, "order " + std::to_string(order));
  report.add("(q^2-q-1)-regular", summary.regular_degree == order - 1,
             summary.regular_degree ? "degree " + std::to_string(*summary.regular_degree) : "not regular");

  std::vector<NilSet> reps;
  for (const auto& c : summary.components) reps.push_back(nil_of_element(oracle, alg->coords_of(g.vertices()[c.vertices.front()])));
  std::string witness;
  for (std::size_t i = 0; i < reps.size() && witness.empty(); ++i)
    for (std::size_t j = i + 1; j < reps.size() && witness.empty(); ++j) {
      std::vector<std::uint64_t> common;
      std::set_intersection(reps[i].members.begin(), reps[i].members.end(), reps[j].members.begin(),
                            reps[j].members.end(), std::back_inserter(common));
      if (common != g.nil().members) witness = "components " + std::to_string(i) + " and " + std::to_string(j);
    }
  report.add("nil_L(x) and nil_L(y) meet in nil(L) across components", witness.empty(),
             witness.empty() ? std::to_string(reps.size()) + " representatives" : witness);
  report.merge(verify_degree_formula(oracle, g));
  return report;
}

Report check_direct_sum_laws(const AlgebraPtr& l1, const AlgebraPtr& l2, const BuildOptions& options) {
  const DirectSum ds = direct_sum(l1, l2);
  const AlgebraPtr& s = ds.algebra;
  Report report(s->name());
  const std::uint64_t n1 = l1->element_count(options.max_elements);
  const std::uint64_t n2 = l2->element_count(options.max_elements);
  s->element_count(options.max_elements);

  const NilpotencyOracle o1(l1), o2(l2);
  BuildOptions memo = options;
  memo.naive = false;
  const NilGraph g1 = build(o1, GraphKind::nilpotent, memo);
  const NilGraph g2 = build(o2, GraphKind::nilpotent, memo);
  const NilGraph gs = build(s, GraphKind::nilpotent, memo);

  std::vector<std::uint64_t> predicted_nil;
  for (auto a : g1.nil().members)
    for (auto b : g2.nil().members) predicted_nil.push_back(a + n1 * b);
  std::sort(predicted_nil.begin(), predicted_nil.end());
  report.add("nil(L1+L2) = nil(L1)+nil(L2)", predicted_nil == gs.nil().members,
             std::to_string(gs.nil().size()) + " vs " + std::to_string(predicted_nil.size()) + " elements");

  const auto p1 = pair_table(o1, n1);
  const auto p2 = pair_table(o2, n2);
  auto predicted = [&](std::uint64_t x, std::uint64_t y) {
    return p1[(x % n1) * n1 + y % n1] && p2[(x / n1) * n2 + y / n1];
  };
  std::uint64_t checked = 0;
  std::string witness;
  auto mismatch = [&](std::uint64_t x, std::uint64_t y, bool actual) {
    if (witness.empty())
      witness = coords_text(*s, x) + " and " + coords_text(*s, y) + (actual ? " adjacent" : " not adjacent");
  };
  const auto& vs = gs.vertices();
  for (std::size_t j = 1; j < vs.size(); ++j)
    for (std::size_t i = 0; i < j; ++i, ++checked)
      if (gs.adjacent(i, j) != predicted(vs[i], vs[j])) mismatch(vs[i], vs[j], gs.adjacent(i, j));
  for (auto x : gs.nil().members)
    for (std::uint64_t y = 0; y < n1 * n2; ++y, ++checked)
      if (!predicted(x, y)) mismatch(x, y, true);
  report.add("adjacency is component-wise", witness.empty(),
             witness.empty() ? std::to_string(checked) + " pairs" : witness);

  const bool nil1 = is_nilpotent(l1), nil2 = is_nilpotent(l2);
  const auto ks = components(gs).kappa;
  if (!nil1 && !nil2) {
    report.add("connected when no summand is nilpotent", ks == 1, "kappa=" + std::to_string(ks));
  } else if (nil1 != nil2) {
    const auto k = components(nil2 ? g1 : g2).kappa;
    report.add("kappa unchanged by a nilpotent summand", ks == k,
               "kappa=" + std::to_string(ks) + " vs " + std::to_string(k));
  } else {
    report.add("both summands nilpotent", gs.vertex_count() == 0, "empty graph");
  }
  return report;
}

Report check_disconnection(const Subspace& u, const BuildOptions& options) {
  if (!is_strongly_self_centralizing(u, options.max_elements))
    throw PreconditionFailed(u.to_string() + " is not strongly self-centralizing");
  const AlgebraPtr& alg = u.algebra();
  Report report(alg->name() + ", U=" + u.to_string());
  const NilpotencyOracle oracle(alg);
  const NilGraph g = build(oracle, GraphKind::nilpotent, options);
  const auto members = sorted_members(u);

  std::string witness;
  for (auto m : members) {
    if (m == 0) continue;
    if (nil_of_element(oracle, alg->coords_of(m), options.max_elements).members != members) {
      witness = coords_text(*alg, m);
      break;
    }
  }
  report.add("nil_L(x) = U for nonzero x in U", witness.empty(), witness.empty() ? "" : "x=" + witness);

  witness.clear();
  for (auto m : members) {
    if (m == 0) continue;
    const auto r = g.rank_of(m);
    if (!r) {
      witness = coords_text(*alg, m) + " lies in nil(L)";
      break;
    }
    for (auto w : g.neighbors(*r))
      if (!std::binary_search(members.begin(), members.end(), g.vertices()[w])) {
        witness = coords_text(*alg, m) + " ~ " + coords_text(*alg, g.vertices()[w]);
        break;
      }
    if (!witness.empty()) break;
  }
  report.add("no edge leaves U\\{0}", witness.empty(), witness);
  const auto kappa = components(g).kappa;
  report.add("graph is disconnected", kappa >= 2, "kappa=" + std::to_string(kappa));
  return report;
}

bool eulerian_obstruction_applies(const NilpotencyOracle& oracle, const NilSet& nil, std::uint64_t max_elements) {
  const AlgebraPtr& alg = oracle.algebra();
  if (!is_solvable(alg) || !nil.is_subspace) return false;
  const std::size_t d = nil.as_subspace->dim();
  if (d == 0 || d % 2 != 0) return false;
  const std::uint64_t count = alg->element_count(max_elements);
  for (std::uint64_t x = 0; x < count; ++x) {
    const NilSet nx = nil_of_element(oracle, alg->coords_of(x), max_elements);
    if (!nx.is_subspace || nx.as_subspace->dim() % d != 0) return false;
  }
  return true;
}

Report check_eulerian_obstruction(const NilGraph& g) {
  require_nilpotent_kind(g);
  Report report("Eulerian obstruction on " + g.algebra()->name());
  const NilpotencyOracle oracle(g.algebra());
  if (eulerian_obstruction_applies(oracle, g.nil()))
    report.add("not Eulerian under the dimension hypotheses (interpretation-dependent)", !is_eulerian(g));
  else
    report.add("not Eulerian under the dimension hypotheses (interpretation-dependent)", true, "hypotheses not met");
  return report;
}

}  // namespace lienil
