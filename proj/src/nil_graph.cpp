#include "lienil/nil_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <thread>

#include "lienil/error.hpp"
#include "lienil/union_find.hpp"

namespace lienil {

const char* to_string(GraphKind kind) { return kind == GraphKind::nilpotent ? "nilpotent" : "complement"; }

namespace {

// Runs fn(row) for row in [0, rows), rows interleaved across workers.
void parallel_rows(std::size_t rows, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || rows < 2) {
    for (std::size_t r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t r = w; r < rows; r += threads) fn(r);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::uint64_t pair_slot(std::size_t a, std::size_t b) { return std::uint64_t{b} * (b - 1) / 2 + a; }

NilGraph finish(const AlgebraPtr& algebra, GraphKind kind, NilSet nil, std::vector<std::uint64_t> vertices,
                const std::function<bool(std::size_t, std::size_t)>& nilpotent_pair) {
  TriangularBits bits(vertices.size());
  for (std::size_t b = 1; b < vertices.size(); ++b)
    for (std::size_t a = 0; a < b; ++a) {
      const bool edge = nilpotent_pair(a, b);
      bits.set(a, b, kind == GraphKind::nilpotent ? edge : !edge);
    }
  return {algebra, kind, std::move(nil), std::move(vertices), std::move(bits)};
}

NilGraph build_naive(const AlgebraPtr& algebra, GraphKind kind, const BuildOptions& options) {
  const LieAlgebra& alg = *algebra;
  const NilpotencyOracle oracle(algebra, false);
  NilSet nil = nil_of_algebra(oracle, options.max_elements);
  const std::uint64_t count = alg.element_count(options.max_elements);
  std::vector<std::uint64_t> nodes;
  for (std::uint64_t i = 0; i < count; ++i)
    if (!nil.contains(i)) nodes.push_back(i);
  std::vector<Vec> coords;
  for (auto v : nodes) coords.push_back(alg.coords_of(v));
  std::vector<std::uint8_t> result(TriangularBits::pairs(nodes.size()), 0);
  parallel_rows(nodes.size(), options.threads, [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) result[pair_slot(i, j)] = oracle.pair_is_nilpotent(coords[i], coords[j]);
  });
  return finish(algebra, kind, std::move(nil), std::move(nodes),
                [&](std::size_t a, std::size_t b) { return result[pair_slot(a, b)] != 0; });
}

}  // namespace

NilGraph::NilGraph(AlgebraPtr algebra, GraphKind kind, NilSet nil, std::vector<std::uint64_t> vertices,
                   TriangularBits adjacency)
    : algebra_(std::move(algebra)),
      kind_(kind),
      nil_(std::move(nil)),
      vertices_(std::move(vertices)),
      adjacency_(std::move(adjacency)),
      degrees_(vertices_.size(), 0) {
  if (adjacency_.size() != vertices_.size()) throw InvalidArgument("adjacency size does not match vertex count");
  for (std::size_t b = 1; b < vertices_.size(); ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (adjacency_.get(a, b)) {
        ++degrees_[a];
        ++degrees_[b];
        ++edge_count_;
      }
}

std::optional<std::size_t> NilGraph::rank_of(std::uint64_t element_index) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), element_index);
  if (it == vertices_.end() || *it != element_index) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::size_t> NilGraph::neighbors(std::size_t rank) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (adjacency_.get(rank, v)) out.push_back(v);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> NilGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b)
      if (adjacency_.get(a, b)) out.emplace_back(a, b);
  return out;
}

NilGraph NilGraph::complement() const {
  TriangularBits bits(vertices_.size());
  for (std::size_t b = 1; b < vertices_.size(); ++b)
    for (std::size_t a = 0; a < b; ++a) bits.set(a, b, !adjacency_.get(a, b));
  const GraphKind other = kind_ == GraphKind::nilpotent ? GraphKind::complement : GraphKind::nilpotent;
  return {algebra_, other, nil_, vertices_, std::move(bits)};
}

NilGraph build(const NilpotencyOracle& oracle, GraphKind kind, const BuildOptions& options) {
  const AlgebraPtr& algebra = oracle.algebra();
  const LieAlgebra& alg = *algebra;
  const Field& f = alg.F();
  const std::uint64_t count = alg.element_count(options.max_elements);

  // One representative per line: leading nonzero coordinate equal to 1.
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> rep_of(count, kNone);
  std::vector<Vec> reps;
  Vec x(alg.dim());
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    alg.coords_of(idx, x);
    const auto lead = std::find_if(x.begin(), x.end(), [](Scalar c) { return c != 0; });
    if (*lead == 1) {
      rep_of[idx] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(x);
    }
  }
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    if (rep_of[idx] != kNone) continue;
    alg.coords_of(idx, x);
    const Scalar inv = f.inv(*std::find_if(x.begin(), x.end(), [](Scalar c) { return c != 0; }));
    for (auto& c : x) c = f.mul(c, inv);
    rep_of[idx] = rep_of[alg.index_of(x)];
  }

  const std::size_t m = reps.size();
  std::vector<std::uint8_t> rep_adj(TriangularBits::pairs(m), 0);
  parallel_rows(m, options.threads, [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) rep_adj[pair_slot(i, j)] = oracle.pair_is_nilpotent(reps[i], reps[j]);
  });
  auto rep_adjacent = [&](std::uint32_t a, std::uint32_t b) {
    if (a == b) return true;
    if (a > b) std::swap(a, b);
    return rep_adj[pair_slot(a, b)] != 0;
  };

  // x is in nil(L) iff its line is adjacent to every line.
  std::vector<bool> universal(m, true);
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!rep_adj[pair_slot(i, j)]) universal[i] = universal[j] = false;
  std::vector<std::uint64_t> nil_members{0};
  std::vector<std::uint64_t> vertices;
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    if (universal[rep_of[idx]])
      nil_members.push_back(idx);
    else
      vertices.push_back(idx);
  }
  NilSet nil = make_nil_set(algebra, std::move(nil_members));
  std::vector<std::uint32_t> vrep;
  vrep.reserve(vertices.size());
  for (auto v : vertices) vrep.push_back(rep_of[v]);
  return finish(algebra, kind, std::move(nil), std::move(vertices),
                [&](std::size_t a, std::size_t b) { return rep_adjacent(vrep[a], vrep[b]); });
}

NilGraph build(const AlgebraPtr& algebra, GraphKind kind, const BuildOptions& options) {
  if (options.naive) return build_naive(algebra, kind, options);
  const NilpotencyOracle oracle(algebra, true);
  return build(oracle, kind, options);
}

ComponentSummary components(const NilGraph& g) {
  const std::size_t n = g.vertex_count();
  DisjointSets sets(n);
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (g.adjacent(a, b)) sets.unite(a, b);
  ComponentSummary out;
  std::vector<std::size_t> comp_of_root(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (comp_of_root[root] == n) {
      comp_of_root[root] = out.components.size();
      out.components.push_back({});
    }
    out.components[comp_of_root[root]].vertices.push_back(v);
  }
  for (auto& c : out.components) {
    bool complete = true;
    for (std::size_t i = 0; i < c.vertices.size() && complete; ++i)
      for (std::size_t j = i + 1; j < c.vertices.size() && complete; ++j)
        complete = g.adjacent(c.vertices[i], c.vertices[j]);
    c.complete = complete;
    out.sizes.push_back(c.vertices.size());
  }
  out.kappa = out.components.size();
  std::sort(out.sizes.rbegin(), out.sizes.rend());
  out.degree_sequence = g.degrees();
  std::sort(out.degree_sequence.rbegin(), out.degree_sequence.rend());
  if (n > 0 && out.degree_sequence.front() == out.degree_sequence.back()) out.regular_degree = out.degree_sequence.front();
  return out;
}

std::size_t degree(const NilGraph& g, std::size_t rank) { return g.degree(rank); }

bool is_regular(const NilGraph& g) {
  const auto& d = g.degrees();
  return !d.empty() && std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x == d.front(); });
}

bool is_connected(const NilGraph& g) { return components(g).kappa == 1; }

bool is_bipartite(const NilGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        if (!g.adjacent(v, w)) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_eulerian(const NilGraph& g) {
  if (!is_connected(g)) return false;
  const auto& d = g.degrees();
  return std::all_of(d.begin(), d.end(), [](std::size_t x) { return x % 2 == 0; });
}

bool is_star(const NilGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) return false;
  const auto& d = g.degrees();
  return std::any_of(d.begin(), d.end(), [&](std::size_t x) { return x == n - 1; });
}

}  // namespace lienil
