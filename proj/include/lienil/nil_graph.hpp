#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lienil/lie_algebra.hpp"
#include "lienil/nilpotentizer.hpp"

namespace lienil {

enum class GraphKind { nilpotent, complement };

const char* to_string(GraphKind kind);

/// Symmetric adjacency over vertex ranks, one bit per unordered pair.
class TriangularBits {
 public:
  explicit TriangularBits(std::size_t n = 0) : n_(n), words_((pairs(n) + 63) / 64, 0) {}

  static std::uint64_t pairs(std::size_t n) { return std::uint64_t{n} * (n > 0 ? n - 1 : 0) / 2; }
  std::size_t size() const { return n_; }

  bool get(std::size_t a, std::size_t b) const {
    if (a == b) return false;
    const auto bit = slot(a, b);
    return (words_[bit / 64] >> (bit % 64)) & 1u;
  }
  void set(std::size_t a, std::size_t b, bool value) {
    const auto bit = slot(a, b);
    if (value)
      words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    else
      words_[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
  }
  bool operator==(const TriangularBits&) const = default;

 private:
  static std::uint64_t slot(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::uint64_t{b} * (b - 1) / 2 + a;
  }
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

/// Gamma_N(L) or its complement. Vertices are the elements of L outside
/// nil(L), sorted by canonical index; graph positions are "ranks".
class NilGraph {
 public:
  NilGraph(AlgebraPtr algebra, GraphKind kind, NilSet nil, std::vector<std::uint64_t> vertices, TriangularBits adjacency);

  const AlgebraPtr& algebra() const { return algebra_; }
  GraphKind kind() const { return kind_; }
  const NilSet& nil() const { return nil_; }
  const std::vector<std::uint64_t>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::uint64_t edge_count() const { return edge_count_; }

  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_.get(a, b); }
  std::optional<std::size_t> rank_of(std::uint64_t element_index) const;
  std::size_t degree(std::size_t rank) const { return degrees_[rank]; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  std::vector<std::size_t> neighbors(std::size_t rank) const;
  // Edges as rank pairs (a < b), lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  const TriangularBits& adjacency() const { return adjacency_; }

  NilGraph complement() const;

 private:
  AlgebraPtr algebra_;
  GraphKind kind_;
  NilSet nil_;
  std::vector<std::uint64_t> vertices_;
  TriangularBits adjacency_;
  std::vector<std::size_t> degrees_;
  std::uint64_t edge_count_ = 0;
};

struct BuildOptions {
  // Unmemoized pipeline: nil(L) by direct scan, then a fresh closure and
  // nilpotency test for every vertex pair.
  bool naive = false;
  unsigned threads = 1;
  std::uint64_t max_elements = kDefaultMaxElements;
};

NilGraph build(const AlgebraPtr& algebra, GraphKind kind, const BuildOptions& options = {});
// Uses (and fills) the caller's oracle; options.naive is ignored.
NilGraph build(const NilpotencyOracle& oracle, GraphKind kind, const BuildOptions& options = {});

struct Component {
  std::vector<std::size_t> vertices;  // ranks, ascending
  bool complete = false;
};

struct ComponentSummary {
  std::size_t kappa = 0;
  std::vector<Component> components;      // ordered by smallest rank
  std::vector<std::size_t> sizes;         // descending
  std::vector<std::size_t> degree_sequence;  // descending
  std::optional<std::size_t> regular_degree;
};

ComponentSummary components(const NilGraph& g);
std::size_t degree(const NilGraph& g, std::size_t rank);
bool is_regular(const NilGraph& g);
bool is_connected(const NilGraph& g);  // exactly one component
bool is_bipartite(const NilGraph& g);
// Connected with every degree even.
bool is_eulerian(const NilGraph& g);
// One center joined to every other vertex and no further edges; n >= 2.
bool is_star(const NilGraph& g);

}  // namespace lienil
