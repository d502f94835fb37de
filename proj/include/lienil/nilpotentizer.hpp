#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lienil/lie_algebra.hpp"
#include "lienil/report.hpp"
#include "lienil/structure.hpp"
#include "lienil/subspace.hpp"

namespace lienil {

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept;
};

/// Sharded map for memo tables shared between build workers. Every writer
/// of a key computes the same value, so the last write wins.
template <typename Value>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Vec& key) const {
    const Shard& s = shard(key);
    std::lock_guard lock(s.mutex);
    if (auto it = s.map.find(key); it != s.map.end()) return it->second;
    return std::nullopt;
  }
  void store(const Vec& key, Value value) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mutex);
    s.map.insert_or_assign(key, value);
  }
  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& s : shards_) {
      std::lock_guard lock(s.mutex);
      total += s.map.size();
    }
    return total;
  }

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<Vec, Value, VecHash> map;
  };
  Shard& shard(const Vec& key) { return shards_[VecHash{}(key) % kShards]; }
  const Shard& shard(const Vec& key) const { return shards_[VecHash{}(key) % kShards]; }
  std::array<Shard, kShards> shards_;
};

/// Decides whether <x, y> is a nilpotent subalgebra. With memoization the
/// answer is cached under the RREF of span{x, y} (<x, y> only depends on
/// that span) and the nilpotency test under the RREF of the closed
/// subalgebra. Safe to call from several threads.
class NilpotencyOracle {
 public:
  explicit NilpotencyOracle(AlgebraPtr algebra, bool memoize = true);

  const AlgebraPtr& algebra() const { return algebra_; }
  bool memoized() const { return memoize_; }

  bool pair_is_nilpotent(std::span<const Scalar> x, std::span<const Scalar> y) const;
  bool pair_is_nilpotent(std::uint64_t x, std::uint64_t y) const;

  std::uint64_t closures_computed() const { return closures_.load(); }
  std::uint64_t nilpotency_tests() const { return tests_.load(); }

 private:
  bool closed_is_nilpotent(const EchelonBasis& closed) const;

  AlgebraPtr algebra_;
  bool memoize_;
  std::unique_ptr<ConcurrentMemo<bool>> planes_;
  std::unique_ptr<ConcurrentMemo<bool>> subalgebras_;
  mutable std::atomic<std::uint64_t> closures_{0};
  mutable std::atomic<std::uint64_t> tests_{0};
};

/// Explicit element set; nilpotentizers are not assumed to be subspaces.
struct NilSet {
  AlgebraPtr algebra;
  std::vector<std::uint64_t> members;  // sorted canonical indices
  bool is_subspace = false;
  std::optional<Subspace> as_subspace;

  std::size_t size() const { return members.size(); }
  bool contains(std::uint64_t index) const;
  bool operator==(const NilSet& o) const { return algebra == o.algebra && members == o.members; }
};

// Sorts the members and decides subspace-ness exactly.
NilSet make_nil_set(AlgebraPtr algebra, std::vector<std::uint64_t> members);
NilSet nil_set_of(const Subspace& s, std::uint64_t max_elements = kDefaultMaxElements);
// Literal check that the set contains 0 and is closed under addition.
bool is_additively_closed(const NilSet& s);

// nil_L(h) = {x : <h, x> nilpotent}, exhaustive over L.
NilSet nil_of_element(const NilpotencyOracle& oracle, std::span<const Scalar> h,
                      std::uint64_t max_elements = kDefaultMaxElements);
NilSet nil_of_element(const Element& h, std::uint64_t max_elements = kDefaultMaxElements);
// nil(L) = {x : <h, x> nilpotent for every h in L}.
NilSet nil_of_algebra(const NilpotencyOracle& oracle, std::uint64_t max_elements = kDefaultMaxElements);
NilSet nil_of_algebra(const AlgebraPtr& algebra, std::uint64_t max_elements = kDefaultMaxElements);

struct NilCaps {
  std::uint64_t max_elements = kDefaultMaxElements;
  std::uint64_t max_subspaces = kDefaultMaxSubspaces;
};

// Z*(L) in nil(L) in E(L).
Report check_containment_chain(const AlgebraPtr& algebra, const NilCaps& caps = {});

// Quotient and automorphism properties of nilpotentizers relative to an ideal J:
// (i) nil(L) in nil_L(x); (ii) image of nil_L(x) in nil_{L/J}(x+J);
// (iii) nil_{L/J}(x+J) = nil_L(x)/J when J in Z*(L); (iv) the "all nilpotentizers
// are subalgebras" property agrees for L and L/J when J in Z*(L);
// (v) nil_L(y) = nil_L(x) for y in a subalgebra nil_L(x), y and x outside nil(L);
// (vi) theta(nil_L(x)) = nil_L(theta x) for diagonal basis-scaling automorphisms theta.
Report check_quotient_laws(const Subspace& ideal, const NilCaps& caps = {});

// Subspace nil_L(x) <=> x in exactly one maximal nilpotent subalgebra <=> nil_L(x)
// equals it, for every x outside nil(L).
Report check_maximal_nilpotent_equivalence(const AlgebraPtr& algebra, const NilCaps& caps = {});

// Diagonal maps b_i -> lambda_i b_i that preserve the bracket.
std::vector<Vec> scaling_automorphisms(const LieAlgebra& algebra, std::uint64_t max_candidates = 1'000'000);

// C_L(x) = U for every nonzero x in U (U a nonzero subalgebra).
bool is_strongly_self_centralizing(const Subspace& u, std::uint64_t max_elements = kDefaultMaxElements);
std::vector<Subspace> find_strongly_self_centralizing(const AlgebraPtr& algebra, std::size_t max_dim,
                                                      const NilCaps& caps = {});

}  // namespace lienil
