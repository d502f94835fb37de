#pragma once

#include <cstdint>
#include <vector>

#include "lienil/nil_graph.hpp"
#include "lienil/report.hpp"
#include "lienil/subspace.hpp"

namespace lienil {

// deg(h) = |nil_L(h)| - |nil(L)| - 1 at every vertex of a nilpotent-kind graph.
Report verify_degree_formula(const NilpotencyOracle& oracle, const NilGraph& g);
Report verify_degree_formula(const NilGraph& g);

struct Clique {
  std::vector<std::size_t> vertices;  // ranks in g
  bool is_clique = false;
};

// U minus nil(L), as vertices of g. Throws PreconditionFailed unless U is a
// nilpotent subalgebra not contained in nil(L).
Clique clique_of_subalgebra(const NilGraph& g, const Subspace& u);

// max |U \ nil(L)| over nilpotent subalgebras U; 0 when none leaves nil(L).
std::size_t clique_lower_bound(const NilGraph& g, std::uint64_t max_subspaces = kDefaultMaxSubspaces);

Report check_t2_components(std::uint64_t q, const BuildOptions& options = {});

// (a) adjacency in L1+L2 agrees with component-wise adjacency, with the nil
// law nil(L1+L2) = nil(L1)+nil(L2); (b) connected when neither summand is
// nilpotent; (c) kappa(L1+L2) = kappa(L1) when only L2 is nilpotent.
Report check_direct_sum_laws(const AlgebraPtr& l1, const AlgebraPtr& l2, const BuildOptions& options = {});

// Requires U strongly self-centralizing; otherwise throws PreconditionFailed.
Report check_disconnection(const Subspace& u, const BuildOptions& options = {});

// Solvable L, nil(L) a subspace of even positive dimension d, every nil_L(x)
// a subspace of dimension divisible by d.
bool eulerian_obstruction_applies(const NilpotencyOracle& oracle, const NilSet& nil,
                                std::uint64_t max_elements = kDefaultMaxElements);
Report check_eulerian_obstruction(const NilGraph& g);

}  // namespace lienil
