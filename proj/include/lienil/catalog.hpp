#pragma once

#include <string>
#include <vector>

#include "lienil/lie_algebra.hpp"

namespace lienil {

struct CatalogEntry {
  std::string expr;   // algebra expression
  std::string field;  // "p^k"

  AlgebraPtr make() const;
  std::string label() const { return expr + " over " + field; }
};

// Built-in test algebras: t(2, F_2..F_5), gl(2, F_2), t(3, F_2), sl(2, F_3),
// sl(2, F_5), aff1 and ex3d over F_2 and F_3, u(3, F_2) + t(2, F_2).
std::vector<CatalogEntry> standard_catalog();
// Small nilpotent algebras used as direct-sum partners.
std::vector<CatalogEntry> nilpotent_catalog();
// Unordered same-field pairs from both catalogs above with at most
// max_elements elements in the sum.
std::vector<std::pair<CatalogEntry, CatalogEntry>> direct_sum_pairs(std::uint64_t max_elements);

}  // namespace lienil
