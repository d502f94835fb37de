#include "lienil/catalog.hpp"

#include "lienil/constructions.hpp"
#include "lienil/error.hpp"

namespace lienil {

AlgebraPtr CatalogEntry::make() const { return parse_algebra_expr(expr, parse_field(field)); }

std::vector<CatalogEntry> standard_catalog() {
  return {{"t:2", "2^1"},  {"t:2", "3^1"},  {"t:2", "2^2"},  {"t:2", "5^1"},  {"gl:2", "2^1"},
          {"t:3", "2^1"},  {"sl:2", "3^1"}, {"sl:2", "5^1"}, {"aff1", "2^1"}, {"aff1", "3^1"},
          {"ex3d", "2^1"}, {"ex3d", "3^1"}, {"u:3+t:2", "2^1"}};
}

std::vector<CatalogEntry> nilpotent_catalog() {
  return {{"ab:1", "2^1"}, {"ab:2", "2^1"}, {"u:3", "2^1"}, {"ab:1", "3^1"}, {"u:3", "3^1"}};
}

std::vector<std::pair<CatalogEntry, CatalogEntry>> direct_sum_pairs(std::uint64_t max_elements) {
  auto all = standard_catalog();
  for (auto& e : nilpotent_catalog()) all.push_back(e);
  std::vector<AlgebraPtr> built;
  for (const auto& e : all) built.push_back(e.make());
  std::vector<std::pair<CatalogEntry, CatalogEntry>> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      if (all[i].field != all[j].field) continue;
      const std::size_t dim = built[i]->dim() + built[j]->dim();
      std::uint64_t count = 1;
      for (std::size_t d = 0; d < dim && count <= max_elements; ++d) count *= built[i]->F().order();
      if (count <= max_elements) out.emplace_back(all[i], all[j]);
    }
  return out;
}

}  // namespace lienil
