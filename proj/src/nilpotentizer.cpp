#include "lienil/nilpotentizer.hpp"

#include <algorithm>

#include "lienil/error.hpp"

namespace lienil {

std::size_t VecHash::operator()(const Vec& v) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Scalar x : v) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

Vec flatten(const EchelonBasis& b) {
  Vec key;
  key.reserve(b.rank() * b.dim());
  for (const auto& r : b.rows()) key.insert(key.end(), r.begin(), r.end());
  return key;
}

std::string coords_text(const LieAlgebra& alg, std::uint64_t index) { return format_coords(alg, alg.coords_of(index)); }

}  // namespace

NilpotencyOracle::NilpotencyOracle(AlgebraPtr algebra, bool memoize)
    : algebra_(std::move(algebra)), memoize_(memoize) {
  if (memoize_) {
    planes_ = std::make_unique<ConcurrentMemo<bool>>();
    subalgebras_ = std::make_unique<ConcurrentMemo<bool>>();
  }
}

bool NilpotencyOracle::closed_is_nilpotent(const EchelonBasis& closed) const {
  if (!memoize_) {
    ++tests_;
    return detail::is_nilpotent_closed(*algebra_, closed.rows());
  }
  const Vec key = flatten(closed);
  if (auto hit = subalgebras_->find(key)) return *hit;
  ++tests_;
  const bool result = detail::is_nilpotent_closed(*algebra_, closed.rows());
  subalgebras_->store(key, result);
  return result;
}

bool NilpotencyOracle::pair_is_nilpotent(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const LieAlgebra& alg = *algebra_;
  EchelonBasis basis(alg.dim());
  basis.insert(alg.F(), Vec(x.begin(), x.end()));
  basis.insert(alg.F(), Vec(y.begin(), y.end()));
  // One generator spans an abelian (hence nilpotent) subalgebra.
  if (basis.rank() <= 1) return true;
  Vec plane_key;
  if (memoize_) {
    plane_key = flatten(basis);
    if (auto hit = planes_->find(plane_key)) return *hit;
  }
  ++closures_;
  detail::close_under_bracket(alg, basis);
  const bool result = closed_is_nilpotent(basis);
  if (memoize_) planes_->store(plane_key, result);
  return result;
}

bool NilpotencyOracle::pair_is_nilpotent(std::uint64_t x, std::uint64_t y) const {
  return pair_is_nilpotent(algebra_->coords_of(x), algebra_->coords_of(y));
}

bool NilSet::contains(std::uint64_t index) const { return std::binary_search(members.begin(), members.end(), index); }

NilSet make_nil_set(AlgebraPtr algebra, std::vector<std::uint64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  NilSet out{std::move(algebra), std::move(members), false, std::nullopt};
  const LieAlgebra& alg = *out.algebra;
  EchelonBasis span_basis(alg.dim());
  for (auto m : out.members) {
    span_basis.insert(alg.F(), alg.coords_of(m));
    if (span_basis.rank() == alg.dim()) break;
  }
  // The set lies inside its span, so equal cardinality means equality.
  std::uint64_t span_size = 1;
  for (std::size_t i = 0; i < span_basis.rank(); ++i) span_size *= alg.F().order();
  if (!out.members.empty() && out.members.front() == 0 && span_size == out.members.size()) {
    out.is_subspace = true;
    out.as_subspace = Subspace(out.algebra, span_basis.to_matrix());
  }
  return out;
}

NilSet nil_set_of(const Subspace& s, std::uint64_t max_elements) {
  return make_nil_set(s.algebra(), s.element_indices(max_elements));
}

bool is_additively_closed(const NilSet& s) {
  if (!s.contains(0)) return false;
  const LieAlgebra& alg = *s.algebra;
  Vec sum(alg.dim());
  for (auto a : s.members) {
    const Vec va = alg.coords_of(a);
    for (auto b : s.members) {
      if (b < a) continue;
      const Vec vb = alg.coords_of(b);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = alg.F().add(va[i], vb[i]);
      if (!s.contains(alg.index_of(sum))) return false;
    }
  }
  return true;
}

NilSet nil_of_element(const NilpotencyOracle& oracle, std::span<const Scalar> h, std::uint64_t max_elements) {
  const LieAlgebra& alg = *oracle.algebra();
  const std::uint64_t count = alg.element_count(max_elements);
  std::vector<std::uint64_t> members;
  Vec x(alg.dim());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    alg.coords_of(idx, x);
    if (oracle.pair_is_nilpotent(h, x)) members.push_back(idx);
  }
  return make_nil_set(oracle.algebra(), std::move(members));
}

NilSet nil_of_element(const Element& h, std::uint64_t max_elements) {
  NilpotencyOracle oracle(h.algebra());
  return nil_of_element(oracle, h.coords(), max_elements);
}

NilSet nil_of_algebra(const NilpotencyOracle& oracle, std::uint64_t max_elements) {
  const LieAlgebra& alg = *oracle.algebra();
  const std::uint64_t count = alg.element_count(max_elements);
  std::vector<std::uint64_t> members;
  Vec x(alg.dim()), h(alg.dim());
  for (std::uint64_t xi = 0; xi < count; ++xi) {
    alg.coords_of(xi, x);
    bool all = true;
    for (std::uint64_t hi = 1; hi < count && all; ++hi) {
      alg.coords_of(hi, h);
      all = oracle.pair_is_nilpotent(h, x);
    }
    if (all) members.push_back(xi);
  }
  return make_nil_set(oracle.algebra(), std::move(members));
}

NilSet nil_of_algebra(const AlgebraPtr& algebra, std::uint64_t max_elements) {
  NilpotencyOracle oracle(algebra);
  return nil_of_algebra(oracle, max_elements);
}

Report check_containment_chain(const AlgebraPtr& algebra, const NilCaps& caps) {
  Report report("containment chain for " + algebra->name());
  const Subspace zstar = hypercenter(algebra);
  const NilSet nil = nil_of_algebra(algebra, caps.max_elements);
  const Subspace engel = engel_elements(algebra, caps.max_elements);

  std::string witness;
  for (auto idx : zstar.element_indices(caps.max_elements)) {
    if (!nil.contains(idx)) {
      witness = coords_text(*algebra, idx);
      break;
    }
  }
  report.add("Z*(L) in nil(L)", witness.empty(),
             witness.empty() ? "|Z*(L)| = " + std::to_string(zstar.size(caps.max_elements)) : "witness " + witness);
  witness.clear();
  for (auto idx : nil.members) {
    if (!engel.contains(algebra->coords_of(idx))) {
      witness = coords_text(*algebra, idx);
      break;
    }
  }
  report.add("nil(L) in E(L)", witness.empty(),
             witness.empty() ? "|nil(L)| = " + std::to_string(nil.size()) + ", dim E(L) = " + std::to_string(engel.dim())
                             : "witness " + witness);
  return report;
}

std::vector<Vec> scaling_automorphisms(const LieAlgebra& algebra, std::uint64_t max_candidates) {
  const Field& f = algebra.F();
  const std::size_t n = algebra.dim();
  const std::uint64_t units = f.order() - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= units;
    if (total > max_candidates) throw CapExceeded("too many diagonal scalings to test");
  }
  const auto& sc = algebra.structure_constants();
  std::vector<Vec> out;
  Vec lambda(n);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (std::size_t i = 0; i < n; ++i) {
      lambda[i] = static_cast<Scalar>(rest % units + 1);
      rest /= units;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k) {
          const Scalar c = sc.get(i, j, k);
          if (c != 0) ok = f.mul(c, f.mul(lambda[i], lambda[j])) == f.mul(lambda[k], c);
        }
    if (ok) out.push_back(lambda);
  }
  return out;
}

Report check_quotient_laws(const Subspace& ideal, const NilCaps& caps) {
  const AlgebraPtr& algebra = ideal.algebra();
  const LieAlgebra& alg = *algebra;
  Report report("nilpotentizer quotient laws for " + alg.name() + " / " + ideal.to_string());
  const Quotient quo = quotient(ideal);
  const LieAlgebra& qalg = *quo.algebra;
  const NilpotencyOracle oracle(algebra);
  const NilpotencyOracle qoracle(quo.algebra);

  const std::uint64_t count = alg.element_count(caps.max_elements);
  const std::uint64_t qcount = qalg.element_count(caps.max_elements);
  std::vector<NilSet> nil_x;
  nil_x.reserve(count);
  for (std::uint64_t x = 0; x < count; ++x) nil_x.push_back(nil_of_element(oracle, alg.coords_of(x), caps.max_elements));
  std::vector<NilSet> qnil;
  qnil.reserve(qcount);
  for (std::uint64_t x = 0; x < qcount; ++x) qnil.push_back(nil_of_element(qoracle, qalg.coords_of(x), caps.max_elements));
  const NilSet nil = nil_of_algebra(oracle, caps.max_elements);
  auto proj = [&](std::uint64_t idx) { return qalg.index_of(quo.project(alg.coords_of(idx))); };

  {
    std::string witness;
    for (std::uint64_t x = 0; x < count && witness.empty(); ++x)
      for (auto m : nil.members)
        if (!nil_x[x].contains(m)) {
          witness = "x = " + coords_text(alg, x);
          break;
        }
    report.add("(i) nil(L) in nil_L(x)", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::uint64_t x = 0; x < count && witness.empty(); ++x) {
      const auto& target = qnil[proj(x)];
      for (auto y : nil_x[x].members)
        if (!target.contains(proj(y))) {
          witness = "x = " + coords_text(alg, x) + ", y = " + coords_text(alg, y);
          break;
        }
    }
    report.add("(ii) (nil_L(x)+J)/J in nil_{L/J}(x+J)", witness.empty(), witness);
  }
  const bool central = hypercenter(algebra).contains(ideal);
  if (central) {
    std::string witness;
    for (std::uint64_t x = 0; x < count && witness.empty(); ++x) {
      const auto& target = qnil[proj(x)];
      for (std::uint64_t y = 0; y < count; ++y)
        if (nil_x[x].contains(y) != target.contains(proj(y))) {
          witness = "x = " + coords_text(alg, x) + ", y = " + coords_text(alg, y);
          break;
        }
    }
    report.add("(iii) nil_{L/J}(x+J) = nil_L(x)/J", witness.empty(), witness);

    auto all_subalgebras = [](const std::vector<NilSet>& sets) {
      return std::all_of(sets.begin(), sets.end(),
                         [](const NilSet& s) { return s.is_subspace && is_subalgebra(*s.as_subspace); });
    };
    const bool in_l = all_subalgebras(nil_x);
    const bool in_q = all_subalgebras(qnil);
    report.add("(iv) every nil_L(x) a subalgebra iff every nil_{L/J}(x+J) is", in_l == in_q,
               std::string("L: ") + (in_l ? "yes" : "no") + ", L/J: " + (in_q ? "yes" : "no"));
  } else {
    report.add("(iii) nil_{L/J}(x+J) = nil_L(x)/J", true, "not applicable: J is not inside Z*(L)");
    report.add("(iv) every nil_L(x) a subalgebra iff every nil_{L/J}(x+J) is", true,
               "not applicable: J is not inside Z*(L)");
  }
  {
    std::string witness;
    for (std::uint64_t x = 0; x < count && witness.empty(); ++x) {
      if (nil.contains(x)) continue;
      const auto& nx = nil_x[x];
      if (!nx.is_subspace || !is_subalgebra(*nx.as_subspace)) continue;
      for (auto y : nx.members) {
        if (nil.contains(y)) continue;
        if (!(nil_x[y] == nx)) {
          witness = "x = " + coords_text(alg, x) + ", y = " + coords_text(alg, y);
          break;
        }
      }
    }
    report.add("(v) nil_L(y) = nil_L(x) for y in subalgebra nil_L(x)", witness.empty(), witness);
  }
  {
    std::string witness;
    const auto autos = scaling_automorphisms(alg);
    Vec image(alg.dim());
    auto apply_theta = [&](const Vec& lambda, std::uint64_t idx) {
      const Vec v = alg.coords_of(idx);
      for (std::size_t i = 0; i < v.size(); ++i) image[i] = alg.F().mul(lambda[i], v[i]);
      return alg.index_of(image);
    };
    for (const auto& lambda : autos) {
      for (std::uint64_t x = 0; x < count && witness.empty(); ++x) {
        std::vector<std::uint64_t> mapped;
        for (auto m : nil_x[x].members) mapped.push_back(apply_theta(lambda, m));
        std::sort(mapped.begin(), mapped.end());
        if (mapped != nil_x[apply_theta(lambda, x)].members) {
          witness = "x = " + coords_text(alg, x) + ", scaling " + format_coords(alg, lambda);
        }
      }
      if (!witness.empty()) break;
    }
    report.add("(vi) theta(nil_L(x)) = nil_L(theta x) for scaling automorphisms", witness.empty(),
               witness.empty() ? std::to_string(autos.size()) + " scaling automorphisms" : witness);
  }
  return report;
}

Report check_maximal_nilpotent_equivalence(const AlgebraPtr& algebra, const NilCaps& caps) {
  const LieAlgebra& alg = *algebra;
  Report report("maximal nilpotent subalgebras of " + alg.name());
  const auto subalgebras = enumerate_subalgebras(algebra, caps.max_subspaces);
  const NilpotencyOracle oracle(algebra);
  const NilSet nil = nil_of_algebra(oracle, caps.max_elements);
  const bool nilpotent_algebra = is_nilpotent(algebra);
  const std::uint64_t count = alg.element_count(caps.max_elements);
  std::string witness;
  std::size_t checked = 0;
  for (std::uint64_t x = 0; x < count && witness.empty(); ++x) {
    if (nil.contains(x) && !nilpotent_algebra) continue;
    ++checked;
    const Element ex = Element::from_index(algebra, x);
    const NilSet nx = nil_of_element(oracle, ex.coords(), caps.max_elements);
    const auto maximal = maximal_nilpotent_subalgebras(ex, subalgebras);
    const bool unique = maximal.size() == 1;
    if (nx.is_subspace != unique) {
      witness = "x = " + ex.to_string() + ": subspace " + (nx.is_subspace ? "yes" : "no") + ", maximal count " +
                std::to_string(maximal.size());
    } else if (unique && !(nil_set_of(maximal.front(), caps.max_elements) == nx)) {
      witness = "x = " + ex.to_string() + ": nil_L(x) differs from " + maximal.front().to_string();
    }
  }
  report.add("subspace <=> unique maximal nilpotent subalgebra = nil_L(x)", witness.empty(),
             witness.empty() ? std::to_string(checked) + " elements checked" : witness);
  return report;
}

bool is_strongly_self_centralizing(const Subspace& u, std::uint64_t max_elements) {
  if (u.is_zero() || !is_subalgebra(u)) return false;
  const LieAlgebra& alg = *u.algebra();
  for (auto idx : u.element_indices(max_elements)) {
    if (idx == 0) continue;
    if (!(centralizer(Element(u.algebra(), alg.coords_of(idx))) == u)) return false;
  }
  return true;
}

std::vector<Subspace> find_strongly_self_centralizing(const AlgebraPtr& algebra, std::size_t max_dim,
                                                      const NilCaps& caps) {
  std::vector<Subspace> out;
  for_each_subspace(algebra, max_dim, caps.max_subspaces, [&](const Subspace& s) {
    if (is_strongly_self_centralizing(s, caps.max_elements)) out.push_back(s);
  });
  return out;
}

}  // namespace lienil
