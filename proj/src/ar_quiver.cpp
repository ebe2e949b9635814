#include "strdet/ar_quiver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace strdet {

std::optional<std::size_t> ARQuiver::arrow_between(std::size_t from, std::size_t to) const {
  for (auto k : arrows_out_of[from])
    if (arrows[k].to == to) return k;
  return std::nullopt;
}

namespace {

Matrix columns_of(const std::vector<ModuleMap>& maps, std::size_t length) {
  Matrix m(length, maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const Matrix v = flatten(maps[k]);
    for (std::size_t r = 0; r < length; ++r) m(r, k) = v(r, 0);
  }
  return m;
}

std::string node_name(const ARQuiver& ar, std::size_t k) { return "[" + ar.catalog[k].name + "]"; }

}  // namespace

ARQuiver ar_quiver(const BoundQuiverAlgebra& algebra) {
  require_valid(algebra);
  const Quiver& q = algebra.quiver;
  ARQuiver ar{ModuleCatalog(algebra), {}, {}, {}, {}, {}, {}};
  const std::size_t m = ar.catalog.size();

  // Hom between distinct indecomposables; all of it lies in the radical since
  // distinct string modules are non-isomorphic.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ModuleMap>> hom;
  std::vector<std::vector<std::size_t>> succ(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (x == y) continue;
      auto basis = hom_space(q, ar.catalog[x].module, ar.catalog[y].module);
      if (basis.empty()) continue;
      succ[x].push_back(y);
      hom.emplace(std::make_pair(x, y), std::move(basis));
    }

  ar.arrows_into.assign(m, {});
  ar.arrows_out_of.assign(m, {});
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y : succ[x]) {
      const auto& basis = hom.at({x, y});
      const std::size_t length = flatten(basis.front()).rows();
      std::vector<ModuleMap> composites;
      for (std::size_t z : succ[x]) {
        if (z == y) continue;
        auto zy = hom.find({z, y});
        if (zy == hom.end()) continue;
        for (const auto& f : hom.at({x, z}))
          for (const auto& g : zy->second) composites.push_back(compose(g, f));
      }
      const Matrix rad2 = columns_of(composites, length);
      const std::size_t rad2_rank = rank(rad2);
      const std::size_t irr = basis.size() - rad2_rank;
      if (irr == 0) continue;
      if (irr > 1)
        throw std::logic_error("more than one irreducible map " + node_name(ar, x) + " -> " + node_name(ar, y));
      const ModuleMap* chosen = nullptr;
      for (const auto& f : basis)
        if (!column_space_contains(rad2, flatten(f))) {
          chosen = &f;
          break;
        }

      const std::size_t dx = ar.catalog[x].module->total_dim(), dy = ar.catalog[y].module->total_dim();
      if (dx == dy)
        throw std::logic_error("irreducible map between modules of equal dimension " + node_name(ar, x) + " -> " +
                               node_name(ar, y));
      IrreducibleMap arrow{x, y, *chosen, dx < dy};
      if (arrow.mono ? !is_injective(arrow.map) : !is_surjective(arrow.map))
        throw std::logic_error("irreducible map " + node_name(ar, x) + " -> " + node_name(ar, y) +
                               " is neither mono nor epi");
      ar.arrows_into[y].push_back(ar.arrows.size());
      ar.arrows_out_of[x].push_back(ar.arrows.size());
      ar.arrows.push_back(std::move(arrow));
    }

  ar.tau.assign(m, std::nullopt);
  ar.tau_inverse.assign(m, std::nullopt);
  for (std::size_t n = 0; n < m; ++n) {
    if (ar.catalog.projective_vertex(n)) continue;
    const auto& preds = ar.arrows_into[n];
    if (preds.empty()) throw std::logic_error("non-projective " + node_name(ar, n) + " has no predecessors");

    std::vector<ModulePtr> middles;
    for (auto k : preds) middles.push_back(ar.catalog[ar.arrows[k].from].module);
    auto middle = std::make_shared<Representation>(direct_sum(q, middles));
    ModuleMap g{middle, ar.catalog[n].module, {}};
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      Matrix block(ar.catalog[n].module->dims[v], 0);
      for (auto k : preds) block = Matrix::hstack(block, ar.arrows[k].map.blocks[v]);
      g.blocks.push_back(std::move(block));
    }
    if (!is_surjective(g))
      throw std::logic_error("right almost split map into " + node_name(ar, n) + " is not onto");
    const Subobject left = kernel(q, g);
    auto t = ar.catalog.identify(q, *left.module);
    if (!t) throw std::logic_error("kernel of the right almost split map into " + node_name(ar, n) +
                                   " is not an indecomposable string module");
    ar.tau[n] = *t;
    if (ar.tau_inverse[*t])
      throw std::logic_error(node_name(ar, *t) + " is the translate of two modules");
    ar.tau_inverse[*t] = n;

    AlmostSplitSequence seq{*t, {}, n};
    for (auto k : preds) seq.middles.push_back(ar.arrows[k].from);
    ar.sequences.push_back(std::move(seq));
  }
  return ar;
}

std::vector<std::string> check_ar_invariants(const BoundQuiverAlgebra& algebra, const ARQuiver& ar) {
  const Quiver& q = algebra.quiver;
  std::vector<std::string> failures;
  const std::size_t m = ar.catalog.size();
  const std::size_t n = q.vertex_count();

  std::vector<bool> seen_p(m, false), seen_i(m, false);
  for (std::size_t v = 0; v < n; ++v) {
    seen_p[ar.catalog.projective_node(v)] = true;
    seen_i[ar.catalog.injective_node(v)] = true;
  }
  if (std::count(seen_p.begin(), seen_p.end(), true) != static_cast<long>(n))
    failures.push_back("projective nodes are not " + std::to_string(n) + " distinct modules");
  if (std::count(seen_i.begin(), seen_i.end(), true) != static_cast<long>(n))
    failures.push_back("injective nodes are not " + std::to_string(n) + " distinct modules");

  for (std::size_t k = 0; k < m; ++k) {
    const bool projective = ar.catalog.projective_vertex(k).has_value();
    const bool injective = ar.catalog.injective_vertex(k).has_value();
    if (projective == ar.tau[k].has_value())
      failures.push_back(node_name(ar, k) + ": translate defined iff non-projective fails");
    if (injective == ar.tau_inverse[k].has_value())
      failures.push_back(node_name(ar, k) + ": inverse translate defined iff non-injective fails");
  }

  for (const auto& s : ar.sequences) {
    const std::string label = node_name(ar, s.left) + " -> ... -> " + node_name(ar, s.right);
    if (s.middles.empty() || s.middles.size() > 2)
      failures.push_back(label + ": " + std::to_string(s.middles.size()) + " middle terms");
    auto sum = ar.catalog.dimension_vector(s.left);
    const auto right = ar.catalog.dimension_vector(s.right);
    for (std::size_t v = 0; v < n; ++v) sum[v] += right[v];
    std::vector<std::size_t> mid(n, 0);
    for (auto x : s.middles) {
      const auto d = ar.catalog.dimension_vector(x);
      for (std::size_t v = 0; v < n; ++v) mid[v] += d[v];
    }
    if (sum != mid) failures.push_back(label + ": mesh dimensions do not add up");
    // the left end maps irreducibly to exactly the same middle terms
    std::vector<std::size_t> outs;
    for (auto k : ar.arrows_out_of[s.left]) outs.push_back(ar.arrows[k].to);
    auto sorted_mid = s.middles;
    std::sort(outs.begin(), outs.end());
    std::sort(sorted_mid.begin(), sorted_mid.end());
    if (outs != sorted_mid) failures.push_back(label + ": left end does not map onto the middle terms");
  }

  // projectives: the irreducible maps into P(i) are exactly the radical summands
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t p = ar.catalog.projective_node(v);
    std::vector<std::size_t> preds;
    for (auto k : ar.arrows_into[p]) preds.push_back(ar.arrows[k].from);
    auto rad = radical_summands(algebra, ar.catalog, q.vertex_id(v));
    std::sort(preds.begin(), preds.end());
    std::sort(rad.begin(), rad.end());
    if (preds != rad) failures.push_back(node_name(ar, p) + ": predecessors differ from radical summands");
    if (rad.size() != q.out_degree(v))
      failures.push_back(node_name(ar, p) + ": radical has " + std::to_string(rad.size()) + " summands, out-degree " +
                         std::to_string(q.out_degree(v)));
  }

  for (const auto& a : ar.arrows) {
    if (!is_homomorphism(q, a.map))
      failures.push_back("irreducible map " + node_name(ar, a.from) + " -> " + node_name(ar, a.to) +
                         " is not a homomorphism");
  }
  for (std::size_t k = 0; k < m; ++k)
    if (!is_representation(algebra, *ar.catalog[k].module)) failures.push_back(node_name(ar, k) + " violates a relation");
  return failures;
}

}  // namespace strdet
