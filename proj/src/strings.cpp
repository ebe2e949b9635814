#include "strdet/strings.hpp"

#include <algorithm>
#include <stdexcept>

#include "strdet/tree.hpp"

namespace strdet {

namespace {

std::size_t letter_from(const Quiver& q, const Letter& l) {
  return l.direct ? q.source_index(l.arrow) : q.target_index(l.arrow);
}
std::size_t letter_to(const Quiver& q, const Letter& l) {
  return l.direct ? q.target_index(l.arrow) : q.source_index(l.arrow);
}

}  // namespace

std::vector<std::size_t> walk_vertices(const Quiver& quiver, const StringWalk& w) {
  std::vector<std::size_t> out{w.start};
  for (const auto& l : w.letters) out.push_back(letter_to(quiver, l));
  return out;
}

StringWalk inverse(const Quiver& quiver, const StringWalk& w) {
  StringWalk r{walk_vertices(quiver, w).back(), {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->arrow, !it->direct});
  return r;
}

std::string render(const Quiver& quiver, const StringWalk& w) {
  if (w.letters.empty()) return "e" + std::to_string(quiver.vertex_id(w.start));
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += quiver.arrows()[l.arrow].id;
    if (!l.direct) out += "^-1";
  }
  return out;
}

bool is_string(const BoundQuiverAlgebra& algebra, const StringWalk& w) {
  const Quiver& q = algebra.quiver;
  if (w.start >= q.vertex_count()) return false;
  std::size_t at = w.start;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const Letter& l = w.letters[k];
    if (l.arrow >= q.arrow_count() || letter_from(q, l) != at) return false;
    if (k > 0 && w.letters[k - 1].arrow == l.arrow && w.letters[k - 1].direct != l.direct) return false;
    at = letter_to(q, l);
  }
  // maximal runs of one direction, as paths in traversal order
  std::size_t k = 0;
  while (k < w.letters.size()) {
    std::size_t end = k;
    while (end < w.letters.size() && w.letters[end].direct == w.letters[k].direct) ++end;
    Path run;
    for (std::size_t x = k; x < end; ++x) run.push_back(w.letters[x].arrow);
    if (!w.letters[k].direct) std::reverse(run.begin(), run.end());
    if (path_in_ideal(q, run, algebra.relations)) return false;
    k = end;
  }
  return true;
}

StringWalk canonical(const Quiver& quiver, const StringWalk& w) {
  StringWalk inv = inverse(quiver, w);
  if (w.letters.empty()) return w;
  return render(quiver, inv) < render(quiver, w) ? inv : w;
}

std::vector<StringWalk> enumerate_strings(const BoundQuiverAlgebra& algebra) {
  const Quiver& q = algebra.quiver;
  std::vector<StringWalk> trivial, proper;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) trivial.push_back({v, {}});
  for (std::size_t u = 0; u < q.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < q.vertex_count(); ++v) {
      const TreeWalk tw = walk_between(algebra, q.vertex_id(u), q.vertex_id(v));
      StringWalk w{u, {}};
      for (const auto& step : tw.steps) w.letters.push_back({step.arrow, step.forward});
      if (is_string(algebra, w)) proper.push_back(canonical(q, w));
    }
  std::sort(proper.begin(), proper.end(), [&](const StringWalk& a, const StringWalk& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return render(q, a) < render(q, b);
  });
  trivial.insert(trivial.end(), proper.begin(), proper.end());
  return trivial;
}

Representation string_module(const BoundQuiverAlgebra& algebra, const StringWalk& w) {
  if (!is_string(algebra, w)) throw std::invalid_argument("not a string");
  const Quiver& q = algebra.quiver;
  const auto positions = walk_vertices(q, w);
  Representation m = zero_representation(q);
  std::vector<std::size_t> slot;  // basis index of each position within its vertex
  for (auto v : positions) slot.push_back(m.dims[v]++);
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    m.maps[a] = Matrix(m.dims[q.target_index(a)], m.dims[q.source_index(a)]);
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const Letter& l = w.letters[k];
    // direct: position k -> position k+1; inverse: position k+1 -> position k
    const std::size_t from = l.direct ? k : k + 1;
    const std::size_t to = l.direct ? k + 1 : k;
    m.maps[l.arrow](slot[to], slot[from]) = 1;
  }
  return m;
}

namespace {

// Non-zero paths starting (forward) or ending (!forward) at vertex i, by end vertex.
std::vector<std::vector<Path>> nonzero_paths(const BoundQuiverAlgebra& algebra, std::size_t i, bool forward) {
  const Quiver& q = algebra.quiver;
  std::vector<std::vector<Path>> at(q.vertex_count());
  std::vector<std::pair<std::size_t, Path>> stack{{i, {}}};
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    at[v].push_back(p);
    const auto& next = forward ? q.outgoing(v) : q.incoming(v);
    for (auto a : next) {
      Path longer = p;
      if (forward) longer.push_back(a);
      else longer.insert(longer.begin(), a);
      if (path_in_ideal(q, longer, algebra.relations)) continue;
      stack.push_back({forward ? q.target_index(a) : q.source_index(a), std::move(longer)});
    }
  }
  return at;
}

std::size_t position_of(const std::vector<Path>& paths, const Path& p) {
  return static_cast<std::size_t>(std::find(paths.begin(), paths.end(), p) - paths.begin());
}

}  // namespace

Representation projective(const BoundQuiverAlgebra& algebra, VertexId i) {
  const Quiver& q = algebra.quiver;
  const auto basis = nonzero_paths(algebra, q.vertex_index(i), true);
  Representation m = zero_representation(q);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) m.dims[v] = basis[v].size();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto s = q.source_index(a), t = q.target_index(a);
    m.maps[a] = Matrix(m.dims[t], m.dims[s]);
    for (std::size_t c = 0; c < basis[s].size(); ++c) {
      Path longer = basis[s][c];
      longer.push_back(a);
      const std::size_t r = position_of(basis[t], longer);
      if (r < basis[t].size()) m.maps[a](r, c) = 1;
    }
  }
  return m;
}

Representation injective(const BoundQuiverAlgebra& algebra, VertexId i) {
  const Quiver& q = algebra.quiver;
  const auto basis = nonzero_paths(algebra, q.vertex_index(i), false);
  Representation m = zero_representation(q);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) m.dims[v] = basis[v].size();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto s = q.source_index(a), t = q.target_index(a);
    m.maps[a] = Matrix(m.dims[t], m.dims[s]);
    // dual basis: the functional on the path p (t -> i) pulls back to a p (s -> i)
    for (std::size_t r = 0; r < basis[t].size(); ++r) {
      Path longer = basis[t][r];
      longer.insert(longer.begin(), a);
      const std::size_t c = position_of(basis[s], longer);
      if (c < basis[s].size()) m.maps[a](r, c) = 1;
    }
  }
  return m;
}

Representation simple(const BoundQuiverAlgebra& algebra, VertexId i) {
  return thin_module(algebra.quiver, {algebra.quiver.vertex_index(i)});
}

ModuleCatalog::ModuleCatalog(const BoundQuiverAlgebra& algebra) {
  const Quiver& q = algebra.quiver;
  for (auto& w : enumerate_strings(algebra)) {
    Indecomposable node;
    node.support = walk_vertices(q, w);
    std::sort(node.support.begin(), node.support.end());
    node.name = render(q, w);
    node.module = std::make_shared<Representation>(string_module(algebra, w));
    node.walk = std::move(w);
    by_support_[node.support] = nodes_.size();
    nodes_.push_back(std::move(node));
  }
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    auto find = [&](const Representation& m) {
      auto k = identify(q, m);
      if (!k) throw std::logic_error("catalog: a projective/injective/simple module is not a string module");
      return *k;
    };
    projective_.push_back(find(projective(algebra, q.vertex_id(v))));
    injective_.push_back(find(injective(algebra, q.vertex_id(v))));
    simple_.push_back(find(simple(algebra, q.vertex_id(v))));
  }
}

std::optional<std::size_t> ModuleCatalog::identify(const Quiver& quiver, const Representation& m) const {
  auto parts = thin_components(quiver, m);
  if (!parts || parts->size() != 1) return std::nullopt;
  auto it = by_support_.find(parts->front());
  if (it == by_support_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ModuleCatalog::projective_vertex(std::size_t node) const {
  auto it = std::find(projective_.begin(), projective_.end(), node);
  if (it == projective_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - projective_.begin());
}

std::optional<std::size_t> ModuleCatalog::injective_vertex(std::size_t node) const {
  auto it = std::find(injective_.begin(), injective_.end(), node);
  if (it == injective_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - injective_.begin());
}

std::vector<std::size_t> ModuleCatalog::dimension_vector(std::size_t node) const { return nodes_[node].module->dims; }

std::vector<std::size_t> radical_summands(const BoundQuiverAlgebra& algebra, const ModuleCatalog& catalog, VertexId i) {
  const Quiver& q = algebra.quiver;
  auto p = catalog[catalog.projective_node(q.vertex_index(i))].module;
  const Subobject rad = radical(q, p);
  auto parts = thin_components(q, *rad.module);
  if (!parts) throw std::logic_error("radical of a projective is not thin");
  std::vector<std::size_t> out;
  for (const auto& support : *parts) {
    auto k = catalog.identify(q, thin_module(q, support));
    if (!k) throw std::logic_error("radical summand is not a string module");
    out.push_back(*k);
  }
  return out;
}

}  // namespace strdet
