#include "strdet/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace strdet {

Quiver::Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] <= 0)
      throw std::invalid_argument("vertex ids must be positive, got " + std::to_string(vertices_[i]));
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("duplicate vertex " + std::to_string(vertices_[i]));
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    const Arrow& a = arrows_[k];
    if (!arrow_index_.emplace(a.id, k).second)
      throw std::invalid_argument("duplicate arrow id '" + a.id + "'");
    auto s = find_vertex(a.source);
    auto t = find_vertex(a.target);
    if (!s || !t)
      throw std::invalid_argument("arrow '" + a.id + "' touches an undeclared vertex");
    source_.push_back(*s);
    target_.push_back(*t);
    out_[*s].push_back(k);
    in_[*t].push_back(k);
  }
}

std::optional<std::size_t> Quiver::find_vertex(VertexId v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::vertex_index(VertexId v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) throw std::out_of_range("unknown vertex " + std::to_string(v));
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view id) const {
  auto it = arrow_index_.find(std::string(id));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Quiver::neighbours(std::size_t vertex) const {
  std::set<std::size_t> result;
  for (auto a : out_[vertex]) result.insert(target_[a]);
  for (auto a : in_[vertex]) result.insert(source_[a]);
  return {result.begin(), result.end()};  // vertex indices are sorted like ids
}

bool Quiver::is_composable(const Path& path) const {
  if (path.empty()) return false;
  for (auto a : path)
    if (a >= arrows_.size()) return false;
  for (std::size_t k = 1; k < path.size(); ++k)
    if (target_[path[k - 1]] != source_[path[k]]) return false;
  return true;
}

namespace {

bool contains_block(const Path& haystack, const Path& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

}  // namespace

BoundQuiverAlgebra make_algebra(Quiver quiver, std::vector<Path> generators) {
  BoundQuiverAlgebra algebra;
  for (const auto& g : generators)
    if (!quiver.is_composable(g))
      throw std::invalid_argument("relation is not a path in the quiver");

  // Shortest first, so that any generator containing an earlier one is dropped.
  std::vector<std::size_t> order(generators.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return generators[a].size() < generators[b].size();
  });
  std::vector<bool> keep(generators.size(), true);
  for (std::size_t x = 0; x < order.size(); ++x) {
    const auto i = order[x];
    for (std::size_t y = 0; y < x; ++y) {
      const auto j = order[y];
      if (keep[j] && contains_block(generators[i], generators[j])) {
        keep[i] = false;
        algebra.warnings.push_back("relation '" + render_path(quiver, generators[i]) +
                                   "' contains relation '" + render_path(quiver, generators[j]) +
                                   "' and was dropped");
        break;
      }
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (keep[i]) algebra.relations.generators.push_back(generators[i]);
  algebra.quiver = std::move(quiver);
  return algebra;
}

bool path_in_ideal(const Quiver& quiver, const Path& path, const RelationSet& relations) {
  if (!quiver.is_composable(path)) throw std::invalid_argument("path is not composable");
  for (const auto& g : relations.generators)
    if (contains_block(path, g)) return true;
  return false;
}

bool is_tree(const Quiver& quiver) {
  const std::size_t n = quiver.vertex_count();
  if (n == 0 || quiver.arrow_count() != n - 1) return false;
  // union-find over the underlying graph; any cycle (loops included) merges a set with itself
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    auto s = find(quiver.source_index(a));
    auto t = find(quiver.target_index(a));
    if (s == t) return false;
    parent[s] = t;
  }
  return true;
}

BoundQuiverAlgebra validate(BoundQuiverAlgebra algebra) {
  const Quiver& q = algebra.quiver;
  auto& violations = algebra.certificate.violations;
  violations.clear();
  auto add = [&](ViolationKind kind, std::string message) {
    violations.push_back({kind, std::move(message)});
  };
  auto vname = [&](std::size_t v) { return std::to_string(q.vertex_id(v)); };

  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (q.source_index(a) == q.target_index(a))
      add(ViolationKind::not_a_tree, "arrow '" + q.arrows()[a].id + "' is a loop");
  if (!is_tree(q)) {
    std::ostringstream msg;
    msg << "underlying graph is not a tree (" << q.vertex_count() << " vertices, "
        << q.arrow_count() << " arrows";
    if (q.vertex_count() > 0 && q.arrow_count() == q.vertex_count() - 1)
      msg << ", contains a cycle";
    msg << ")";
    add(ViolationKind::not_a_tree, msg.str());
  }

  bool relations_ok = true;
  for (const auto& g : algebra.relations.generators) {
    if (!q.is_composable(g)) {
      add(ViolationKind::bad_relation, "relation is not a path");
      relations_ok = false;
    } else if (g.size() < 2) {
      add(ViolationKind::bad_relation,
          "relation '" + render_path(q, g) + "' has length < 2 (ideal not admissible)");
    }
  }

  auto in_ideal = [&](const Path& p) {
    if (!relations_ok) return false;
    return path_in_ideal(q, p, algebra.relations);
  };

  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (q.out_degree(v) > 2)
      add(ViolationKind::too_many_arrows,
          "vertex " + vname(v) + " has " + std::to_string(q.out_degree(v)) + " outgoing arrows");
    if (q.in_degree(v) > 2)
      add(ViolationKind::too_many_arrows,
          "vertex " + vname(v) + " has " + std::to_string(q.in_degree(v)) + " incoming arrows");

    const auto& in = q.incoming(v);
    const auto& out = q.outgoing(v);
    for (std::size_t x = 0; x < in.size(); ++x)
      for (std::size_t y = x + 1; y < in.size(); ++y)
        for (auto gamma : out) {
          if (in_ideal({in[x], gamma}) || in_ideal({in[y], gamma})) continue;
          add(ViolationKind::incoming_pair,
              "at vertex " + vname(v) + ": neither " + render_path_composed(q, {in[x], gamma}) +
                  " nor " + render_path_composed(q, {in[y], gamma}) + " is a relation");
        }
    for (std::size_t x = 0; x < out.size(); ++x)
      for (std::size_t y = x + 1; y < out.size(); ++y)
        for (auto gamma : in) {
          if (in_ideal({gamma, out[x]}) || in_ideal({gamma, out[y]})) continue;
          add(ViolationKind::outgoing_pair,
              "at vertex " + vname(v) + ": neither " + render_path_composed(q, {gamma, out[x]}) +
                  " nor " + render_path_composed(q, {gamma, out[y]}) + " is a relation");
        }
  }

  algebra.certificate.state =
      violations.empty() ? CertificateState::valid : CertificateState::invalid;
  return algebra;
}

void require_valid(const BoundQuiverAlgebra& algebra) {
  if (!algebra.certificate.valid())
    throw std::invalid_argument("algebra is not a validated string algebra on a tree quiver");
}

std::string render_path(const Quiver& quiver, const Path& path) {
  std::string out;
  for (auto a : path) {
    if (!out.empty()) out += ' ';
    out += quiver.arrows().at(a).id;
  }
  return out;
}

std::string render_path_composed(const Quiver& quiver, const Path& path) {
  std::string out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out += quiver.arrows().at(*it).id;
  return out;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::not_a_tree: return "not-a-tree";
    case ViolationKind::too_many_arrows: return "too-many-arrows";
    case ViolationKind::incoming_pair: return "incoming-pair";
    case ViolationKind::outgoing_pair: return "outgoing-pair";
    case ViolationKind::bad_relation: return "bad-relation";
  }
  return "unknown";
}

}  // namespace strdet
