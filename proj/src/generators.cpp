#include "strdet/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace strdet {

namespace {

std::string arrow_name(std::size_t k) { return "a" + std::to_string(k + 1); }

std::vector<VertexId> range_ids(long n) {
  std::vector<VertexId> ids(n);
  for (long k = 0; k < n; ++k) ids[k] = k + 1;
  return ids;
}

// Arrows given as (source, target) pairs, named a1, a2, ... in order;
// relations as lists of 1-based arrow numbers in traversal order.
BoundQuiverAlgebra build(long n, const std::vector<std::pair<VertexId, VertexId>>& arrows,
                         const std::vector<std::vector<std::size_t>>& relations) {
  std::vector<Arrow> list;
  for (std::size_t k = 0; k < arrows.size(); ++k) list.push_back({arrow_name(k), arrows[k].first, arrows[k].second});
  std::vector<Path> gens;
  for (const auto& r : relations) {
    Path p;
    for (auto a : r) p.push_back(a - 1);
    gens.push_back(std::move(p));
  }
  return validate(make_algebra(Quiver(range_ids(n), std::move(list)), std::move(gens)));
}

bool contains_block(const Path& haystack, const Path& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::string tree_code(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a - 1].push_back(static_cast<int>(b - 1));
    adj[b - 1].push_back(static_cast<int>(a - 1));
  }
  std::string best;
  for (int r = 0; r < n; ++r) {
    auto c = rooted_code(adj, r, -1);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

std::vector<std::pair<VertexId, VertexId>> prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n + 1, 1);
  for (int x : seq) ++degree[x];
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int x : seq) {
    for (int leaf = 1; leaf <= n; ++leaf)
      if (degree[leaf] == 1) {
        edges.push_back({std::min(leaf, x), std::max(leaf, x)});
        --degree[leaf];
        --degree[x];
        break;
      }
  }
  int u = -1;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) {
      if (u < 0) u = v;
      else edges.push_back({u, v});
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Path> directed_paths(const Quiver& q, std::size_t min_length) {
  std::vector<Path> out;
  std::function<void(Path&)> extend = [&](Path& p) {
    if (p.size() >= min_length) out.push_back(p);
    for (auto a : q.outgoing(q.target_index(p.back()))) {
      p.push_back(a);
      extend(p);
      p.pop_back();
    }
  };
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    Path p{a};
    extend(p);
  }
  return out;
}

}  // namespace

BoundQuiverAlgebra six_vertex_example() {
  return build(6, {{1, 3}, {2, 3}, {3, 4}, {3, 5}, {6, 5}}, {{1, 3}, {2, 4}});
}

BoundQuiverAlgebra zigzag_example() { return build(4, {{1, 2}, {3, 2}, {3, 4}}, {}); }

BoundQuiverAlgebra fork_example(bool single) {
  std::vector<std::vector<std::size_t>> rel{{3, 1}};
  if (!single) rel.push_back({3, 2});
  return build(5, {{3, 1}, {3, 2}, {4, 3}, {4, 5}}, rel);
}

BoundQuiverAlgebra lambda_family(int n) {
  if (n < 1) throw std::invalid_argument("lambda family level must be at least 1");
  std::vector<std::pair<VertexId, VertexId>> arrows;
  VertexId next = 1;
  const VertexId centre = next++;
  struct Leaf {
    VertexId id;
    bool source;
  };
  std::vector<Leaf> leaves;
  for (int k = 0; k < 2; ++k) {
    leaves.push_back({next, true});
    arrows.push_back({next++, centre});
  }
  for (int k = 0; k < 2; ++k) {
    leaves.push_back({next, false});
    arrows.push_back({centre, next++});
  }
  for (int level = 2; level <= n; ++level) {
    std::vector<Leaf> grown;
    for (const Leaf& leaf : leaves) {
      // a source leaf already has one outgoing arrow, a sink leaf one incoming
      const int ins = leaf.source ? 2 : 1;
      const int outs = leaf.source ? 1 : 2;
      for (int k = 0; k < ins; ++k) {
        grown.push_back({next, true});
        arrows.push_back({next++, leaf.id});
      }
      for (int k = 0; k < outs; ++k) {
        grown.push_back({next, false});
        arrows.push_back({leaf.id, next++});
      }
    }
    leaves = std::move(grown);
  }
  const long count = next - 1;

  std::vector<std::vector<std::size_t>> relations;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    for (std::size_t b = 0; b < arrows.size(); ++b)
      if (arrows[a].second == arrows[b].first) relations.push_back({a + 1, b + 1});
  return build(count, arrows, relations);
}

BoundQuiverAlgebra linear_example(int n, const std::string& orientation) {
  if (n < 2) throw std::invalid_argument("linear example needs at least 2 vertices");
  if (!orientation.empty() && orientation.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("orientation must have " + std::to_string(n - 1) + " letters");
  std::vector<std::pair<VertexId, VertexId>> arrows;
  for (int k = 1; k < n; ++k) {
    const char o = orientation.empty() ? 'r' : orientation[k - 1];
    if (o == 'r') arrows.push_back({k, k + 1});
    else if (o == 'l') arrows.push_back({k + 1, k});
    else throw std::invalid_argument("orientation letters must be 'r' or 'l'");
  }
  return build(n, arrows, {});
}

BoundQuiverAlgebra d_example(int n) {
  if (n < 4) throw std::invalid_argument("D shape needs at least 4 vertices");
  std::vector<std::pair<VertexId, VertexId>> arrows{{1, 3}, {2, 3}};
  for (int k = 3; k < n; ++k) arrows.push_back({k, k + 1});
  return build(n, arrows, {{1, 3}});
}

std::vector<std::vector<std::pair<VertexId, VertexId>>> unlabeled_trees(int n) {
  if (n < 1) throw std::invalid_argument("tree size must be positive");
  if (n == 1) return {{}};
  if (n == 2) return {{{1, 2}}};
  std::vector<std::vector<std::pair<VertexId, VertexId>>> out;
  std::set<std::string> seen;
  std::vector<int> seq(n - 2, 1);
  while (true) {
    auto edges = prufer_decode(n, seq);
    if (seen.insert(tree_code(n, edges)).second) out.push_back(std::move(edges));
    int k = n - 3;
    while (k >= 0 && seq[k] == n) seq[k--] = 1;
    if (k < 0) break;
    ++seq[k];
  }
  return out;
}

std::vector<BoundQuiverAlgebra> enumerate_small_algebras(int n_min, int n_max) {
  if (n_min < 2) throw std::invalid_argument("enumeration starts at 2 vertices");
  std::vector<BoundQuiverAlgebra> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (const auto& edges : unlabeled_trees(n)) {
      const std::size_t m = edges.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Arrow> arrows;
        for (std::size_t k = 0; k < m; ++k) {
          auto [a, b] = edges[k];
          if (mask >> k & 1) std::swap(a, b);
          arrows.push_back({arrow_name(k), a, b});
        }
        const Quiver q(range_ids(n), arrows);
        const auto paths = directed_paths(q, 2);
        for (std::size_t sub = 0; sub < (std::size_t{1} << paths.size()); ++sub) {
          std::vector<Path> gens;
          for (std::size_t k = 0; k < paths.size(); ++k)
            if (sub >> k & 1) gens.push_back(paths[k]);
          bool antichain = true;
          for (std::size_t x = 0; x < gens.size() && antichain; ++x)
            for (std::size_t y = 0; y < gens.size() && antichain; ++y)
              if (x != y && contains_block(gens[x], gens[y])) antichain = false;
          if (!antichain) continue;
          auto algebra = validate(make_algebra(q, std::move(gens)));
          if (algebra.certificate.valid()) out.push_back(std::move(algebra));
        }
      }
    }
  }
  return out;
}

}  // namespace strdet
