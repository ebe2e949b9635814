#include "strdet/tree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace strdet {

TreeWalk walk_between(const BoundQuiverAlgebra& algebra, VertexId from, VertexId to) {
  const Quiver& q = algebra.quiver;
  const std::size_t start = q.vertex_index(from);
  const std::size_t goal = q.vertex_index(to);
  if (!is_tree(q)) throw std::invalid_argument("walk_between needs a tree quiver");

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(q.vertex_count(), none);  // arrow used to reach the vertex
  std::vector<bool> seen(q.vertex_count(), false);
  std::queue<std::size_t> frontier;
  frontier.push(start);
  seen[start] = true;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    auto visit = [&](std::size_t arrow, std::size_t w) {
      if (seen[w]) return;
      seen[w] = true;
      via[w] = arrow;
      frontier.push(w);
    };
    for (auto a : q.outgoing(v)) visit(a, q.target_index(a));
    for (auto a : q.incoming(v)) visit(a, q.source_index(a));
  }

  TreeWalk walk{from, to, {}, {}};
  std::size_t v = goal;
  walk.vertices.push_back(v);
  while (v != start) {
    const std::size_t a = via[v];
    const bool forward = q.target_index(a) == v;
    walk.steps.push_back({a, forward});
    v = forward ? q.source_index(a) : q.target_index(a);
    walk.vertices.push_back(v);
  }
  std::reverse(walk.steps.begin(), walk.steps.end());
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  return walk;
}

bool is_linear(const TreeWalk& walk) {
  return std::all_of(walk.steps.begin(), walk.steps.end(), [](const WalkStep& s) { return s.forward; });
}

TreeWalk reversed(const TreeWalk& walk) {
  TreeWalk r{walk.to, walk.from, {}, {walk.vertices.rbegin(), walk.vertices.rend()}};
  for (auto it = walk.steps.rbegin(); it != walk.steps.rend(); ++it) r.steps.push_back({it->arrow, !it->forward});
  return r;
}

NeighbourhoodSubquiver neighbourhood(const BoundQuiverAlgebra& algebra, VertexId center) {
  const Quiver& q = algebra.quiver;
  const std::size_t c = q.vertex_index(center);
  const auto around = q.neighbours(c);
  if (around.size() < 3)
    throw std::invalid_argument("vertex " + std::to_string(center) + " has " +
                                std::to_string(around.size()) + " neighbours, need at least 3");
  NeighbourhoodSubquiver sub{center, {}, {}};
  std::vector<std::size_t> members = around;
  members.push_back(c);
  std::sort(members.begin(), members.end());
  for (auto m : members) sub.members.push_back(q.vertex_id(m));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const bool s = std::binary_search(members.begin(), members.end(), q.source_index(a));
    const bool t = std::binary_search(members.begin(), members.end(), q.target_index(a));
    if (s && t) sub.arrows.push_back(a);
  }
  return sub;
}

bool restricted_ideal_nonzero(const BoundQuiverAlgebra& algebra, const std::vector<std::size_t>& vertex_indices) {
  const Quiver& q = algebra.quiver;
  std::vector<bool> inside(q.vertex_count(), false);
  for (auto v : vertex_indices) inside.at(v) = true;
  for (const auto& g : algebra.relations.generators) {
    const bool contained = std::all_of(g.begin(), g.end(), [&](std::size_t a) {
      return inside[q.source_index(a)] && inside[q.target_index(a)];
    });
    if (contained) return true;
  }
  return false;
}

bool restricted_ideal_nonzero(const BoundQuiverAlgebra& algebra, const TreeWalk& walk) {
  return restricted_ideal_nonzero(algebra, walk.vertices);
}

bool restricted_ideal_nonzero(const BoundQuiverAlgebra& algebra, const NeighbourhoodSubquiver& sub) {
  std::vector<std::size_t> indices;
  for (auto v : sub.members) indices.push_back(algebra.quiver.vertex_index(v));
  return restricted_ideal_nonzero(algebra, indices);
}

}  // namespace strdet
