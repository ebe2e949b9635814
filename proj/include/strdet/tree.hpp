#pragma once

// Walks and full subquivers inside a tree quiver.

#include <cstddef>
#include <vector>

#include "strdet/quiver.hpp"

namespace strdet {

struct WalkStep {
  std::size_t arrow;
  bool forward;  // walked from the arrow's source to its target
};

// The unique simple path from `from` to `to` in the underlying tree.
struct TreeWalk {
  VertexId from;
  VertexId to;
  std::vector<WalkStep> steps;
  std::vector<std::size_t> vertices;  // vertex indices visited, from..to inclusive
};

struct NeighbourhoodSubquiver {
  VertexId center;
  std::vector<VertexId> members;     // ascending, center included
  std::vector<std::size_t> arrows;   // induced arrows, ascending index
};

// Throws std::out_of_range for unknown vertices and std::invalid_argument if
// the quiver is not a tree.
TreeWalk walk_between(const BoundQuiverAlgebra& algebra, VertexId from, VertexId to);

// A directed path from `from` to `to`; the empty walk counts.
bool is_linear(const TreeWalk& walk);

TreeWalk reversed(const TreeWalk& walk);

// Full subquiver on `center` and its neighbours. Throws std::invalid_argument
// if the center has fewer than three neighbours.
NeighbourhoodSubquiver neighbourhood(const BoundQuiverAlgebra& algebra, VertexId center);

// I restricted to a full subquiver is non-zero iff some generator has all of
// its arrows inside the subquiver.
bool restricted_ideal_nonzero(const BoundQuiverAlgebra& algebra, const std::vector<std::size_t>& vertex_indices);
bool restricted_ideal_nonzero(const BoundQuiverAlgebra& algebra, const TreeWalk& walk);
bool restricted_ideal_nonzero(const BoundQuiverAlgebra& algebra, const NeighbourhoodSubquiver& sub);

}  // namespace strdet
