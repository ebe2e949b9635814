#pragma once

// Named example algebras and exhaustive enumeration of small string algebras
// on tree quivers. Every generator returns a validated algebra with vertex ids
// 1..n and arrow ids a1, a2, ...

#include <string>
#include <vector>

#include "strdet/quiver.hpp"

namespace strdet {

// 1 -> 3 <- 2, 3 -> 4, 3 -> 5 <- 6 with a1 a3 = 0 and a2 a4 = 0.
BoundQuiverAlgebra six_vertex_example();

// 1 -> 2 <- 3 -> 4, no relations.
BoundQuiverAlgebra zigzag_example();

// 3 -> 1, 3 -> 2, 4 -> 3, 4 -> 5. Relations a3 a1 and, unless `single`,
// also a3 a2.
BoundQuiverAlgebra fork_example(bool single);

// The level-n member of the family grown from the five-vertex star (two
// arrows in, two out of the centre): each leaf becomes a vertex with two
// incoming and two outgoing arrows, and all paths of length 2 are zero.
// 2 * 3^n - 1 vertices. Requires n >= 1.
BoundQuiverAlgebra lambda_family(int n);

// Line 1 - 2 - ... - n, no relations. orientation[k] is 'r' for k+1 -> k+2 and
// 'l' for k+2 -> k+1; an empty string means all 'r'. Requires n >= 2.
BoundQuiverAlgebra linear_example(int n, const std::string& orientation = "");

// 1 -> 3 <- 2, then 3 -> 4 -> ... -> n with a1 a3 = 0. Requires n >= 4.
BoundQuiverAlgebra d_example(int n);

// Every valid algebra on an unlabeled tree with n_min..n_max vertices (one
// labeling per tree), over all orientations and all reduced sets of monomial
// relations. Deterministic order. Requires n_min >= 2.
std::vector<BoundQuiverAlgebra> enumerate_small_algebras(int n_min, int n_max);

// Unlabeled trees on n vertices as edge lists over 1..n, deduplicated up to
// isomorphism.
std::vector<std::vector<std::pair<VertexId, VertexId>>> unlabeled_trees(int n);

}  // namespace strdet
