#pragma once

// Vertex classes by (in-degree, out-degree) and vertex ideals.

#include <optional>
#include <string>
#include <vector>

#include "strdet/quiver.hpp"

namespace strdet {

enum class VertexClass {
  V1_1,  // source, one neighbour
  V1_2,  // sink, one neighbour
  V2_1,  // source, two neighbours
  V2_2,  // sink, two neighbours
  V2_3,  // one in, one out
  V3_1,  // two in, one out
  V3_2,  // one in, two out
  V4,    // two in, two out
};

enum class IdealStatus {
  zero,
  whole_algebra,  // J = Lambda: path algebra whose unique sink is this vertex
  ideal,          // J = I
  restricted,     // J = I restricted to the neighbourhood subquiver
};

struct VertexIdealStatus {
  VertexId vertex;
  IdealStatus status;
  std::optional<VertexId> witness;  // the vertex j certifying J = 0, when there is one

  bool nonzero() const { return status != IdealStatus::zero; }
};

struct VertexProfile {
  VertexId vertex;
  VertexClass cls;
  std::vector<VertexId> in_neighbours;   // sources of incoming arrows, ascending
  std::vector<VertexId> out_neighbours;  // targets of outgoing arrows, ascending
  std::optional<VertexIdealStatus> ideal;
};

// Throws std::out_of_range for an unknown vertex and std::invalid_argument for
// an isolated vertex or degrees outside the string-algebra range.
VertexClass classify_vertex(const BoundQuiverAlgebra& algebra, VertexId vertex);

bool has_vertex_ideal(VertexClass cls);

// Requires a validated algebra. Throws std::invalid_argument for classes
// without a vertex ideal (V1_1, V2_1, V2_3).
VertexIdealStatus vertex_ideal(const BoundQuiverAlgebra& algebra, VertexId vertex);

VertexProfile vertex_profile(const BoundQuiverAlgebra& algebra, VertexId vertex);
std::vector<VertexProfile> vertex_profiles(const BoundQuiverAlgebra& algebra);

// Number of V2_1 vertices.
int count_p(const BoundQuiverAlgebra& algebra);
// Number of vertices whose vertex ideal is non-zero.
int count_q(const BoundQuiverAlgebra& algebra);

std::string to_string(VertexClass cls);       // "v1.1", ..., "v4"
std::string to_string(IdealStatus status);    // "0", "Lambda", "I", "I|X"

}  // namespace strdet
