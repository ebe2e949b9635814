#pragma once

// Combinatorial determination of the projective minimal right determiners and
// the closed formula |Det| = 2n - p - q - 1. Never constructs modules.

#include <optional>
#include <string>
#include <vector>

#include "strdet/quiver.hpp"
#include "strdet/taxonomy.hpp"

namespace strdet {

struct VertexDecision {
  VertexId vertex;
  VertexClass cls;
  std::optional<VertexIdealStatus> ideal;
  bool determiner;        // P(vertex) is a minimal right determiner
  std::string rationale;  // which criterion decided it
};

struct DeterminerReport {
  int n = 0;
  int p = 0;
  int q = 0;
  int formula_value = 0;  // 2n - p - q - 1
  std::vector<VertexId> projective_determiners;  // ascending
  int epi_determiner_count = 0;                  // n - 1
  std::vector<VertexDecision> vertices;          // ascending by vertex
};

VertexDecision decide_vertex(const BoundQuiverAlgebra& algebra, VertexId vertex);
bool is_projective_determiner(const BoundQuiverAlgebra& algebra, VertexId vertex);
DeterminerReport determiner_report(const BoundQuiverAlgebra& algebra);

// Both sides of: "the projective determiners are all P(i) with i != j" iff
// "j is the unique sink", for a sink j of class v1.2 or v2.2 in a quiver
// without v4 vertices.
struct UniqueSinkCheck {
  bool applicable = false;
  std::string reason;               // why not applicable
  bool all_but_j = false;           // left-hand side
  bool unique_sink = false;         // right-hand side
  bool holds_forward = false;       // all_but_j implies unique_sink
  bool holds_backward = false;      // unique_sink implies all_but_j
};

UniqueSinkCheck check_unique_sink_characterization(const BoundQuiverAlgebra& algebra, VertexId j);

enum class DynkinKind { A, D, E6, E7, E8, other };

struct DynkinReport {
  DynkinKind kind = DynkinKind::other;
  int rank = 0;
  std::optional<VertexId> branch_vertex;          // D and E shapes
  std::vector<int> arm_lengths;                   // ascending, D and E shapes
  std::optional<bool> branch_ideal_nonzero;       // I restricted to the branch neighbourhood
  int shape_p = 0;        // sources in the interior of the line or of an arm
  int q_sinks = 0;        // non-zero vertex ideals at sinks (v1.2, v2.2)
  int q_branch = 0;       // non-zero vertex ideals at v3 vertices
  int formula_value = 0;  // 2n - shape_p - (q_sinks + q_branch) - 1
};

DynkinReport dynkin_type(const BoundQuiverAlgebra& algebra);

std::string to_string(DynkinKind kind, int rank);

}  // namespace strdet
