#include "strdet/taxonomy.hpp"

#include <algorithm>
#include <stdexcept>

#include "strdet/tree.hpp"

namespace strdet {

VertexClass classify_vertex(const BoundQuiverAlgebra& algebra, VertexId vertex) {
  const Quiver& q = algebra.quiver;
  const std::size_t v = q.vertex_index(vertex);
  const std::size_t in = q.in_degree(v);
  const std::size_t out = q.out_degree(v);
  if (in == 0 && out == 1) return VertexClass::V1_1;
  if (in == 1 && out == 0) return VertexClass::V1_2;
  if (in == 0 && out == 2) return VertexClass::V2_1;
  if (in == 2 && out == 0) return VertexClass::V2_2;
  if (in == 1 && out == 1) return VertexClass::V2_3;
  if (in == 2 && out == 1) return VertexClass::V3_1;
  if (in == 1 && out == 2) return VertexClass::V3_2;
  if (in == 2 && out == 2) return VertexClass::V4;
  if (in == 0 && out == 0)
    throw std::invalid_argument("vertex " + std::to_string(vertex) + " has no neighbours");
  throw std::invalid_argument("vertex " + std::to_string(vertex) + " has in-degree " +
                              std::to_string(in) + " and out-degree " + std::to_string(out));
}

bool has_vertex_ideal(VertexClass cls) {
  switch (cls) {
    case VertexClass::V1_2:
    case VertexClass::V2_2:
    case VertexClass::V3_1:
    case VertexClass::V3_2:
    case VertexClass::V4: return true;
    default: return false;
  }
}

namespace {

bool is_unique_sink(const Quiver& q, std::size_t v) {
  if (q.out_degree(v) != 0) return false;
  for (std::size_t w = 0; w < q.vertex_count(); ++w)
    if (w != v && q.out_degree(w) == 0) return false;
  return true;
}

// Candidate witnesses j: two outgoing arrows, <j,i> linear and free of relations.
template <class Extra>
std::optional<VertexId> find_witness(const BoundQuiverAlgebra& algebra, VertexId vertex, Extra extra) {
  const Quiver& q = algebra.quiver;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    if (q.out_degree(j) != 2) continue;
    const TreeWalk walk = walk_between(algebra, q.vertex_id(j), vertex);
    if (!is_linear(walk) || restricted_ideal_nonzero(algebra, walk)) continue;
    if (extra(q.vertex_id(j))) return q.vertex_id(j);
  }
  return std::nullopt;
}

}  // namespace

VertexIdealStatus vertex_ideal(const BoundQuiverAlgebra& algebra, VertexId vertex) {
  require_valid(algebra);
  const Quiver& q = algebra.quiver;
  const VertexClass cls = classify_vertex(algebra, vertex);
  const std::size_t v = q.vertex_index(vertex);

  switch (cls) {
    case VertexClass::V3_1:
      return {vertex, IdealStatus::zero, std::nullopt};

    case VertexClass::V1_2:
    case VertexClass::V2_2: {
      if (auto j = find_witness(algebra, vertex, [](VertexId) { return true; }))
        return {vertex, IdealStatus::zero, j};
      if (algebra.is_path_algebra() && is_unique_sink(q, v))
        return {vertex, IdealStatus::whole_algebra, std::nullopt};
      return {vertex, IdealStatus::ideal, std::nullopt};
    }

    case VertexClass::V3_2:
    case VertexClass::V4: {
      // The two out-neighbours of the vertex must be cut off from j by relations.
      std::vector<VertexId> outs;
      for (auto a : q.outgoing(v)) outs.push_back(q.vertex_id(q.target_index(a)));
      auto blocked = [&](VertexId j) {
        return std::all_of(outs.begin(), outs.end(), [&](VertexId k) {
          return restricted_ideal_nonzero(algebra, walk_between(algebra, j, k));
        });
      };
      if (auto j = find_witness(algebra, vertex, blocked)) return {vertex, IdealStatus::zero, j};
      return {vertex, IdealStatus::restricted, std::nullopt};
    }

    default:
      throw std::invalid_argument("vertex " + std::to_string(vertex) + " of class " + to_string(cls) +
                                  " has no vertex ideal");
  }
}

VertexProfile vertex_profile(const BoundQuiverAlgebra& algebra, VertexId vertex) {
  const Quiver& q = algebra.quiver;
  const std::size_t v = q.vertex_index(vertex);
  VertexProfile profile{vertex, classify_vertex(algebra, vertex), {}, {}, std::nullopt};
  for (auto a : q.incoming(v)) profile.in_neighbours.push_back(q.vertex_id(q.source_index(a)));
  for (auto a : q.outgoing(v)) profile.out_neighbours.push_back(q.vertex_id(q.target_index(a)));
  std::sort(profile.in_neighbours.begin(), profile.in_neighbours.end());
  std::sort(profile.out_neighbours.begin(), profile.out_neighbours.end());
  if (has_vertex_ideal(profile.cls)) profile.ideal = vertex_ideal(algebra, vertex);
  return profile;
}

std::vector<VertexProfile> vertex_profiles(const BoundQuiverAlgebra& algebra) {
  std::vector<VertexProfile> out;
  for (VertexId v : algebra.quiver.vertices()) out.push_back(vertex_profile(algebra, v));
  return out;
}

int count_p(const BoundQuiverAlgebra& algebra) {
  require_valid(algebra);
  int p = 0;
  for (VertexId v : algebra.quiver.vertices())
    if (classify_vertex(algebra, v) == VertexClass::V2_1) ++p;
  return p;
}

int count_q(const BoundQuiverAlgebra& algebra) {
  require_valid(algebra);
  int q = 0;
  for (VertexId v : algebra.quiver.vertices())
    if (has_vertex_ideal(classify_vertex(algebra, v)) && vertex_ideal(algebra, v).nonzero()) ++q;
  return q;
}

std::string to_string(VertexClass cls) {
  switch (cls) {
    case VertexClass::V1_1: return "v1.1";
    case VertexClass::V1_2: return "v1.2";
    case VertexClass::V2_1: return "v2.1";
    case VertexClass::V2_2: return "v2.2";
    case VertexClass::V2_3: return "v2.3";
    case VertexClass::V3_1: return "v3.1";
    case VertexClass::V3_2: return "v3.2";
    case VertexClass::V4: return "v4";
  }
  return "?";
}

std::string to_string(IdealStatus status) {
  switch (status) {
    case IdealStatus::zero: return "0";
    case IdealStatus::whole_algebra: return "Lambda";
    case IdealStatus::ideal: return "I";
    case IdealStatus::restricted: return "I|X";
  }
  return "?";
}

}  // namespace strdet
