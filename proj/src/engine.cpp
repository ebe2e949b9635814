#include "strdet/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "strdet/tree.hpp"

namespace strdet {

namespace {

std::string ideal_phrase(const VertexIdealStatus& s) {
  if (s.status == IdealStatus::zero) {
    if (s.witness) return "vertex ideal 0 (witness " + std::to_string(*s.witness) + ")";
    return "vertex ideal 0";
  }
  return "vertex ideal " + to_string(s.status) + " is non-zero";
}

}  // namespace

VertexDecision decide_vertex(const BoundQuiverAlgebra& algebra, VertexId vertex) {
  require_valid(algebra);
  VertexDecision d{vertex, classify_vertex(algebra, vertex), std::nullopt, false, {}};
  if (has_vertex_ideal(d.cls)) d.ideal = vertex_ideal(algebra, vertex);

  switch (d.cls) {
    case VertexClass::V1_1:
      d.determiner = true;
      d.rationale = "v1.1 source with one neighbour: determines rad P(i) -> P(i)";
      break;
    case VertexClass::V2_3:
      d.determiner = true;
      d.rationale = "v2.3 one arrow in, one out: determines rad P(i) -> P(i)";
      break;
    case VertexClass::V3_1:
      d.determiner = true;
      d.rationale = "v3.1 two arrows in, one out: determines rad P(i) -> P(i)";
      break;
    case VertexClass::V2_1:
      d.determiner = false;
      d.rationale = "v2.1 source with two neighbours: never a determiner";
      break;
    case VertexClass::V1_2:
    case VertexClass::V2_2:
    case VertexClass::V3_2:
    case VertexClass::V4: {
      d.determiner = !d.ideal->nonzero();
      static const char* names[] = {"", "v1.2 sink with one neighbour", "", "v2.2 sink with two neighbours",
                                    "", "", "v3.2 one arrow in, two out", "v4 two arrows in, two out"};
      d.rationale = std::string(names[static_cast<int>(d.cls)]) + ": " + ideal_phrase(*d.ideal);
      break;
    }
  }
  return d;
}

bool is_projective_determiner(const BoundQuiverAlgebra& algebra, VertexId vertex) {
  return decide_vertex(algebra, vertex).determiner;
}

DeterminerReport determiner_report(const BoundQuiverAlgebra& algebra) {
  require_valid(algebra);
  DeterminerReport r;
  r.n = static_cast<int>(algebra.quiver.vertex_count());
  for (VertexId v : algebra.quiver.vertices()) {
    VertexDecision d = decide_vertex(algebra, v);
    if (d.cls == VertexClass::V2_1) ++r.p;
    if (d.ideal && d.ideal->nonzero()) ++r.q;
    if (d.determiner) r.projective_determiners.push_back(v);
    r.vertices.push_back(std::move(d));
  }
  r.formula_value = 2 * r.n - r.p - r.q - 1;
  r.epi_determiner_count = r.n - 1;
  return r;
}

UniqueSinkCheck check_unique_sink_characterization(const BoundQuiverAlgebra& algebra, VertexId j) {
  require_valid(algebra);
  UniqueSinkCheck check;
  const Quiver& q = algebra.quiver;
  for (VertexId v : q.vertices())
    if (classify_vertex(algebra, v) == VertexClass::V4) {
      check.reason = "quiver has a v4 vertex (" + std::to_string(v) + ")";
      return check;
    }
  const VertexClass cls = classify_vertex(algebra, j);
  if (cls != VertexClass::V1_2 && cls != VertexClass::V2_2) {
    check.reason = "vertex " + std::to_string(j) + " is of class " + to_string(cls) + ", not a v1.2/v2.2 sink";
    return check;
  }
  check.applicable = true;

  const DeterminerReport report = determiner_report(algebra);
  std::vector<VertexId> all_but_j;
  for (VertexId v : q.vertices())
    if (v != j) all_but_j.push_back(v);
  check.all_but_j = report.projective_determiners == all_but_j;

  int sinks = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (q.out_degree(v) == 0) ++sinks;
  check.unique_sink = sinks == 1;  // j itself is a sink

  check.holds_forward = !check.all_but_j || check.unique_sink;
  check.holds_backward = !check.unique_sink || check.all_but_j;
  return check;
}

DynkinReport dynkin_type(const BoundQuiverAlgebra& algebra) {
  require_valid(algebra);
  const Quiver& q = algebra.quiver;
  DynkinReport r;
  const int n = static_cast<int>(q.vertex_count());
  r.rank = n;

  std::vector<std::size_t> branches;
  bool too_wide = false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const auto deg = q.neighbours(v).size();
    if (deg == 3) branches.push_back(v);
    if (deg > 3) too_wide = true;
  }

  // Vertices lying strictly inside a line or an arm, listed per line/arm.
  std::vector<std::size_t> interior;
  if (!too_wide && branches.empty()) {
    r.kind = DynkinKind::A;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
      if (q.neighbours(v).size() == 2) interior.push_back(v);
  } else if (!too_wide && branches.size() == 1) {
    const std::size_t b = branches.front();
    r.branch_vertex = q.vertex_id(b);
    for (std::size_t start : q.neighbours(b)) {
      int length = 1;
      std::size_t prev = b, cur = start;
      while (true) {
        auto next = q.neighbours(cur);
        next.erase(std::remove(next.begin(), next.end(), prev), next.end());
        if (next.empty()) break;
        interior.push_back(cur);
        prev = cur;
        cur = next.front();
        ++length;
      }
      r.arm_lengths.push_back(length);
    }
    std::sort(r.arm_lengths.begin(), r.arm_lengths.end());
    const auto& a = r.arm_lengths;
    if (a[0] == 1 && a[1] == 1) r.kind = DynkinKind::D;
    else if (a[0] == 1 && a[1] == 2 && a[2] == 2) r.kind = DynkinKind::E6;
    else if (a[0] == 1 && a[1] == 2 && a[2] == 3) r.kind = DynkinKind::E7;
    else if (a[0] == 1 && a[1] == 2 && a[2] == 4) r.kind = DynkinKind::E8;
    if (r.kind != DynkinKind::other)
      r.branch_ideal_nonzero = restricted_ideal_nonzero(algebra, neighbourhood(algebra, q.vertex_id(b)));
  }
  if (r.kind == DynkinKind::other) {
    r.arm_lengths.clear();
    r.branch_vertex.reset();
    interior.clear();
  }

  for (auto v : interior)
    if (q.in_degree(v) == 0) ++r.shape_p;
  for (VertexId v : q.vertices()) {
    const VertexClass cls = classify_vertex(algebra, v);
    if (!has_vertex_ideal(cls) || !vertex_ideal(algebra, v).nonzero()) continue;
    if (cls == VertexClass::V1_2 || cls == VertexClass::V2_2) ++r.q_sinks;
    if (cls == VertexClass::V3_1 || cls == VertexClass::V3_2) ++r.q_branch;
  }
  if (r.kind == DynkinKind::other) {
    r.shape_p = count_p(algebra);
    r.formula_value = determiner_report(algebra).formula_value;
  } else {
    r.formula_value = 2 * n - r.shape_p - r.q_sinks - r.q_branch - 1;
  }
  return r;
}

std::string to_string(DynkinKind kind, int rank) {
  switch (kind) {
    case DynkinKind::A: return "A" + std::to_string(rank);
    case DynkinKind::D: return "D" + std::to_string(rank);
    case DynkinKind::E6: return "E6";
    case DynkinKind::E7: return "E7";
    case DynkinKind::E8: return "E8";
    case DynkinKind::other: return "other";
  }
  return "?";
}

}  // namespace strdet
