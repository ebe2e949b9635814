#pragma once

// Hand-written fixtures and small independent oracles shared by the tests.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "strdet/parser.hpp"
#include "strdet/representation.hpp"

namespace fixtures {

inline const char* const six_vertex = R"(# 1 -> 3 <- 2, 3 -> 4, 3 -> 5 <- 6
vertices: 6
arrow a1: 1 -> 3
arrow a2: 2 -> 3
arrow a3: 3 -> 4
arrow a4: 3 -> 5
arrow a5: 6 -> 5
relation: a1 a3
relation: a2 a4
)";

inline const char* const zigzag = R"(vertices: 4
arrow a1: 1 -> 2
arrow a2: 3 -> 2
arrow a3: 3 -> 4
)";

inline const char* const fork_both = R"(vertices: 5
arrow a1: 3 -> 1
arrow a2: 3 -> 2
arrow a3: 4 -> 3
arrow a4: 4 -> 5
relation: a3 a1
relation: a3 a2
)";

inline const char* const fork_single = R"(vertices: 5
arrow a1: 3 -> 1
arrow a2: 3 -> 2
arrow a3: 4 -> 3
arrow a4: 4 -> 5
relation: a3 a1
)";

inline const char* const a2 = "vertices: 2\narrow a: 1 -> 2\n";

inline const char* const a3_line = "vertices: 3\narrow a1: 1 -> 2\narrow a2: 2 -> 3\n";

inline const char* const a3_relation = "vertices: 3\narrow a1: 1 -> 2\narrow a2: 2 -> 3\nrelation: a1 a2\n";

// centre 1 with 2 -> 1, 3 -> 1, 1 -> 4, 1 -> 5; all length-2 paths zero
inline const char* const star5 = R"(vertices: 5
arrow b1: 2 -> 1
arrow b2: 3 -> 1
arrow b3: 1 -> 4
arrow b4: 1 -> 5
relation: b1 b3
relation: b1 b4
relation: b2 b3
relation: b2 b4
)";

inline const char* const triangle = R"(vertices: 3
arrow a1: 1 -> 2
arrow a2: 2 -> 3
arrow a3: 3 -> 1
)";

inline const char* const claw_out = R"(vertices: 4
arrow a1: 1 -> 2
arrow a2: 1 -> 3
arrow a3: 1 -> 4
)";

inline strdet::BoundQuiverAlgebra load(const char* text) { return strdet::validate(strdet::parse_algebra(text)); }

}  // namespace fixtures

namespace oracle {

// Consecutive-block search by plain index loops.
inline bool contains_relation(const strdet::Path& path, const std::vector<strdet::Path>& gens) {
  for (const auto& g : gens)
    for (std::size_t start = 0; start + g.size() <= path.size(); ++start) {
      bool all = true;
      for (std::size_t k = 0; k < g.size(); ++k) all = all && path[start + k] == g[k];
      if (all) return true;
    }
  return false;
}

// Number of strings up to inversion, by walking signed letters from every
// vertex: no immediate backtrack, no relation inside a run of one direction.
inline std::size_t count_strings(const strdet::BoundQuiverAlgebra& a) {
  const auto& q = a.quiver;
  const auto& gens = a.relations.generators;
  std::size_t walks = 0;
  struct Step {
    std::size_t arrow;
    bool direct;
  };
  auto runs_ok = [&](const std::vector<Step>& w) {
    std::size_t k = 0;
    while (k < w.size()) {
      std::size_t e = k;
      strdet::Path run;
      while (e < w.size() && w[e].direct == w[k].direct) run.push_back(w[e++].arrow);
      if (!w[k].direct) std::reverse(run.begin(), run.end());
      if (contains_relation(run, gens)) return false;
      k = e;
    }
    return true;
  };
  std::vector<Step> w;
  auto grow = [&](auto&& self, std::size_t at) -> void {
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      for (bool direct : {true, false}) {
        const std::size_t from = direct ? q.source_index(a) : q.target_index(a);
        const std::size_t to = direct ? q.target_index(a) : q.source_index(a);
        if (from != at) continue;
        if (!w.empty() && w.back().arrow == a) continue;
        w.push_back({a, direct});
        if (runs_ok(w)) {
          ++walks;
          self(self, to);
        }
        w.pop_back();
      }
  };
  for (std::size_t v = 0; v < q.vertex_count(); ++v) grow(grow, v);
  return q.vertex_count() + walks / 2;
}

// dim Hom(M, N) for thin M, N: one scalar per common vertex, tied together or
// forced to zero by the arrow equations; counted with a union-find.
inline std::size_t thin_hom_dim(const strdet::Quiver& q, const strdet::Representation& m,
                                const strdet::Representation& n) {
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> parent(nv);
  for (std::size_t v = 0; v < nv; ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto common = [&](std::size_t v) { return m.dims[v] == 1 && n.dims[v] == 1; };
  std::vector<bool> zero(nv, false);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto s = q.source_index(a), t = q.target_index(a);
    if (m.dims[s] == 0 || n.dims[t] == 0) continue;  // the equation lives in Hom(M_s, N_t)
    const bool lhs = common(t) && m.maps[a](0, 0) != 0;
    const bool rhs = common(s) && n.maps[a](0, 0) != 0;
    if (lhs && rhs) parent[find(s)] = find(t);
    else if (lhs) zero[t] = true;
    else if (rhs) zero[s] = true;
  }
  std::set<std::size_t> free_classes, zero_classes;
  for (std::size_t v = 0; v < nv; ++v)
    if (common(v) && zero[v]) zero_classes.insert(find(v));
  for (std::size_t v = 0; v < nv; ++v)
    if (common(v) && !zero_classes.count(find(v))) free_classes.insert(find(v));
  return free_classes.size();
}

}  // namespace oracle
