#pragma once

// Brute-force minimal right determiners of all irreducible maps.
//
// For an irreducible f the determiner is tau^-1(Ker f) plus the indecomposable
// projectives that almost factor through f. Monomorphisms are cross-checked
// three ways (socle of the cokernel, almost factorisation, the assembled sum);
// epimorphisms read tau^-1 of the kernel off the translate pairing.

#include <optional>
#include <string>
#include <vector>

#include "strdet/ar_quiver.hpp"
#include "strdet/engine.hpp"

namespace strdet {

// P(i) almost factors through f: M -> N iff there are h: P(i) -> N and
// g: rad P(i) -> M with h restricted to rad P(i) equal to f g and Im h not
// inside Im f.
bool almost_factors_through(const BoundQuiverAlgebra& algebra, VertexId i, const ModuleMap& f);

struct DeterminerRecord {
  std::size_t arrow;       // index into ARQuiver::arrows
  bool mono;
  std::size_t determiner;  // node of C(f)

  std::optional<VertexId> socle_vertex;         // mono: Soc Coker f = S(i)
  std::vector<VertexId> almost_factoring;       // projectives almost factoring through f
  std::optional<std::size_t> kernel_node;       // epi: Ker f
  std::vector<std::size_t> assembled;           // tau^-1 Ker f followed by the almost-factoring projectives
  bool routes_agree = false;
};

// Throws std::logic_error if the cokernel of an irreducible mono does not
// have a simple socle, or Ker f of an epi is not a non-injective indecomposable.
DeterminerRecord minimal_right_determiner(const BoundQuiverAlgebra& algebra, const ARQuiver& ar, std::size_t arrow);

struct OracleResult {
  std::vector<DeterminerRecord> records;
  std::vector<std::size_t> det;                  // nodes, ascending
  std::vector<VertexId> projective_determiners;  // i with P(i) in Det, ascending
  std::vector<std::size_t> epi_determiners;      // nodes C(f) for epi f, ascending
  std::vector<std::size_t> type1_right_ends;     // right ends of sequences with indecomposable middle
  std::size_t type1_count = 0;
  std::size_t type2_count = 0;
  std::vector<std::string> failures;             // violated invariants (AR quiver and determiners)

  std::size_t size() const { return det.size(); }
};

OracleResult brute_force_det(const BoundQuiverAlgebra& algebra, const ARQuiver& ar);
OracleResult brute_force_det(const BoundQuiverAlgebra& algebra);

// Engine against oracle: projective determiners and total count.
struct Agreement {
  bool projective_sets_agree = false;
  bool counts_agree = false;
  std::vector<VertexId> engine_only;  // in the engine's projective set, not the oracle's
  std::vector<VertexId> oracle_only;

  bool agree() const { return projective_sets_agree && counts_agree; }
};

Agreement compare(const DeterminerReport& report, const OracleResult& oracle);

// Right determination by C, tested directly: for every indecomposable X' and
// f': X' -> Y, if f' phi factors through f for all phi: C -> X', then f'
// factors through f. `c_nodes` lists the indecomposable summands of C.
bool right_determined_by(const BoundQuiverAlgebra& algebra, const ModuleCatalog& catalog, const ModuleMap& f,
                         const std::vector<std::size_t>& c_nodes);

}  // namespace strdet
