#pragma once

// Auslander-Reiten quiver of a string algebra on a tree quiver, computed from
// first principles over the full list of indecomposables:
//
//   * irreducible maps X -> Y span rad(X,Y) / rad^2(X,Y), where rad^2 is the
//     span of all composites X -> Z -> Y through indecomposables Z;
//   * for non-projective N, tau N is the kernel of the sum of the irreducible
//     maps ending in N (the minimal right almost split map).

#include <optional>
#include <string>
#include <vector>

#include "strdet/representation.hpp"
#include "strdet/strings.hpp"

namespace strdet {

struct IrreducibleMap {
  std::size_t from;
  std::size_t to;
  ModuleMap map;
  bool mono;  // otherwise epi; decided by total dimension
};

struct AlmostSplitSequence {
  std::size_t left;
  std::vector<std::size_t> middles;
  std::size_t right;

  // 1 for an indecomposable middle term, 2 for two middle summands.
  int type() const { return middles.size() == 1 ? 1 : 2; }
};

struct ARQuiver {
  ModuleCatalog catalog;
  std::vector<IrreducibleMap> arrows;
  std::vector<std::vector<std::size_t>> arrows_into;   // arrow indices, by node
  std::vector<std::vector<std::size_t>> arrows_out_of;
  std::vector<std::optional<std::size_t>> tau;          // empty on projectives
  std::vector<std::optional<std::size_t>> tau_inverse;  // empty on injectives
  std::vector<AlmostSplitSequence> sequences;           // one per non-projective node

  std::optional<std::size_t> arrow_between(std::size_t from, std::size_t to) const;
};

// Throws std::logic_error when the construction meets a structural breach
// (for instance a right almost split kernel that is not a string module).
ARQuiver ar_quiver(const BoundQuiverAlgebra& algebra);

// Descriptions of every violated invariant; empty when all hold.
std::vector<std::string> check_ar_invariants(const BoundQuiverAlgebra& algebra, const ARQuiver& ar);

}  // namespace strdet
