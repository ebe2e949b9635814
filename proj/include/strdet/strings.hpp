#pragma once

// Strings of a string algebra on a tree quiver and the modules they define.
//
// On a tree a reduced walk never revisits a vertex, so every string is a
// simple path of the underlying graph and every string module is thin. The
// catalog below indexes the indecomposables by their support.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strdet/quiver.hpp"
#include "strdet/representation.hpp"

namespace strdet {

struct Letter {
  std::size_t arrow;
  bool direct;  // direct letters walk along the arrow, inverse letters against it

  bool operator==(const Letter&) const = default;
};

struct StringWalk {
  std::size_t start;  // vertex index where the walk begins
  std::vector<Letter> letters;

  bool operator==(const StringWalk&) const = default;
};

// Vertex indices visited, in walk order.
std::vector<std::size_t> walk_vertices(const Quiver& quiver, const StringWalk& w);
StringWalk inverse(const Quiver& quiver, const StringWalk& w);

// "e3" for the trivial string at vertex 3, otherwise letters such as "a1 a3^-1".
std::string render(const Quiver& quiver, const StringWalk& w);

// Consecutive letters compose, no letter is followed by its own inverse, and
// neither a direct run nor a reversed inverse run contains a relation.
bool is_string(const BoundQuiverAlgebra& algebra, const StringWalk& w);

// The one of w and its inverse with the smaller rendering.
StringWalk canonical(const Quiver& quiver, const StringWalk& w);

// All strings up to inversion in canonical form: trivial strings by vertex
// first, then by length and rendering.
std::vector<StringWalk> enumerate_strings(const BoundQuiverAlgebra& algebra);

// Basis indexed by walk positions. Throws std::invalid_argument for non-strings.
Representation string_module(const BoundQuiverAlgebra& algebra, const StringWalk& w);

// P(i) on the basis of non-zero paths starting at i; I(i) on the basis of
// non-zero paths ending at i; S(i).
Representation projective(const BoundQuiverAlgebra& algebra, VertexId i);
Representation injective(const BoundQuiverAlgebra& algebra, VertexId i);
Representation simple(const BoundQuiverAlgebra& algebra, VertexId i);

struct Indecomposable {
  StringWalk walk;
  std::string name;                  // rendering of the canonical string
  std::vector<std::size_t> support;  // vertex indices, ascending
  ModulePtr module;
};

class ModuleCatalog {
 public:
  explicit ModuleCatalog(const BoundQuiverAlgebra& algebra);

  std::size_t size() const { return nodes_.size(); }
  const Indecomposable& operator[](std::size_t k) const { return nodes_[k]; }
  const std::vector<Indecomposable>& nodes() const { return nodes_; }

  // Node of an indecomposable thin representation, if it is one of ours.
  std::optional<std::size_t> identify(const Quiver& quiver, const Representation& m) const;

  std::size_t projective_node(std::size_t vertex) const { return projective_[vertex]; }
  std::size_t injective_node(std::size_t vertex) const { return injective_[vertex]; }
  std::size_t simple_node(std::size_t vertex) const { return simple_[vertex]; }
  // Vertex index i with node == P(i), if any.
  std::optional<std::size_t> projective_vertex(std::size_t node) const;
  std::optional<std::size_t> injective_vertex(std::size_t node) const;

  std::vector<std::size_t> dimension_vector(std::size_t node) const;

 private:
  std::vector<Indecomposable> nodes_;
  std::map<std::vector<std::size_t>, std::size_t> by_support_;
  std::vector<std::size_t> projective_, injective_, simple_;
};

// Nodes of the indecomposable summands of rad P(i).
std::vector<std::size_t> radical_summands(const BoundQuiverAlgebra& algebra, const ModuleCatalog& catalog, VertexId i);

}  // namespace strdet
