#pragma once

// Bound quiver algebras KQ/I with I generated by paths (zero relations).
//
// Paths are stored in traversal order: the first arrow walked comes first.
// Vertex ids are arbitrary positive integers; internally every vertex and
// arrow is addressed by its index in the owning Quiver.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace strdet {

using VertexId = long;
using Path = std::vector<std::size_t>;  // arrow indices, traversal order

struct Arrow {
  std::string id;
  VertexId source;
  VertexId target;
};

class Quiver {
 public:
  Quiver() = default;
  // Throws std::invalid_argument on duplicate vertex or arrow ids, non-positive
  // vertex ids, or arrows touching undeclared vertices.
  Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows);

  const std::vector<VertexId>& vertices() const { return vertices_; }  // ascending
  const std::vector<Arrow>& arrows() const { return arrows_; }         // declaration order
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  bool has_vertex(VertexId v) const { return vertex_index_.contains(v); }
  std::optional<std::size_t> find_vertex(VertexId v) const;
  std::size_t vertex_index(VertexId v) const;  // throws std::out_of_range
  VertexId vertex_id(std::size_t index) const { return vertices_[index]; }

  std::optional<std::size_t> find_arrow(std::string_view id) const;
  std::size_t source_index(std::size_t arrow) const { return source_[arrow]; }
  std::size_t target_index(std::size_t arrow) const { return target_[arrow]; }

  const std::vector<std::size_t>& outgoing(std::size_t vertex) const { return out_[vertex]; }
  const std::vector<std::size_t>& incoming(std::size_t vertex) const { return in_[vertex]; }
  std::size_t out_degree(std::size_t vertex) const { return out_[vertex].size(); }
  std::size_t in_degree(std::size_t vertex) const { return in_[vertex].size(); }

  // Neighbouring vertex indices (both directions), ascending by vertex id.
  std::vector<std::size_t> neighbours(std::size_t vertex) const;

  bool is_composable(const Path& path) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<VertexId, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> arrow_index_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

struct RelationSet {
  std::vector<Path> generators;  // reduced: no generator is a subpath of another
};

enum class ViolationKind {
  not_a_tree,
  too_many_arrows,       // more than two arrows in or out of a vertex
  incoming_pair,         // gamma alpha, gamma beta both nonzero at a merge
  outgoing_pair,         // alpha gamma, beta gamma both nonzero at a split
  bad_relation,          // relation of length < 2 or not a path
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

enum class CertificateState { unchecked, valid, invalid };

struct Certificate {
  CertificateState state = CertificateState::unchecked;
  std::vector<Violation> violations;

  bool valid() const { return state == CertificateState::valid; }
};

struct BoundQuiverAlgebra {
  Quiver quiver;
  RelationSet relations;
  Certificate certificate;
  std::vector<std::string> warnings;  // e.g. non-reduced generators that were dropped

  bool is_path_algebra() const { return relations.generators.empty(); }
};

// Builds an unvalidated algebra. Generators containing another generator are
// dropped with a warning, duplicates likewise. Throws std::invalid_argument for
// an empty or non-composable generator.
BoundQuiverAlgebra make_algebra(Quiver quiver, std::vector<Path> generators);

// True iff some generator occurs as a consecutive block of `path`.
// Throws std::invalid_argument if `path` is not composable.
bool path_in_ideal(const Quiver& quiver, const Path& path, const RelationSet& relations);

// Fills the certificate; never throws for malformed algebras.
BoundQuiverAlgebra validate(BoundQuiverAlgebra algebra);

// Throws std::invalid_argument unless the certificate is valid.
void require_valid(const BoundQuiverAlgebra& algebra);

bool is_tree(const Quiver& quiver);

// Arrow ids joined with spaces, traversal order.
std::string render_path(const Quiver& quiver, const Path& path);
// Composition notation: last arrow first, juxtaposed ("a3a1" for a1 then a3).
std::string render_path_composed(const Quiver& quiver, const Path& path);

std::string to_string(ViolationKind kind);

}  // namespace strdet
