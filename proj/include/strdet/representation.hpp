#pragma once

// Finite-dimensional representations of a bound quiver and the maps between
// them. Left-module convention: arrow a acts as V[s(a)] -> V[t(a)], so
// maps[a] has shape dims[t(a)] x dims[s(a)].

#include <memory>
#include <vector>

#include "strdet/linalg.hpp"
#include "strdet/quiver.hpp"

namespace strdet {

struct Representation {
  std::vector<std::size_t> dims;  // by vertex index
  std::vector<Matrix> maps;       // by arrow index

  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

using ModulePtr = std::shared_ptr<const Representation>;

struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  std::vector<Matrix> blocks;  // by vertex index: target.dims[v] x source.dims[v]
};

Representation zero_representation(const Quiver& quiver);

// Thin representation: K on each listed vertex, identity on every arrow with
// both ends listed.
Representation thin_module(const Quiver& quiver, const std::vector<std::size_t>& support);

Representation direct_sum(const Quiver& quiver, const std::vector<ModulePtr>& summands);

// Shapes match and every relation composes to zero.
bool is_representation(const BoundQuiverAlgebra& algebra, const Representation& m);
bool is_homomorphism(const Quiver& quiver, const ModuleMap& f);

ModuleMap zero_map(const Quiver& quiver, ModulePtr source, ModulePtr target);
ModuleMap identity_map(const Quiver& quiver, ModulePtr m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap linear_combination(const std::vector<ModuleMap>& basis, const std::vector<Scalar>& coefficients);

// All block entries concatenated in vertex order.
Matrix flatten(const ModuleMap& f);

bool is_zero_map(const ModuleMap& f);
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);

// Basis of Hom(m, n), exact.
std::vector<ModuleMap> hom_space(const Quiver& quiver, ModulePtr m, ModulePtr n);

struct Subobject {
  ModulePtr module;
  ModuleMap map;  // inclusion into, or projection onto
};

Subobject kernel(const Quiver& quiver, const ModuleMap& f);    // map: kernel -> source
Subobject cokernel(const Quiver& quiver, const ModuleMap& f);  // map: target -> cokernel
Subobject radical(const Quiver& quiver, ModulePtr m);           // map: rad m -> m

// Socle multiplicity per vertex: dimension of the joint kernel of the outgoing maps.
std::vector<std::size_t> socle_dims(const Quiver& quiver, const Representation& m);
// Socle as a multiset of vertex ids, ascending.
std::vector<VertexId> socle(const Quiver& quiver, const Representation& m);

// Im h contained in Im f, for maps with a common target.
bool image_contained(const ModuleMap& h, const ModuleMap& f);

// Connected components of a representation whose dimensions are all <= 1,
// joined along non-zero arrow maps. Empty optional if some dimension exceeds 1.
std::optional<std::vector<std::vector<std::size_t>>> thin_components(const Quiver& quiver, const Representation& m);

}  // namespace strdet
