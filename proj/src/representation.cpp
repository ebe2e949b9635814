#include "strdet/representation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strdet {

std::size_t Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

Representation zero_representation(const Quiver& quiver) {
  Representation m;
  m.dims.assign(quiver.vertex_count(), 0);
  m.maps.assign(quiver.arrow_count(), Matrix());
  return m;
}

Representation thin_module(const Quiver& quiver, const std::vector<std::size_t>& support) {
  Representation m = zero_representation(quiver);
  for (auto v : support) m.dims.at(v) = 1;
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto s = quiver.source_index(a), t = quiver.target_index(a);
    m.maps[a] = Matrix(m.dims[t], m.dims[s]);
    if (m.dims[s] && m.dims[t]) m.maps[a](0, 0) = 1;
  }
  return m;
}

Representation direct_sum(const Quiver& quiver, const std::vector<ModulePtr>& summands) {
  Representation m = zero_representation(quiver);
  for (const auto& x : summands)
    for (std::size_t v = 0; v < m.dims.size(); ++v) m.dims[v] += x->dims[v];
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto s = quiver.source_index(a), t = quiver.target_index(a);
    Matrix block(m.dims[t], m.dims[s]);
    std::size_t row = 0, col = 0;
    for (const auto& x : summands) {
      const Matrix& xa = x->maps[a];
      for (std::size_t r = 0; r < xa.rows(); ++r)
        for (std::size_t c = 0; c < xa.cols(); ++c) block(row + r, col + c) = xa(r, c);
      row += x->dims[t];
      col += x->dims[s];
    }
    m.maps[a] = std::move(block);
  }
  return m;
}

bool is_representation(const BoundQuiverAlgebra& algebra, const Representation& m) {
  const Quiver& q = algebra.quiver;
  if (m.dims.size() != q.vertex_count() || m.maps.size() != q.arrow_count()) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (m.maps[a].rows() != m.dims[q.target_index(a)] || m.maps[a].cols() != m.dims[q.source_index(a)])
      return false;
  for (const auto& g : algebra.relations.generators) {
    Matrix product = Matrix::identity(m.dims[q.source_index(g.front())]);
    for (auto a : g) product = m.maps[a] * product;
    if (!product.is_zero()) return false;
  }
  return true;
}

bool is_homomorphism(const Quiver& quiver, const ModuleMap& f) {
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto s = quiver.source_index(a), t = quiver.target_index(a);
    if (!(f.blocks[t] * f.source->maps[a] == f.target->maps[a] * f.blocks[s])) return false;
  }
  return true;
}

ModuleMap zero_map(const Quiver& quiver, ModulePtr source, ModulePtr target) {
  ModuleMap f{source, target, {}};
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v)
    f.blocks.emplace_back(target->dims[v], source->dims[v]);
  return f;
}

ModuleMap identity_map(const Quiver& quiver, ModulePtr m) {
  ModuleMap f{m, m, {}};
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) f.blocks.push_back(Matrix::identity(m->dims[v]));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

ModuleMap linear_combination(const std::vector<ModuleMap>& basis, const std::vector<Scalar>& coefficients) {
  if (basis.empty()) throw std::invalid_argument("linear_combination: empty basis");
  ModuleMap h = basis.front();
  for (auto& b : h.blocks) b = Matrix(b.rows(), b.cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(coefficients[k]) == 0) continue;
    for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v] = h.blocks[v] + coefficients[k] * basis[k].blocks[v];
  }
  return h;
}

Matrix flatten(const ModuleMap& f) {
  std::size_t size = 0;
  for (const auto& b : f.blocks) size += b.rows() * b.cols();
  Matrix out(size, 1);
  std::size_t k = 0;
  for (const auto& b : f.blocks)
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(k++, 0) = b(r, c);
  return out;
}

bool is_zero_map(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool is_injective(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.cols()) return false;
  return true;
}

bool is_surjective(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.rows()) return false;
  return true;
}

std::vector<ModuleMap> hom_space(const Quiver& quiver, ModulePtr m, ModulePtr n) {
  const std::size_t nv = quiver.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n->dims[v] * m->dims[v];
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return {};
  // entry (r, c) of block v is unknown offset[v] + r * m.dims[v] + c
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * m->dims[v] + c; };

  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto s = quiver.source_index(a), t = quiver.target_index(a);
    const Matrix& ma = m->maps[a];  // m[t] x m[s]
    const Matrix& na = n->maps[a];  // n[t] x n[s]
    // (B_t * ma - na * B_s)(r, c) = 0 for r < n[t], c < m[s]
    for (std::size_t r = 0; r < n->dims[t]; ++r)
      for (std::size_t c = 0; c < m->dims[s]; ++c) {
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (std::size_t k = 0; k < m->dims[t]; ++k)
          if (sgn(ma(k, c)) != 0) row.emplace_back(var(t, r, k), ma(k, c));
        for (std::size_t k = 0; k < n->dims[s]; ++k)
          if (sgn(na(r, k)) != 0) row.emplace_back(var(s, k, c), -na(r, k));
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  Matrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [col, value] : rows[i]) system(i, col) += value;

  const Matrix basis = nullspace(system);
  std::vector<ModuleMap> result;
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    ModuleMap f{m, n, {}};
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix b(n->dims[v], m->dims[v]);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = basis(var(v, r, c), k);
      f.blocks.push_back(std::move(b));
    }
    result.push_back(std::move(f));
  }
  return result;
}

namespace {

// Matrices whose columns are a basis of the given per-vertex subspaces; returns
// the submodule they span together with its inclusion. The subspaces must be
// stable under the arrows.
Subobject submodule(const Quiver& quiver, ModulePtr m, std::vector<Matrix> bases) {
  auto sub = std::make_shared<Representation>(zero_representation(quiver));
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) sub->dims[v] = bases[v].cols();
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto s = quiver.source_index(a), t = quiver.target_index(a);
    auto x = solve(bases[t], m->maps[a] * bases[s]);
    if (!x) throw std::logic_error("submodule: subspace is not stable under an arrow");
    sub->maps[a] = std::move(*x);
  }
  return {sub, ModuleMap{sub, m, std::move(bases)}};
}

Matrix independent_columns(const Matrix& a) {
  return a.columns(row_reduce(a).pivots);
}

}  // namespace

Subobject kernel(const Quiver& quiver, const ModuleMap& f) {
  std::vector<Matrix> bases;
  for (const auto& b : f.blocks) bases.push_back(nullspace(b));
  return submodule(quiver, f.source, std::move(bases));
}

Subobject cokernel(const Quiver& quiver, const ModuleMap& f) {
  const std::size_t nv = quiver.vertex_count();
  std::vector<Matrix> projections;  // rows annihilate the image
  for (const auto& b : f.blocks) projections.push_back(left_nullspace(b));
  auto quotient = std::make_shared<Representation>(zero_representation(quiver));
  for (std::size_t v = 0; v < nv; ++v) quotient->dims[v] = projections[v].rows();
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto s = quiver.source_index(a), t = quiver.target_index(a);
    // Q_a * pi_s = pi_t * N_a
    const Matrix rhs = projections[t] * f.target->maps[a];
    auto xt = solve(projections[s].transpose(), rhs.transpose());
    if (!xt) throw std::logic_error("cokernel: image is not a submodule");
    quotient->maps[a] = xt->transpose();
  }
  return {quotient, ModuleMap{f.target, quotient, std::move(projections)}};
}

Subobject radical(const Quiver& quiver, ModulePtr m) {
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
    Matrix span(m->dims[v], 0);
    for (auto a : quiver.incoming(v)) span = Matrix::hstack(span, m->maps[a]);
    bases.push_back(independent_columns(span));
  }
  return submodule(quiver, m, std::move(bases));
}

std::vector<std::size_t> socle_dims(const Quiver& quiver, const Representation& m) {
  std::vector<std::size_t> out(quiver.vertex_count(), 0);
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
    Matrix stacked(0, m.dims[v]);
    for (auto a : quiver.outgoing(v)) stacked = Matrix::vstack(stacked, m.maps[a]);
    out[v] = m.dims[v] - rank(stacked);
  }
  return out;
}

std::vector<VertexId> socle(const Quiver& quiver, const Representation& m) {
  std::vector<VertexId> out;
  const auto dims = socle_dims(quiver, m);
  for (std::size_t v = 0; v < dims.size(); ++v)
    for (std::size_t k = 0; k < dims[v]; ++k) out.push_back(quiver.vertex_id(v));
  return out;
}

bool image_contained(const ModuleMap& h, const ModuleMap& f) {
  for (std::size_t v = 0; v < h.blocks.size(); ++v)
    if (!column_space_contains(f.blocks[v], h.blocks[v])) return false;
  return true;
}

std::optional<std::vector<std::vector<std::size_t>>> thin_components(const Quiver& quiver, const Representation& m) {
  const std::size_t nv = quiver.vertex_count();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t v = 0; v < nv; ++v)
    if (m.dims[v] > 1) return std::nullopt;
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto s = quiver.source_index(a), t = quiver.target_index(a);
    if (m.dims[s] == 1 && m.dims[t] == 1 && sgn(m.maps[a](0, 0)) != 0) parent[find(s)] = find(t);
  }
  std::vector<std::vector<std::size_t>> groups(nv);
  for (std::size_t v = 0; v < nv; ++v)
    if (m.dims[v] == 1) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& g : groups)
    if (!g.empty()) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace strdet
