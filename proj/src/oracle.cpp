#include "strdet/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

namespace strdet {

namespace {

Matrix as_columns(const std::vector<Matrix>& vectors, std::size_t length) {
  Matrix m(length, vectors.size());
  for (std::size_t k = 0; k < vectors.size(); ++k)
    for (std::size_t r = 0; r < length; ++r) m(r, k) = vectors[k](r, 0);
  return m;
}

std::size_t flat_length(const Representation& source, const Representation& target) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < source.dims.size(); ++v) n += source.dims[v] * target.dims[v];
  return n;
}

}  // namespace

bool almost_factors_through(const BoundQuiverAlgebra& algebra, VertexId i, const ModuleMap& f) {
  const Quiver& q = algebra.quiver;
  auto p = std::make_shared<Representation>(projective(algebra, i));
  const Subobject rad = radical(q, p);
  const auto hs = hom_space(q, p, f.target);
  if (hs.empty()) return false;
  const auto gs = hom_space(q, rad.module, f.source);

  // unknowns: coefficients of the h basis, then of the g basis
  const std::size_t length = flat_length(*rad.module, *f.target);
  std::vector<Matrix> columns;
  for (const auto& h : hs) columns.push_back(flatten(compose(h, rad.map)));
  for (const auto& g : gs) columns.push_back(Scalar(-1) * flatten(compose(f, g)));
  const Matrix solutions = nullspace(as_columns(columns, length));

  for (std::size_t k = 0; k < solutions.cols(); ++k) {
    std::vector<Scalar> coeff(hs.size());
    for (std::size_t a = 0; a < hs.size(); ++a) coeff[a] = solutions(a, k);
    if (std::all_of(coeff.begin(), coeff.end(), [](const Scalar& x) { return sgn(x) == 0; })) continue;
    if (!image_contained(linear_combination(hs, coeff), f)) return true;
  }
  return false;
}

DeterminerRecord minimal_right_determiner(const BoundQuiverAlgebra& algebra, const ARQuiver& ar, std::size_t arrow) {
  const Quiver& q = algebra.quiver;
  const IrreducibleMap& irr = ar.arrows.at(arrow);
  const ModuleMap& f = irr.map;
  const auto name = [&](std::size_t k) { return "[" + ar.catalog[k].name + "]"; };
  const std::string label = name(irr.from) + " -> " + name(irr.to);

  DeterminerRecord rec;
  rec.arrow = arrow;
  rec.mono = irr.mono;

  for (VertexId v : q.vertices())
    if (almost_factors_through(algebra, v, f)) rec.almost_factoring.push_back(v);

  const Subobject ker = kernel(q, f);
  if (!ker.module->is_zero()) {
    rec.kernel_node = ar.catalog.identify(q, *ker.module);
    if (!rec.kernel_node) throw std::logic_error(label + ": kernel is not an indecomposable string module");
    const auto up = ar.tau_inverse[*rec.kernel_node];
    if (!up) throw std::logic_error(label + ": kernel is injective, no inverse translate");
    rec.assembled.push_back(*up);
  }
  for (VertexId v : rec.almost_factoring) rec.assembled.push_back(ar.catalog.projective_node(q.vertex_index(v)));

  if (irr.mono) {
    const Subobject coker = cokernel(q, f);
    const auto soc = socle(q, *coker.module);
    if (soc.size() != 1)
      throw std::logic_error(label + ": cokernel socle has " + std::to_string(soc.size()) + " simple summands");
    rec.socle_vertex = soc.front();
    rec.determiner = ar.catalog.projective_node(q.vertex_index(soc.front()));
    rec.routes_agree = !rec.kernel_node && rec.almost_factoring == std::vector<VertexId>{soc.front()} &&
                       rec.assembled == std::vector<std::size_t>{rec.determiner};
  } else {
    if (!rec.kernel_node) throw std::logic_error(label + ": epimorphism with zero kernel");
    rec.determiner = *ar.tau_inverse[*rec.kernel_node];
    rec.routes_agree = rec.almost_factoring.empty() && rec.assembled == std::vector<std::size_t>{rec.determiner} &&
                       !ar.catalog.projective_vertex(rec.determiner);
  }
  return rec;
}

OracleResult brute_force_det(const BoundQuiverAlgebra& algebra, const ARQuiver& ar) {
  const Quiver& q = algebra.quiver;
  OracleResult out;
  out.failures = check_ar_invariants(algebra, ar);
  const auto name = [&](std::size_t k) { return "[" + ar.catalog[k].name + "]"; };

  std::set<std::size_t> det, epi, type1;
  std::set<VertexId> projective;
  for (std::size_t k = 0; k < ar.arrows.size(); ++k) {
    DeterminerRecord rec = minimal_right_determiner(algebra, ar, k);
    const auto& irr = ar.arrows[k];
    if (!rec.routes_agree)
      out.failures.push_back(name(irr.from) + " -> " + name(irr.to) + ": determiner routes disagree");
    if (irr.mono) {
      const Subobject coker = cokernel(q, irr.map);
      if (!ar.catalog.identify(q, *coker.module))
        out.failures.push_back(name(irr.from) + " -> " + name(irr.to) + ": cokernel is not indecomposable");
    }
    det.insert(rec.determiner);
    if (auto v = ar.catalog.projective_vertex(rec.determiner)) projective.insert(q.vertex_id(*v));
    if (!irr.mono) epi.insert(rec.determiner);
    out.records.push_back(std::move(rec));
  }
  for (const auto& s : ar.sequences) {
    if (s.type() == 1) {
      ++out.type1_count;
      type1.insert(s.right);
    } else {
      ++out.type2_count;
    }
  }
  out.det.assign(det.begin(), det.end());
  out.projective_determiners.assign(projective.begin(), projective.end());
  out.epi_determiners.assign(epi.begin(), epi.end());
  out.type1_right_ends.assign(type1.begin(), type1.end());

  const std::size_t n = q.vertex_count();
  if (out.type1_count != n - 1)
    out.failures.push_back(std::to_string(out.type1_count) + " sequences with indecomposable middle term, expected " +
                           std::to_string(n - 1));
  if (out.epi_determiners != out.type1_right_ends)
    out.failures.push_back("determiners of epimorphisms differ from the right ends of sequences with indecomposable middle");
  return out;
}

OracleResult brute_force_det(const BoundQuiverAlgebra& algebra) { return brute_force_det(algebra, ar_quiver(algebra)); }

Agreement compare(const DeterminerReport& report, const OracleResult& oracle) {
  Agreement a;
  const auto& e = report.projective_determiners;
  const auto& o = oracle.projective_determiners;
  std::set_difference(e.begin(), e.end(), o.begin(), o.end(), std::back_inserter(a.engine_only));
  std::set_difference(o.begin(), o.end(), e.begin(), e.end(), std::back_inserter(a.oracle_only));
  a.projective_sets_agree = a.engine_only.empty() && a.oracle_only.empty();
  a.counts_agree = static_cast<std::size_t>(report.formula_value) == oracle.size();
  return a;
}

bool right_determined_by(const BoundQuiverAlgebra& algebra, const ModuleCatalog& catalog, const ModuleMap& f,
                         const std::vector<std::size_t>& c_nodes) {
  const Quiver& q = algebra.quiver;
  for (const auto& xprime_node : catalog.nodes()) {
    const ModulePtr xprime = xprime_node.module;
    const auto fprimes = hom_space(q, xprime, f.target);
    if (fprimes.empty()) continue;
    const std::size_t k = fprimes.size();

    // coefficient vectors a with (sum a_j f'_j) phi in f Hom(C, X) for all phi
    Matrix constraints(0, k);
    for (auto c_node : c_nodes) {
      const ModulePtr c = catalog[c_node].module;
      const std::size_t length = flat_length(*c, *f.target);
      std::vector<Matrix> through_f;
      for (const auto& psi : hom_space(q, c, f.source)) through_f.push_back(flatten(compose(f, psi)));
      const Matrix annihilator = left_nullspace(as_columns(through_f, length));
      for (const auto& phi : hom_space(q, c, xprime)) {
        std::vector<Matrix> images;
        for (const auto& fp : fprimes) images.push_back(flatten(compose(fp, phi)));
        constraints = Matrix::vstack(constraints, annihilator * as_columns(images, length));
      }
    }
    const Matrix admissible = nullspace(constraints);

    // ... must all lie in f Hom(X', X)
    const std::size_t length = flat_length(*xprime, *f.target);
    std::vector<Matrix> factored;
    for (const auto& h : hom_space(q, xprime, f.source)) factored.push_back(flatten(compose(f, h)));
    std::vector<Matrix> basis_vectors;
    for (const auto& fp : fprimes) basis_vectors.push_back(flatten(fp));
    const Matrix test = left_nullspace(as_columns(factored, length)) * as_columns(basis_vectors, length) * admissible;
    if (!test.is_zero()) return false;
  }
  return true;
}

}  // namespace strdet
