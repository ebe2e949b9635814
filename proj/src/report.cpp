#include "strdet/report.hpp"

#include <iomanip>
#include <sstream>

#include "strdet/taxonomy.hpp"

namespace strdet {

namespace {

std::string join_ids(const std::vector<VertexId>& ids, const std::string& prefix = "") {
  std::string out;
  for (auto v : ids) {
    if (!out.empty()) out += ' ';
    out += prefix.empty() ? std::to_string(v) : prefix + "(" + std::to_string(v) + ")";
  }
  return out.empty() ? "-" : out;
}

std::string dims_label(const std::vector<std::size_t>& dims) {
  std::string out;
  for (auto d : dims) out += std::to_string(d);
  return out;
}

std::string node_label(const ARQuiver& ar, std::size_t k) { return ar.catalog[k].name; }

Json node_json(const BoundQuiverAlgebra& algebra, const ARQuiver& ar, std::size_t k) {
  Json j;
  j["string"] = ar.catalog[k].name;
  j["dimension_vector"] = ar.catalog.dimension_vector(k);
  if (auto v = ar.catalog.projective_vertex(k)) j["projective"] = algebra.quiver.vertex_id(*v);
  else j["projective"] = nullptr;
  return j;
}

std::string describe_node(const BoundQuiverAlgebra& algebra, const ARQuiver& ar, std::size_t k) {
  std::string out = "[" + node_label(ar, k) + "] dim " + dims_label(ar.catalog.dimension_vector(k));
  if (auto v = ar.catalog.projective_vertex(k)) out += " = P(" + std::to_string(algebra.quiver.vertex_id(*v)) + ")";
  return out;
}

}  // namespace

std::string certificate_text(const BoundQuiverAlgebra& algebra) {
  std::ostringstream os;
  const Quiver& q = algebra.quiver;
  os << "vertices: " << q.vertex_count() << "  arrows: " << q.arrow_count()
     << "  relations: " << algebra.relations.generators.size() << '\n';
  for (const auto& r : algebra.relations.generators) os << "  " << render_path_composed(q, r) << " = 0\n";
  for (const auto& w : algebra.warnings) os << "warning: " << w << '\n';
  if (algebra.certificate.valid()) {
    os << "valid string algebra on a tree quiver\n";
  } else {
    os << "invalid: " << algebra.certificate.violations.size() << " violation(s)\n";
    for (const auto& v : algebra.certificate.violations) os << "  " << to_string(v.kind) << ": " << v.message << '\n';
  }
  return os.str();
}

Json certificate_json(const BoundQuiverAlgebra& algebra) {
  const Quiver& q = algebra.quiver;
  Json j;
  j["valid"] = algebra.certificate.valid();
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  j["arrows"] = arrows;
  Json rels = Json::array();
  for (const auto& r : algebra.relations.generators) {
    Json path = Json::array();
    for (auto a : r) path.push_back(q.arrows()[a].id);
    rels.push_back(path);
  }
  j["relations"] = rels;
  Json violations = Json::array();
  for (const auto& v : algebra.certificate.violations)
    violations.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
  j["violations"] = violations;
  j["warnings"] = algebra.warnings;
  return j;
}

std::string classify_text(const BoundQuiverAlgebra& algebra) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "vertex" << std::setw(7) << "class" << std::setw(12) << "in" << "out\n";
  for (const auto& p : vertex_profiles(algebra))
    os << std::setw(8) << p.vertex << std::setw(7) << to_string(p.cls) << std::setw(12) << join_ids(p.in_neighbours)
       << join_ids(p.out_neighbours) << '\n';
  os << "p = " << count_p(algebra) << '\n';
  return os.str();
}

Json classify_json(const BoundQuiverAlgebra& algebra) {
  Json rows = Json::array();
  for (const auto& p : vertex_profiles(algebra))
    rows.push_back({{"vertex", p.vertex},
                    {"class", to_string(p.cls)},
                    {"in_neighbours", p.in_neighbours},
                    {"out_neighbours", p.out_neighbours}});
  return {{"vertices", rows}, {"p", count_p(algebra)}};
}

std::string ideals_text(const BoundQuiverAlgebra& algebra) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "vertex" << std::setw(7) << "class" << std::setw(8) << "J" << "witness\n";
  for (const auto& p : vertex_profiles(algebra)) {
    if (!p.ideal) continue;
    os << std::setw(8) << p.vertex << std::setw(7) << to_string(p.cls) << std::setw(8) << to_string(p.ideal->status)
       << (p.ideal->witness ? std::to_string(*p.ideal->witness) : "-") << '\n';
  }
  os << "q = " << count_q(algebra) << '\n';
  return os.str();
}

Json ideals_json(const BoundQuiverAlgebra& algebra) {
  Json rows = Json::array();
  for (const auto& p : vertex_profiles(algebra)) {
    if (!p.ideal) continue;
    rows.push_back({{"vertex", p.vertex},
                    {"class", to_string(p.cls)},
                    {"status", to_string(p.ideal->status)},
                    {"nonzero", p.ideal->nonzero()},
                    {"witness", p.ideal->witness ? Json(*p.ideal->witness) : Json(nullptr)}});
  }
  return {{"ideals", rows}, {"q", count_q(algebra)}};
}

std::string determiners_text(const DeterminerReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << "  p = " << r.p << "  q = " << r.q << '\n';
  os << "|Det| = 2n - p - q - 1 = " << r.formula_value << '\n';
  os << "projective determiners (" << r.projective_determiners.size()
     << "): " << join_ids(r.projective_determiners, "P") << '\n';
  os << "determiners of irreducible epimorphisms: " << r.epi_determiner_count << '\n';
  os << '\n' << std::left << std::setw(8) << "vertex" << std::setw(7) << "class" << std::setw(6) << "P(i)" << "rationale\n";
  for (const auto& d : r.vertices)
    os << std::setw(8) << d.vertex << std::setw(7) << to_string(d.cls) << std::setw(6) << (d.determiner ? "yes" : "no")
       << d.rationale << '\n';
  return os.str();
}

Json determiners_json(const DeterminerReport& r) {
  Json rows = Json::array();
  for (const auto& d : r.vertices) {
    Json row{{"vertex", d.vertex}, {"class", to_string(d.cls)}, {"determiner", d.determiner}, {"rationale", d.rationale}};
    if (d.ideal) {
      row["ideal"] = to_string(d.ideal->status);
      row["witness"] = d.ideal->witness ? Json(*d.ideal->witness) : Json(nullptr);
    } else {
      row["ideal"] = nullptr;
      row["witness"] = nullptr;
    }
    rows.push_back(row);
  }
  return {{"n", r.n},
          {"p", r.p},
          {"q", r.q},
          {"formula_value", r.formula_value},
          {"projective_determiners", r.projective_determiners},
          {"epi_determiner_count", r.epi_determiner_count},
          {"vertices", rows}};
}

std::string oracle_text(const BoundQuiverAlgebra& algebra, const ARQuiver& ar, const OracleResult& res) {
  std::ostringstream os;
  os << "indecomposables: " << ar.catalog.size() << "  irreducible maps: " << ar.arrows.size()
     << "  almost split sequences: " << ar.sequences.size() << " (" << res.type1_count
     << " with indecomposable middle, " << res.type2_count << " with two middle terms)\n";
  os << "|Det| = " << res.size() << "  projective: " << res.projective_determiners.size()
     << "  non-projective: " << res.size() - res.projective_determiners.size() << '\n';
  os << "projective determiners: " << join_ids(res.projective_determiners, "P") << '\n';
  os << "Det:\n";
  for (auto k : res.det) os << "  " << describe_node(algebra, ar, k) << '\n';
  os << "irreducible maps:\n";
  for (const auto& rec : res.records) {
    const auto& irr = ar.arrows[rec.arrow];
    os << "  [" << node_label(ar, irr.from) << "] -> [" << node_label(ar, irr.to) << "] "
       << (rec.mono ? "mono" : "epi ") << "  C(f) = [" << node_label(ar, rec.determiner) << "]"
       << (rec.routes_agree ? "" : "  (routes disagree)") << '\n';
  }
  if (res.failures.empty()) {
    os << "all structural checks passed\n";
  } else {
    os << "structural check failures:\n";
    for (const auto& f : res.failures) os << "  " << f << '\n';
  }
  return os.str();
}

Json oracle_json(const BoundQuiverAlgebra& algebra, const ARQuiver& ar, const OracleResult& res) {
  Json det = Json::array();
  for (auto k : res.det) det.push_back(node_json(algebra, ar, k));
  Json maps = Json::array();
  for (const auto& rec : res.records) {
    const auto& irr = ar.arrows[rec.arrow];
    maps.push_back({{"from", node_label(ar, irr.from)},
                    {"to", node_label(ar, irr.to)},
                    {"mono", rec.mono},
                    {"determiner", node_label(ar, rec.determiner)},
                    {"routes_agree", rec.routes_agree}});
  }
  return {{"indecomposables", ar.catalog.size()},
          {"irreducible_maps", maps},
          {"det", det},
          {"det_size", res.size()},
          {"projective_determiners", res.projective_determiners},
          {"type1_sequences", res.type1_count},
          {"type2_sequences", res.type2_count},
          {"failures", res.failures}};
}

std::string check_text(const DeterminerReport& report, const OracleResult& res, const Agreement& a) {
  std::ostringstream os;
  os << "engine: |Det| = " << report.formula_value << "  projective " << join_ids(report.projective_determiners, "P")
     << '\n';
  os << "oracle: |Det| = " << res.size() << "  projective " << join_ids(res.projective_determiners, "P") << '\n';
  if (!a.engine_only.empty()) os << "engine only: " << join_ids(a.engine_only, "P") << '\n';
  if (!a.oracle_only.empty()) os << "oracle only: " << join_ids(a.oracle_only, "P") << '\n';
  for (const auto& f : res.failures) os << "oracle check failed: " << f << '\n';
  os << (a.agree() ? "agreement" : "DISAGREEMENT") << '\n';
  return os.str();
}

Json check_json(const DeterminerReport& report, const OracleResult& res, const Agreement& a) {
  return {{"agree", a.agree()},
          {"counts_agree", a.counts_agree},
          {"projective_sets_agree", a.projective_sets_agree},
          {"engine", {{"formula_value", report.formula_value}, {"projective_determiners", report.projective_determiners}}},
          {"oracle", {{"det_size", res.size()}, {"projective_determiners", res.projective_determiners}}},
          {"engine_only", a.engine_only},
          {"oracle_only", a.oracle_only},
          {"oracle_failures", res.failures}};
}

std::string quiver_dot(const BoundQuiverAlgebra& algebra) {
  const Quiver& q = algebra.quiver;
  std::ostringstream os;
  os << "digraph quiver {\n  rankdir=LR;\n";
  for (auto v : q.vertices()) os << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const auto& a : q.arrows())
    os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.id << "\"];\n";
  for (const auto& r : algebra.relations.generators) os << "  // relation " << render_path(q, r) << '\n';
  os << "}\n";
  return os.str();
}

std::string ar_quiver_dot(const BoundQuiverAlgebra& algebra, const ARQuiver& ar) {
  std::ostringstream os;
  os << "digraph ar_quiver {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < ar.catalog.size(); ++k) {
    os << "  n" << k << " [label=\"" << dims_label(ar.catalog.dimension_vector(k)) << "\\n" << node_label(ar, k);
    if (auto v = ar.catalog.projective_vertex(k)) os << "\\nP(" << algebra.quiver.vertex_id(*v) << ")";
    os << "\"];\n";
  }
  for (const auto& a : ar.arrows) os << "  n" << a.from << " -> n" << a.to << ";\n";
  for (std::size_t k = 0; k < ar.catalog.size(); ++k)
    if (ar.tau[k]) {
      os << "  n" << k << " -> n" << *ar.tau[k] << " [style=dashed, constraint=false, arrowhead=none];\n";
      os << "  { rank=same; n" << k << "; n" << *ar.tau[k] << "; }\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace strdet
