#include <doctest.h>

#include "strdet/ar_quiver.hpp"
#include "strdet/generators.hpp"
#include "strdet/oracle.hpp"
#include "support.hpp"

using namespace strdet;

TEST_CASE("AR quiver of A2") {
  const auto a2 = fixtures::load(fixtures::a2);
  const ARQuiver ar = ar_quiver(a2);
  CHECK(ar.catalog.size() == 3);
  REQUIRE(ar.sequences.size() == 1);
  const auto& s = ar.sequences.front();
  CHECK(s.type() == 1);
  CHECK(s.left == ar.catalog.simple_node(1));
  CHECK(s.right == ar.catalog.simple_node(0));
  CHECK(s.middles == std::vector<std::size_t>{ar.catalog.projective_node(0)});
  CHECK(check_ar_invariants(a2, ar).empty());
}

TEST_CASE("almost factorisation in A2") {
  const auto a2 = fixtures::load(fixtures::a2);
  const ARQuiver ar = ar_quiver(a2);
  const auto mono = ar.arrow_between(ar.catalog.simple_node(1), ar.catalog.projective_node(0));
  REQUIRE(mono);
  const auto& f = ar.arrows[*mono].map;
  CHECK(almost_factors_through(a2, 1, f));
  CHECK_FALSE(almost_factors_through(a2, 2, f));

  const auto id = identity_map(a2.quiver, ar.catalog[ar.catalog.projective_node(0)].module);
  CHECK_FALSE(almost_factors_through(a2, 1, id));
  CHECK_FALSE(almost_factors_through(a2, 2, id));
}

TEST_CASE("determiners of the two irreducible maps in A2") {
  const auto a2 = fixtures::load(fixtures::a2);
  const ARQuiver ar = ar_quiver(a2);
  const auto p1 = ar.catalog.projective_node(0);
  const auto mono = *ar.arrow_between(ar.catalog.simple_node(1), p1);
  const auto epi = *ar.arrow_between(p1, ar.catalog.simple_node(0));

  const auto m = minimal_right_determiner(a2, ar, mono);
  CHECK(m.mono);
  CHECK(m.determiner == p1);
  CHECK(m.socle_vertex == VertexId{1});
  CHECK(m.routes_agree);

  const auto e = minimal_right_determiner(a2, ar, epi);
  CHECK_FALSE(e.mono);
  CHECK(e.determiner == ar.catalog.simple_node(0));
  CHECK(e.almost_factoring.empty());
  CHECK(e.routes_agree);

  const auto res = brute_force_det(a2, ar);
  CHECK(res.size() == 2);
  CHECK(res.projective_determiners == std::vector<VertexId>{1});
}

TEST_CASE("oracle on the small examples") {
  const auto six = brute_force_det(fixtures::load(fixtures::six_vertex));
  CHECK(six.projective_determiners == std::vector<VertexId>{1, 2, 4, 5, 6});
  CHECK(six.size() - six.projective_determiners.size() == 5);
  CHECK(six.failures.empty());

  const auto star = brute_force_det(fixtures::load(fixtures::star5));
  CHECK(star.size() == 8);
  CHECK(star.projective_determiners.size() == 4);

  const auto star_alg = fixtures::load(fixtures::star5);
  const ARQuiver ar = ar_quiver(star_alg);
  CHECK(ar.catalog.size() == enumerate_strings(star_alg).size());
}

TEST_CASE("irreducible monos into projectives with two arrows out") {
  for (const auto& a : enumerate_small_algebras(2, 5)) {
    const ARQuiver ar = ar_quiver(a);
    for (std::size_t k = 0; k < ar.arrows.size(); ++k) {
      const auto& irr = ar.arrows[k];
      const auto v = ar.catalog.projective_vertex(irr.to);
      if (!irr.mono || !v || a.quiver.out_degree(*v) != 2) continue;
      CHECK(minimal_right_determiner(a, ar, k).determiner != irr.to);
    }
  }
}

TEST_CASE("oracle structure over small algebras") {
  for (const auto& a : enumerate_small_algebras(2, 5)) {
    const ARQuiver ar = ar_quiver(a);
    const auto res = brute_force_det(a, ar);
    CHECK(res.failures.empty());
    const std::size_t n = a.quiver.vertex_count();
    CHECK(res.type1_count == n - 1);
    CHECK(res.epi_determiners.size() == n - 1);
    CHECK(res.epi_determiners == res.type1_right_ends);
    for (const auto& rec : res.records) {
      CHECK(rec.routes_agree);
      if (!rec.mono) CHECK_FALSE(ar.catalog.projective_vertex(rec.determiner));
    }
    for (const auto& irr : ar.arrows) {
      const auto dx = ar.catalog[irr.from].module->total_dim(), dy = ar.catalog[irr.to].module->total_dim();
      CHECK(dx != dy);
    }
    const auto report = determiner_report(a);
    CHECK(compare(report, res).agree());
  }
}

TEST_CASE("right determination on A2") {
  const auto a2 = fixtures::load(fixtures::a2);
  const ARQuiver ar = ar_quiver(a2);
  const auto p1 = ar.catalog.projective_node(0);
  const auto mono = *ar.arrow_between(ar.catalog.simple_node(1), p1);
  const auto& f = ar.arrows[mono].map;
  CHECK(right_determined_by(a2, ar.catalog, f, {p1}));
  CHECK_FALSE(right_determined_by(a2, ar.catalog, f, {}));
  CHECK_FALSE(right_determined_by(a2, ar.catalog, f, {ar.catalog.simple_node(0), ar.catalog.simple_node(1)}));
}
