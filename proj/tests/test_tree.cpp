#include <doctest.h>

#include "strdet/generators.hpp"
#include "strdet/tree.hpp"
#include "support.hpp"

using namespace strdet;

TEST_CASE("walks in the fork quiver") {
  const auto a = fixtures::load(fixtures::fork_both);
  const TreeWalk w = walk_between(a, 4, 1);
  REQUIRE(w.steps.size() == 2);
  CHECK(a.quiver.arrows()[w.steps[0].arrow].id == "a3");
  CHECK(a.quiver.arrows()[w.steps[1].arrow].id == "a1");
  CHECK(w.steps[0].forward);
  CHECK(w.steps[1].forward);
  CHECK(is_linear(w));
  CHECK(walk_between(a, 3, 3).steps.empty());
  CHECK(is_linear(walk_between(a, 3, 3)));
  CHECK_THROWS_AS(walk_between(a, 3, 42), std::out_of_range);
}

TEST_CASE("walks in the zigzag quiver") {
  const auto a = fixtures::load(fixtures::zigzag);
  const TreeWalk w = walk_between(a, 1, 4);
  REQUIRE(w.steps.size() == 3);
  // 1 -> 2 <- 3 -> 4
  CHECK(w.steps[0].forward);
  CHECK_FALSE(w.steps[1].forward);
  CHECK(w.steps[2].forward);
  CHECK_FALSE(is_linear(w));
}

TEST_CASE("restricted ideals along walks") {
  const auto both = fixtures::load(fixtures::fork_both);
  CHECK(restricted_ideal_nonzero(both, walk_between(both, 4, 1)));
  const auto single = fixtures::load(fixtures::fork_single);
  CHECK_FALSE(restricted_ideal_nonzero(single, walk_between(single, 4, 2)));
  CHECK_FALSE(restricted_ideal_nonzero(single, walk_between(single, 3, 3)));
}

TEST_CASE("neighbourhood subquivers") {
  const auto six = fixtures::load(fixtures::six_vertex);
  const auto x3 = neighbourhood(six, 3);
  CHECK(x3.members == std::vector<VertexId>{1, 2, 3, 4, 5});
  CHECK(x3.arrows == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(restricted_ideal_nonzero(six, x3));

  const auto fork = fixtures::load(fixtures::fork_both);
  const auto f3 = neighbourhood(fork, 3);
  CHECK(f3.members == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(f3.arrows == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(neighbourhood(fork, 4), std::invalid_argument);
}

TEST_CASE("walk properties over small algebras") {
  for (const auto& a : enumerate_small_algebras(2, 5)) {
    const auto& ids = a.quiver.vertices();
    for (VertexId i : ids)
      for (VertexId j : ids) {
        const TreeWalk w = walk_between(a, j, i);
        const TreeWalk back = walk_between(a, i, j);
        const TreeWalk r = reversed(w);
        REQUIRE(r.steps.size() == back.steps.size());
        for (std::size_t k = 0; k < r.steps.size(); ++k) {
          CHECK(r.steps[k].arrow == back.steps[k].arrow);
          CHECK(r.steps[k].forward == back.steps[k].forward);
        }
        CHECK(r.vertices == back.vertices);

        // restriction is monotone along a walk: a prefix never sees more relations
        for (std::size_t cut = 1; cut <= w.vertices.size(); ++cut) {
          std::vector<std::size_t> prefix(w.vertices.begin(), w.vertices.begin() + cut);
          if (restricted_ideal_nonzero(a, prefix)) CHECK(restricted_ideal_nonzero(a, w));
        }

        for (VertexId k : ids) {
          const TreeWalk jk = walk_between(a, j, k);
          const bool i_on_jk =
              std::find(jk.vertices.begin(), jk.vertices.end(), a.quiver.vertex_index(i)) != jk.vertices.end();
          if (i_on_jk && is_linear(w) && is_linear(walk_between(a, i, k))) CHECK(is_linear(jk));
        }
      }
  }
}
