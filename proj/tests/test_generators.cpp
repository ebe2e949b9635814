#include <doctest.h>

#include "strdet/generators.hpp"
#include "strdet/parser.hpp"
#include "strdet/strings.hpp"
#include "support.hpp"

using namespace strdet;

TEST_CASE("lambda family sizes") {
  long power = 3;
  for (int n = 1; n <= 4; ++n, power *= 3) {
    const auto a = lambda_family(n);
    CHECK(a.certificate.valid());
    CHECK(static_cast<long>(a.quiver.vertex_count()) == 2 * power - 1);
    // every length-2 path is a generator
    std::size_t length_two = 0;
    for (std::size_t v = 0; v < a.quiver.vertex_count(); ++v)
      length_two += a.quiver.in_degree(v) * a.quiver.out_degree(v);
    CHECK(a.relations.generators.size() == length_two);
  }
  CHECK_THROWS_AS(lambda_family(0), std::invalid_argument);
}

TEST_CASE("level one is the five-vertex star") {
  const auto a = lambda_family(1);
  const auto b = fixtures::load(fixtures::star5);
  CHECK(enumerate_strings(a).size() == enumerate_strings(b).size());
  CHECK(a.quiver.in_degree(0) == 2);
  CHECK(a.quiver.out_degree(0) == 2);
}

TEST_CASE("named examples match the hand-written fixtures") {
  CHECK(serialize(six_vertex_example()) == serialize(parse_algebra(fixtures::six_vertex)));
  CHECK(serialize(zigzag_example()) == serialize(parse_algebra(fixtures::zigzag)));
  CHECK(serialize(fork_example(false)) == serialize(parse_algebra(fixtures::fork_both)));
  CHECK(serialize(fork_example(true)) == serialize(parse_algebra(fixtures::fork_single)));
}

TEST_CASE("generated documents re-parse to valid algebras") {
  std::vector<BoundQuiverAlgebra> all{six_vertex_example(), zigzag_example(), fork_example(false),
                                      fork_example(true),   lambda_family(2), linear_example(6, "rrlrl"),
                                      d_example(7)};
  for (const auto& a : all) {
    CHECK(a.certificate.valid());
    const auto b = validate(parse_algebra(serialize(a)));
    CHECK(b.certificate.valid());
    CHECK(serialize(b) == serialize(a));
  }
  CHECK_THROWS_AS(linear_example(4, "rx r"), std::invalid_argument);
  CHECK_THROWS_AS(d_example(3), std::invalid_argument);
}

TEST_CASE("unlabeled tree counts") {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) CHECK(unlabeled_trees(n).size() == expected[n - 1]);
}

TEST_CASE("small algebra enumeration") {
  const auto two = enumerate_small_algebras(2, 2);
  CHECK(two.size() == 2);  // both orientations of a single edge
  const auto all = enumerate_small_algebras(2, 5);
  CHECK(all.size() >= 200);
  for (const auto& a : all) CHECK(a.certificate.valid());
}
