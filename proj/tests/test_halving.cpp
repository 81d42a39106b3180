#include <halving/halving.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace halving;

namespace {

PointConfig quadrilateral() {
  return {{{Scalar(0), Scalar(0)}, {Scalar(4), Scalar(0)}, {Scalar(5), Scalar(3)},
           {Scalar(-1), Scalar(2)}}};
}

PointConfig triangle_with_interior() {
  return {{{Scalar(0), Scalar(0)}, {Scalar(8), Scalar(0)}, {Scalar(4), Scalar(7)},
           {Scalar(4), Scalar(3)}}};
}

}  // namespace

TEST_CASE("halving difference counts sides") {
  const PointConfig q = quadrilateral();
  CHECK(halving_difference(q, 0, 2) == 0);  // diagonal separates 1 and 3
  CHECK(halving_difference(q, 1, 3) == 0);
  CHECK(halving_difference(q, 0, 1) == 2);  // hull side leaves both others above
  CHECK(is_halving_edge(q, 0, 2));
  CHECK_FALSE(is_halving_edge(q, 0, 1));
  CHECK_THROWS_AS(halving_difference(q, 2, 2), SameVertex);
}

TEST_CASE("two points always form a halving edge") {
  const PointConfig two{{{Scalar(0), Scalar(0)}, {Scalar(3), Scalar(1)}}};
  const auto g = underlying_geograph(two);
  CHECK(g.E() == 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("four-point geographs") {
  const auto gq = underlying_geograph(quadrilateral());
  CHECK(gq.E() == 2);
  CHECK(gq.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  const auto gt = underlying_geograph(triangle_with_interior());
  CHECK(gt.E() == 3);
  // the interior point is joined to every triangle corner
  CHECK(gt.edges == std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 3}});
  CHECK(vertex_degrees(gt) == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("sweep enumeration agrees with brute force") {
  for (const auto& c : testsupport::generator_corpus()) {
    const auto brute = underlying_geograph(c.config, EnumMethod::brute_force);
    const auto sweep = underlying_geograph(c.config, EnumMethod::rotational_sweep);
    REQUIRE(brute.edges == sweep.edges);
  }
  for (int n : {4, 6, 8, 10}) {
    for (const auto& cfg : testsupport::random_corpus(n, 25, 0xabcdef12u + n)) {
      const auto brute = underlying_geograph(cfg, EnumMethod::brute_force);
      const auto sweep = underlying_geograph(cfg, EnumMethod::rotational_sweep);
      REQUIRE(brute.edges == sweep.edges);
    }
  }
}

TEST_CASE("parallel brute force matches serial") {
  for (const auto& cfg : testsupport::random_corpus(12, 8, 99)) {
    const auto serial = underlying_geograph(cfg, EnumMethod::brute_force, 1);
    const auto parallel = underlying_geograph(cfg, EnumMethod::brute_force, 4);
    REQUIRE(serial.edges == parallel.edges);
  }
}

TEST_CASE("degree helpers") {
  const auto g = underlying_geograph(triangle_with_interior());
  CHECK(degree_sequence(g) == DegreeSequence{3, 1, 1, 1});
  const auto adj = adjacency_lists(g);
  CHECK(adj[3] == std::vector<int>{0, 1, 2});
  CHECK(adj[0] == std::vector<int>{3});

  int degree_sum = 0;
  for (int d : vertex_degrees(g)) degree_sum += d;
  CHECK(degree_sum == 2 * g.E());
}

TEST_CASE("graph stats on small structures") {
  const auto gs = graph_stats(underlying_geograph(testsupport::generator_corpus()[0].config));
  // polygon(4): two crossing diagonals
  CHECK(gs.leaves == 4);
  CHECK(gs.components == 2);
  CHECK(gs.hull.size() == 4);
  REQUIRE(gs.max_clique.has_value());
  CHECK(*gs.max_clique == 2);
  CHECK(*gs.longest_path_vertices == 2);
  CHECK(*gs.longest_cycle_vertices == 0);

  const auto st = graph_stats(underlying_geograph(star(8).config));
  CHECK(st.leaves == 7);
  CHECK(st.components == 1);
  CHECK(*st.max_clique == 2);
  CHECK(*st.longest_path_vertices == 3);  // leaf, center, leaf
  CHECK(*st.longest_cycle_vertices == 0);
}

TEST_CASE("exact clique search handles wide graphs") {
  // n > 32 exercises the 64-bit vertex masks
  const auto c = clique_construction(6);
  REQUIRE(c.config.n() > 32);
  const auto g = underlying_geograph(c.config);
  const auto k = exact_max_clique(g);
  REQUIRE(k.has_value());
  CHECK(*k >= 6);
}
