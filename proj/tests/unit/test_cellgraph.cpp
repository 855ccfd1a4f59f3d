#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles/graphs.hpp"
#include "tqft/eco.hpp"
#include "tqft/errors.hpp"

using namespace tqft;
using namespace tqft::testing;

TEST_CASE("genus and faces") {
  CHECK(planar_loop().genus() == 0);
  CHECK(planar_loop().num_faces() == 2);
  CHECK(crossing_loops().genus() == 1);
  CHECK(crossing_loops().num_faces() == 1);
  CHECK(segment().genus() == 0);
  CHECK(segment().num_faces() == 1);
  CHECK(point().genus() == 0);
  CHECK_THROWS_AS(two_points().genus(), GraphError);
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(CellGraph({{0, 1}}, {{0, 0}}), InputError);
  CHECK_THROWS_AS(CellGraph({{0, 1}}, {}), InputError);
  CHECK_THROWS_AS(CellGraph({{0, 1}, {1}}, {{0, 1}}), InputError);
  CHECK_THROWS_AS(CellGraph({{0}, {1}}, {{0, 1}}, {1}), InputError);
  CHECK_THROWS_AS(CellGraph({{0}, {1}}, {{0, 1}}, {}, {1, 1}), InputError);
}

TEST_CASE("eco1") {
  auto single = eco1(segment(), 0);
  CHECK(single.num_vertices() == 1);
  CHECK(single.num_edges() == 0);
  CHECK(single.label(0) == 1);

  auto p = path3();
  for (int h : {0, 2}) {
    auto g = eco1(p, h);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(canonical_form(g, true) == canonical_form(segment(), true));
  }
  auto loop = eco1(digon(), 0);
  CHECK(loop.num_vertices() == 1);
  CHECK(loop.is_loop(1));
  CHECK(loop.genus() == 0);
  CHECK(loop.rotation()[0] == std::vector<int>{1, 3});
  CHECK_THROWS_AS(eco1(planar_loop(), 0), GraphError);
}

TEST_CASE("eco2") {
  auto sep = eco2(planar_loop(), 0);
  CHECK(sep.separating);
  REQUIRE(sep.parts.size() == 2);
  for (const auto& part : sep.parts) {
    CHECK(part.num_vertices() == 1);
    CHECK(part.num_edges() == 0);
    CHECK(part.label(0) == 1);
  }

  auto handle = eco2(crossing_loops(), 0);
  CHECK_FALSE(handle.separating);
  REQUIRE(handle.parts.size() == 1);
  const auto& g = handle.parts[0];
  CHECK(g.num_vertices() == 2);
  CHECK(g.genus() == 0);
  CHECK(g.labels() == std::vector<int>{1, 2});

  auto loop = eco1(digon(), 0);
  CHECK(eco2(loop, 1).separating);
  CHECK_THROWS_AS(eco2(segment(), 0), GraphError);
}

TEST_CASE("contractions lower the complexity by one") {
  for (const auto& g : connected_graphs(4)) {
    const int n = g.num_vertices();
    const int genus = g.genus();
    for (auto [a, b] : g.edges()) {
      if (!g.is_loop(a)) {
        auto r = eco1(g, a);
        CHECK(r.connected());
        CHECK(r.genus() == genus);
        CHECK(r.num_vertices() == n - 1);
        CHECK(r.complexity() == g.complexity() - 1);
      } else {
        auto r = eco2(g, a);
        CHECK(r.split.complexity() == g.complexity() - 1);
        if (r.separating) {
          REQUIRE(r.parts.size() == 2);
          int g1 = r.parts[0].genus(), g2 = r.parts[1].genus();
          CHECK(g1 + g2 == genus);
          CHECK(r.parts[0].num_vertices() + r.parts[1].num_vertices() == n + 1);
        } else {
          REQUIRE(r.parts.size() == 1);
          CHECK(r.parts[0].genus() == genus - 1);
          CHECK(r.parts[0].num_vertices() == n + 1);
        }
      }
    }
  }
}

TEST_CASE("arrowed enumeration") {
  CHECK(enumerate_arrowed(0, {2}).size() == 1);
  CHECK(enumerate_arrowed(1, {4}).size() == 1);
  CHECK(enumerate_arrowed(0, {1, 1}).size() == 1);
  CHECK(count_brute(0, {4}) == 2);
  CHECK(count_brute(0, {6}) == 5);
  CHECK(count_brute(1, {4}) == 1);
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int m = 0; m <= 6; ++m) CHECK(count_brute(0, {2 * m}) == catalan[m]);
  CHECK_THROWS_AS(count_brute(0, {14}), GuardError);
  CHECK(count_brute(0, {14}, {14}) == 429);

  // Connected matchings split over genera.
  for (const std::vector<int>& mu : {std::vector<int>{2, 2, 2}, {3, 1, 2}, {4, 4}, {1, 1, 1, 1, 2}}) {
    Integer total = 0;
    for (auto [g, c] : count_brute_by_genus(mu)) total += c;
    Integer connected = 0;
    for (int g = 0; g <= 4; ++g) connected += static_cast<long>(enumerate_arrowed(g, mu).size());
    CHECK(total == connected);
  }
  for (const auto& g : enumerate_arrowed(1, {3, 1, 2})) {
    CHECK(g.genus() == 1);
    CHECK(g.degrees() == std::vector<int>{3, 1, 2});
  }
}

TEST_CASE("automorphisms") {
  CHECK(automorphism_order(segment()) == 1);
  CHECK(automorphism_order(planar_loop()) == 2);
  CHECK(automorphism_order(digon()) == 2);
  CHECK(automorphism_order(crossing_loops()) == 4);
  CHECK(automorphism_order(point()) == 1);
}

TEST_CASE("canonical forms ignore half-edge names") {
  CellGraph a({{5, 7}, {2, 9}}, {{5, 2}, {7, 9}});
  CHECK(canonical_form(a) == canonical_form(digon()));
  CHECK(canonical_form(digon()) != canonical_form(crossing_loops()));
  CHECK(canonical_form(segment().with_labels({2, 7}), true) == canonical_form(segment(), true));
}

TEST_CASE("Hom sets of the small examples") {
  CHECK(hom_set(point(), point()).size() == 1);
  CHECK(hom_set(point(), segment()).size() == 0);
  CHECK(hom_set(path3(), segment()).size() == 2);
  CHECK(hom_set(path3(), point()).size() == 1);
  CHECK(hom_set(digon(), planar_loop()).size() == 2);
  CHECK(hom_set(digon(), two_points()).size() == 1);
  CellGraph five({{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
  CHECK_THROWS_AS(hom_set(five, point()), GuardError);
}

TEST_CASE("edge removal builders create the patterns") {
  auto g = add_disc_loop(segment(), 0, 1);
  CHECK(g.num_edges() == 2);
  CHECK(g.genus() == 0);
  auto d = add_parallel_edge(segment(), 0);
  CHECK(canonical_form(d) == canonical_form(digon()));
  auto l = add_parallel_edge(crossing_loops(), 0);
  CHECK(l.genus() == 1);
}
