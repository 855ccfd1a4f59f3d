#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles/graphs.hpp"
#include "tqft/eco.hpp"
#include "tqft/errors.hpp"
#include "tqft/zoo.hpp"

using namespace tqft;
using namespace tqft::testing;

TEST_CASE("counts from the recursion") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int m = 0; m <= 7; ++m) CHECK(count(0, {2 * m}) == catalan[m]);
  CHECK(count(1, {4}) == 1);
  CHECK(count(0, {1, 1}) == 1);
  CHECK(count(0, {2, 2}) == 2);
  CHECK(count(0, {1, 3}) == 3);
  CHECK(count(0, {3, 1}) == 3);
  CHECK(count(0, {3}) == 0);
  CHECK(count(0, {0, 2}) == 0);
  CHECK(count(2, {2}) == 0);
}

TEST_CASE("recursion agrees with brute force for small profiles") {
  std::vector<std::vector<int>> profiles;
  std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& mu, int budget) {
    if (!mu.empty()) profiles.push_back(mu);
    if (mu.size() == 4) return;
    for (int d = 1; d <= budget; ++d) {
      mu.push_back(d);
      gen(mu, budget - d);
      mu.pop_back();
    }
  };
  std::vector<int> mu;
  gen(mu, 8);
  for (const auto& p : profiles) {
    auto brute = count_brute_by_genus(p);
    for (int g = 0; g <= 2; ++g) {
      Integer expect = brute.count(g) ? brute[g] : Integer(0);
      CHECK(count(g, p) == expect);
    }
  }
}

TEST_CASE("counts are symmetric in the degrees") {
  std::vector<int> mu{1, 2, 3, 4};
  Integer ref = count(1, mu);
  do {
    CHECK(count(1, mu) == ref);
  } while (std::next_permutation(mu.begin(), mu.end()));
}

TEST_CASE("weighted counting formula") {
  std::mt19937_64 rng(7);
  for (const auto& alg : {semisimple(3), center_of_group_algebra(preset_group("S3"))}) {
    for (const std::vector<int>& mu : {std::vector<int>{2}, {4}, {3, 1}, {2, 2, 2}, {1, 1, 2}, {6}, {3, 3}}) {
      for (int g = 0; g <= 1; ++g) {
        auto vs = random_colors(static_cast<int>(mu.size()), alg.dim(), rng);
        CHECK(counting_formula_rhs(alg, g, mu, vs) == weighted_omega(alg, g, mu, vs));
      }
    }
  }
}

TEST_CASE("graph evaluation is independent of the graph") {
  std::mt19937_64 rng(11);
  auto alg = center_of_group_algebra(preset_group("S3"));
  for (const auto& g : connected_graphs(3)) {
    auto colors = random_colors(g.num_vertices(), alg.dim(), rng);
    Vector prod = alg.unit();
    for (const auto& c : colors) prod = multiply(alg, prod, c);
    Scalar expect = omega(alg, g.genus(), std::vector<Vector>{prod});
    CHECK(evaluate_graph(alg, g, colors) == expect);
    CHECK(evaluate_graph(alg, g, colors, {5}) == expect);
  }
}

TEST_CASE("edge removal cases") {
  auto alg = semisimple(3);
  std::mt19937_64 rng(3);
  auto crossing = crossing_loops();
  auto disc = add_disc_loop(crossing, 0, 2);
  auto colors = random_colors(1, 3, rng);
  CHECK(find_removable_edge(disc, RemovalCase::kDiscLoop).has_value());
  CHECK(edge_removal_equivalent(alg, disc, RemovalCase::kDiscLoop, colors));

  auto par = add_parallel_edge(path3(), 0);
  auto colors3 = random_colors(3, 3, rng);
  CHECK(edge_removal_equivalent(alg, par, RemovalCase::kParallelEdge, colors3));

  auto homotopic = add_parallel_edge(crossing, 0);
  CHECK(edge_removal_equivalent(alg, homotopic, RemovalCase::kHomotopicLoop, colors));

  CHECK_FALSE(find_removable_edge(path3(), RemovalCase::kParallelEdge).has_value());
  CHECK_THROWS_AS(edge_removal_equivalent(alg, crossing, RemovalCase::kDiscLoop, colors), GraphError);
}

TEST_CASE("evaluation refuses non-commutative algebras") {
  auto mat = matrix_algebra(2);
  std::vector<Vector> colors{mat.unit()};
  CHECK_THROWS_AS(evaluate_graph(mat, point(), colors), AlgebraError);
}
