#pragma once

// Small graphs and random data shared by the tests.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "tqft/cellgraph.hpp"
#include "tqft/frobenius.hpp"

namespace tqft::testing {

inline CellGraph point() { return CellGraph({{}}, {}); }
inline CellGraph segment() { return CellGraph({{0}, {1}}, {{0, 1}}); }
inline CellGraph path3() { return CellGraph({{0}, {1, 2}, {3}}, {{0, 1}, {2, 3}}); }
inline CellGraph planar_loop() { return CellGraph({{0, 1}}, {{0, 1}}); }
inline CellGraph crossing_loops() { return CellGraph({{0, 1, 2, 3}}, {{0, 2}, {1, 3}}); }
inline CellGraph two_points() { return CellGraph({{}, {}}, {}); }
// Two vertices joined by two edges, bounding a bigon on the sphere.
inline CellGraph digon() { return CellGraph({{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}); }

// Every connected graph with at most max_edges edges (one representative per isomorphism
// class of labeled graphs), built from arrowed enumerations.
inline std::vector<CellGraph> connected_graphs(int max_edges, int max_vertices = 4) {
  std::vector<CellGraph> out{point()};
  std::set<CanonicalForm> seen;
  std::function<void(std::vector<int>&, int)> profiles = [&](std::vector<int>& mu, int budget) {
    if (!mu.empty()) {
      int sum = 0;
      for (int m : mu) sum += m;
      if (sum % 2 == 0 && sum > 0) {
        for (int g = 0; 2 * g <= sum / 2; ++g)
          for (auto& graph : enumerate_arrowed(g, mu)) {
            if (seen.insert(canonical_form(graph)).second) out.push_back(graph.with_arrows({}));
          }
      }
    }
    if (static_cast<int>(mu.size()) == max_vertices) return;
    for (int d = 1; d <= budget; ++d) {
      mu.push_back(d);
      profiles(mu, budget - d);
      mu.pop_back();
    }
  };
  std::vector<int> mu;
  profiles(mu, 2 * max_edges);
  return out;
}

inline Vector random_vector(int dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  Vector v(dim);
  for (auto& x : v) {
    x = Scalar(num(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

inline std::vector<Vector> random_colors(int count, int dim, std::mt19937_64& rng) {
  std::vector<Vector> cs;
  for (int i = 0; i < count; ++i) cs.push_back(random_vector(dim, rng));
  return cs;
}

}  // namespace tqft::testing
