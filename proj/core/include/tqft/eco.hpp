#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tqft/cellgraph.hpp"
#include "tqft/frobenius.hpp"

namespace tqft {

// Memoized counts C_{g,n}(mu) of arrowed cell graphs from the edge-contraction recursion.
// Safe to share between threads.
class CountTable {
 public:
  Integer count(int genus, const std::vector<int>& mu);
  size_t size() const;

 private:
  struct KeyHash {
    size_t operator()(const std::vector<int>& k) const;
  };
  Integer compute(int genus, const std::vector<int>& mu);

  mutable std::mutex mutex_;
  std::unordered_map<std::vector<int>, Integer, KeyHash> memo_;
};

// Uses a process-wide table.
Integer count(int genus, const std::vector<int>& mu);

// C_{g,n}(mu) * omega_{g,n}(v_1, ..., v_n).
Scalar weighted_omega(const FrobeniusAlgebra& alg, int genus, const std::vector<int>& mu,
                      std::span<const Vector> vectors);

// Right-hand side of the weighted counting formula: the edge term, the handle term through
// delta(v_1), and the separating term through eta(v_1, e_k e_l) eta^{ka} eta^{lb}.
Scalar counting_formula_rhs(const FrobeniusAlgebra& alg, int genus, const std::vector<int>& mu,
                            std::span<const Vector> vectors);

struct EdgeOrder {
  // Empty seed: always contract the edge with the smallest half-edge id.
  std::optional<std::uint64_t> seed;
};

// Contract edges one at a time: straight edges multiply colors, loops split the color by the
// coproduct, and a graph without edges evaluates to the product of counits.
// For a connected graph of genus g this equals eps(v_1 ... v_n e^g).
Scalar evaluate_graph(const FrobeniusAlgebra& alg, const CellGraph& graph, const std::vector<Vector>& colors,
                      EdgeOrder order = {});

enum class RemovalCase {
  kDiscLoop = 1,        // a loop bounding a 1-gon face
  kParallelEdge = 2,    // two edges between distinct vertices bounding a 2-gon
  kHomotopicLoop = 3,   // two loops at one vertex bounding a 2-gon
};

// A half-edge of an edge that can be removed under the given case, if any.
std::optional<int> find_removable_edge(const CellGraph& graph, RemovalCase which);

// Evaluates the graph with and without the removable edge; throws GraphError when the
// pattern does not occur.
bool edge_removal_equivalent(const FrobeniusAlgebra& alg, const CellGraph& graph, RemovalCase which,
                             const std::vector<Vector>& colors);

// Builders for the three patterns. New half-edges get fresh ids.
CellGraph add_disc_loop(const CellGraph& graph, int vertex, int position);
// Adds an edge parallel to the edge of h (loop or not) so that the two bound a 2-gon.
CellGraph add_parallel_edge(const CellGraph& graph, int h);

}  // namespace tqft
