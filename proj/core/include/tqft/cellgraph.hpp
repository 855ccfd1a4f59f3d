#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tqft/rational.hpp"

namespace tqft {

// A combinatorial map. Half-edges carry arbitrary non-negative ids which are kept
// stable by the contraction operations. Faces are cycles of h -> next(partner(h)),
// i.e. rotation composed after involution.
class CellGraph {
 public:
  // rotation[v] lists the half-edges at vertex v in cyclic order; edges pair them up.
  // labels default to 1..n, arrows to "none" (-1). Throws InputError when inconsistent.
  CellGraph(std::vector<std::vector<int>> rotation, const std::vector<std::pair<int, int>>& edges,
            std::vector<int> labels = {}, std::vector<int> arrows = {});

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const;
  int num_faces() const;
  int num_components() const;
  bool connected() const { return num_components() == 1; }
  // Throws GraphError when the graph is disconnected.
  int genus() const;
  // 2g - 2 + n summed over components.
  int complexity() const;

  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<int>& arrows() const { return arrows_; }
  int label(int v) const { return labels_[v]; }
  int arrow(int v) const { return arrows_[v]; }
  std::vector<int> degrees() const;

  int partner(int h) const { return partner_[h]; }
  int vertex_of(int h) const { return vertex_[h]; }
  int next(int h) const { return next_[h]; }
  int face_next(int h) const { return next_[partner_[h]]; }
  bool is_loop(int h) const { return vertex_[h] == vertex_[partner_[h]]; }
  std::vector<int> half_edges() const;
  // Edges as (smaller id, larger id), sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::vector<int>> faces() const;
  // Vertex sets of the connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> component_vertices() const;
  std::vector<CellGraph> components() const;

  CellGraph with_labels(std::vector<int> labels) const;
  CellGraph with_arrows(std::vector<int> arrows) const;
  // Removes the edge containing h; both half-edges leave their rotations.
  CellGraph without_edge(int h) const;

 private:
  void index();

  std::vector<std::vector<int>> rotation_;
  std::vector<int> labels_;
  std::vector<int> arrows_;
  std::vector<int> partner_;  // by half-edge id, -1 when unused
  std::vector<int> vertex_;
  std::vector<int> next_;
};

// Contract the non-loop edge through half-edge h. The vertex of h keeps its label.
CellGraph eco1(const CellGraph& g, int h);

struct Eco2Result {
  bool separating = false;
  // The split graph; the second new vertex gets label max+1.
  CellGraph split;
  // One connected graph (handle case) or two (separating case). In the separating case both
  // pieces give the split vertex the original label, and the piece whose other labels are
  // smaller comes first.
  std::vector<CellGraph> parts;
};

// Cut along the loop through half-edge h.
Eco2Result eco2(const CellGraph& g, int h);

// Canonical form up to relabeling of half-edges. Components are encoded separately
// and sorted. With normalize_labels, each component's labels are replaced by dense ranks.
using CanonicalForm = std::vector<std::vector<int>>;
CanonicalForm canonical_form(const CellGraph& g, bool normalize_labels = false);

// Label-preserving automorphisms (arrows ignored), multiplied over components.
Integer automorphism_order(const CellGraph& g);

struct EnumerationLimits {
  int max_degree_sum = 12;
};

// Arrowed cell graphs of type (g, n) with vertex degrees mu: per-vertex half-edges in
// increasing order with the first one arrowed, all perfect matchings, connected, genus g.
std::vector<CellGraph> enumerate_arrowed(int genus, const std::vector<int>& mu,
                                         EnumerationLimits limits = {});
Integer count_brute(int genus, const std::vector<int>& mu, EnumerationLimits limits = {});
// Connected matchings split by genus.
std::map<int, Integer> count_brute_by_genus(const std::vector<int>& mu, EnumerationLimits limits = {});

struct Morphism {
  // Contracted edges in one valid order; empty for automorphisms.
  std::vector<std::pair<int, int>> contracted;
  int automorphism = 0;
};

// Morphisms are distinct sets of contracted edges (reachable by a valid ECO sequence) whose
// result is isomorphic to the target; with no contraction, the automorphisms of the source.
std::vector<Morphism> hom_set(const CellGraph& source, const CellGraph& target, int max_edges = 4);

}  // namespace tqft
