#include "tqft/cellgraph.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> rotate_to(const std::vector<int>& cycle, int h) {
  auto it = std::find(cycle.begin(), cycle.end(), h);
  std::vector<int> out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

}  // namespace

CellGraph::CellGraph(std::vector<std::vector<int>> rotation, const std::vector<std::pair<int, int>>& edges,
                     std::vector<int> labels, std::vector<int> arrows)
    : rotation_(std::move(rotation)), labels_(std::move(labels)), arrows_(std::move(arrows)) {
  const int n = num_vertices();
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), 1);
  }
  if (arrows_.empty()) arrows_.assign(n, -1);
  if (static_cast<int>(labels_.size()) != n) throw InputError("one label per vertex required");
  if (static_cast<int>(arrows_.size()) != n) throw InputError("one arrow entry per vertex required");

  int max_id = -1;
  for (const auto& cyc : rotation_)
    for (int h : cyc) {
      if (h < 0) throw InputError("half-edge ids must be non-negative");
      max_id = std::max(max_id, h);
    }
  partner_.assign(max_id + 1, -1);
  vertex_.assign(max_id + 1, -1);
  for (int v = 0; v < n; ++v)
    for (int h : rotation_[v]) {
      if (vertex_[h] != -1) throw InputError("half-edge " + std::to_string(h) + " appears twice in the rotation");
      vertex_[h] = v;
    }
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a > max_id || b > max_id || vertex_[a] < 0 || vertex_[b] < 0) {
      throw InputError("edge refers to a half-edge missing from the rotation");
    }
    if (a == b) throw InputError("involution must be fixed-point-free");
    if (partner_[a] != -1 || partner_[b] != -1) throw InputError("half-edge used by two edges");
    partner_[a] = b;
    partner_[b] = a;
  }
  for (int h = 0; h <= max_id; ++h) {
    if (vertex_[h] >= 0 && partner_[h] < 0) {
      throw InputError("half-edge " + std::to_string(h) + " is not paired by any edge");
    }
  }
  for (int v = 0; v < n; ++v) {
    int a = arrows_[v];
    if (a != -1 && (a < 0 || a > max_id || vertex_[a] != v)) {
      throw InputError("arrow at vertex " + std::to_string(v) + " is not one of its half-edges");
    }
  }
  index();
}

void CellGraph::index() {
  next_.assign(vertex_.size(), -1);
  for (const auto& cyc : rotation_)
    for (size_t i = 0; i < cyc.size(); ++i) next_[cyc[i]] = cyc[(i + 1) % cyc.size()];
}

int CellGraph::num_edges() const {
  int h = 0;
  for (const auto& cyc : rotation_) h += static_cast<int>(cyc.size());
  return h / 2;
}

std::vector<int> CellGraph::half_edges() const {
  std::vector<int> hs;
  for (const auto& cyc : rotation_) hs.insert(hs.end(), cyc.begin(), cyc.end());
  std::sort(hs.begin(), hs.end());
  return hs;
}

std::vector<std::pair<int, int>> CellGraph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int h : half_edges())
    if (h < partner_[h]) es.emplace_back(h, partner_[h]);
  return es;
}

std::vector<int> CellGraph::degrees() const {
  std::vector<int> d;
  for (const auto& cyc : rotation_) d.push_back(static_cast<int>(cyc.size()));
  return d;
}

std::vector<std::vector<int>> CellGraph::faces() const {
  std::vector<std::vector<int>> fs;
  std::vector<char> seen(vertex_.size(), 0);
  for (int h : half_edges()) {
    if (seen[h]) continue;
    std::vector<int> f;
    for (int x = h; !seen[x]; x = face_next(x)) {
      seen[x] = 1;
      f.push_back(x);
    }
    fs.push_back(std::move(f));
  }
  return fs;
}

int CellGraph::num_faces() const {
  int isolated = 0;
  for (const auto& cyc : rotation_) isolated += cyc.empty() ? 1 : 0;
  return static_cast<int>(faces().size()) + isolated;
}

std::vector<std::vector<int>> CellGraph::component_vertices() const {
  const int n = num_vertices();
  UnionFind uf(n);
  for (int h : half_edges()) uf.unite(vertex_[h], vertex_[partner_[h]]);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> comps;
  for (auto& [root, vs] : by_root) comps.push_back(std::move(vs));
  std::sort(comps.begin(), comps.end());
  return comps;
}

int CellGraph::num_components() const { return static_cast<int>(component_vertices().size()); }

int CellGraph::genus() const {
  if (!connected()) throw GraphError("genus needs a connected graph");
  int twice = 2 - num_vertices() + num_edges() - num_faces();
  if (twice < 0 || twice % 2 != 0) throw GraphError("Euler characteristic is inconsistent");
  return twice / 2;
}

int CellGraph::complexity() const { return num_edges() - num_faces(); }

std::vector<CellGraph> CellGraph::components() const {
  std::vector<CellGraph> out;
  for (const auto& vs : component_vertices()) {
    std::vector<std::vector<int>> rot;
    std::vector<std::pair<int, int>> es;
    std::vector<int> labels, arrows;
    for (int v : vs) {
      rot.push_back(rotation_[v]);
      labels.push_back(labels_[v]);
      arrows.push_back(arrows_[v]);
      for (int h : rotation_[v])
        if (h < partner_[h]) es.emplace_back(h, partner_[h]);
    }
    out.emplace_back(std::move(rot), es, std::move(labels), std::move(arrows));
  }
  return out;
}

CellGraph CellGraph::with_labels(std::vector<int> labels) const {
  return CellGraph(rotation_, edges(), std::move(labels), arrows_);
}

CellGraph CellGraph::with_arrows(std::vector<int> arrows) const {
  return CellGraph(rotation_, edges(), labels_, std::move(arrows));
}

CellGraph CellGraph::without_edge(int h) const {
  if (h < 0 || h >= static_cast<int>(partner_.size()) || partner_[h] < 0) {
    throw GraphError("no such half-edge");
  }
  const int hp = partner_[h];
  auto rot = rotation_;
  auto arrows = arrows_;
  for (int v = 0; v < num_vertices(); ++v) {
    if (arrows[v] == h || arrows[v] == hp) {
      int a = arrows[v];
      while (a == h || a == hp) {
        a = next_[a];
        if (a == arrows[v]) break;
      }
      arrows[v] = (a == h || a == hp) ? -1 : a;
    }
    std::erase_if(rot[v], [&](int x) { return x == h || x == hp; });
  }
  std::vector<std::pair<int, int>> es;
  for (auto e : edges())
    if (e.first != std::min(h, hp)) es.push_back(e);
  return CellGraph(std::move(rot), es, labels_, std::move(arrows));
}

CellGraph eco1(const CellGraph& g, int h) {
  const int hp = g.partner(h);
  const int p = g.vertex_of(h), q = g.vertex_of(hp);
  if (p == q) throw GraphError("eco1 needs an edge between distinct vertices; this edge is a loop");
  auto a = rotate_to(g.rotation()[p], h);
  auto b = rotate_to(g.rotation()[q], hp);
  std::vector<int> merged(a.begin() + 1, a.end());
  merged.insert(merged.end(), b.begin() + 1, b.end());

  std::vector<std::vector<int>> rot;
  std::vector<int> labels, arrows;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == q) continue;
    if (v == p) {
      int arrow = g.arrow(p);
      if (arrow == h) arrow = merged.empty() ? -1 : merged.front();
      rot.push_back(merged);
      arrows.push_back(arrow);
    } else {
      rot.push_back(g.rotation()[v]);
      arrows.push_back(g.arrow(v));
    }
    labels.push_back(g.label(v));
  }
  std::vector<std::pair<int, int>> es;
  for (auto e : g.edges())
    if (e.first != std::min(h, hp)) es.push_back(e);
  return CellGraph(std::move(rot), es, std::move(labels), std::move(arrows));
}

Eco2Result eco2(const CellGraph& g, int h) {
  const int hp = g.partner(h);
  const int p = g.vertex_of(h);
  if (g.vertex_of(hp) != p) throw GraphError("eco2 needs a loop; this edge joins distinct vertices");
  auto cyc = rotate_to(g.rotation()[p], h);
  auto pos = std::find(cyc.begin(), cyc.end(), hp);
  std::vector<int> side_a(cyc.begin() + 1, pos), side_b(pos + 1, cyc.end());

  auto pick_arrow = [&](const std::vector<int>& side) {
    int a = g.arrow(p);
    if (std::find(side.begin(), side.end(), a) != side.end()) return a;
    return side.empty() ? -1 : side.front();
  };
  auto rot = g.rotation();
  auto labels = g.labels();
  auto arrows = g.arrows();
  rot[p] = side_a;
  arrows[p] = pick_arrow(side_a);
  rot.push_back(side_b);
  arrows.push_back(pick_arrow(side_b));
  labels.push_back(*std::max_element(labels.begin(), labels.end()) + 1);
  std::vector<std::pair<int, int>> es;
  for (auto e : g.edges())
    if (e.first != std::min(h, hp)) es.push_back(e);
  CellGraph split(std::move(rot), es, std::move(labels), std::move(arrows));

  const int new_vertex = split.num_vertices() - 1;
  const int before = g.num_components();
  auto comps = split.component_vertices();
  if (static_cast<int>(comps.size()) == before) {
    // Handle: the component of p stays connected.
    return Eco2Result{false, split, {split}};
  }
  // Separating: pick out the two pieces containing p and the new vertex.
  std::vector<int> piece_a, piece_b;
  for (const auto& c : comps) {
    if (std::find(c.begin(), c.end(), p) != c.end()) piece_a = c;
    if (std::find(c.begin(), c.end(), new_vertex) != c.end()) piece_b = c;
  }
  auto build = [&](const std::vector<int>& vs, int special) {
    std::vector<std::vector<int>> r;
    std::vector<int> ls, as;
    std::vector<std::pair<int, int>> pe;
    int other_min = INT_MAX;
    for (int v : vs) {
      r.push_back(split.rotation()[v]);
      ls.push_back(v == special ? g.label(p) : split.label(v));
      if (v != special) other_min = std::min(other_min, split.label(v));
      as.push_back(split.arrow(v));
      for (int x : split.rotation()[v])
        if (x < split.partner(x)) pe.emplace_back(x, split.partner(x));
    }
    return std::make_pair(other_min, CellGraph(std::move(r), pe, std::move(ls), std::move(as)));
  };
  auto [min_a, graph_a] = build(piece_a, p);
  auto [min_b, graph_b] = build(piece_b, new_vertex);
  std::vector<CellGraph> parts;
  if (min_b < min_a) {
    parts = {graph_b, graph_a};
  } else {
    parts = {graph_a, graph_b};
  }
  return Eco2Result{true, split, std::move(parts)};
}

namespace {

// Encodes a connected component by a traversal started at h0.
std::vector<int> encode_from(const CellGraph& g, int h0, const std::vector<int>& label_of_vertex) {
  std::map<int, int> number;
  std::vector<int> order{h0};
  number[h0] = 0;
  std::vector<int> code;
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int y : {g.next(x), g.partner(x)}) {
      if (!number.count(y)) {
        number[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
    code.push_back(label_of_vertex[g.vertex_of(x)]);
    code.push_back(number[g.next(x)]);
    code.push_back(number[g.partner(x)]);
  }
  return code;
}

std::vector<int> vertex_label_table(const CellGraph& g, const std::vector<int>& vs, bool normalize) {
  std::vector<int> table(g.num_vertices(), 0);
  std::vector<int> ls;
  for (int v : vs) ls.push_back(g.label(v));
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  for (int v : vs) {
    table[v] = normalize ? static_cast<int>(std::lower_bound(ls.begin(), ls.end(), g.label(v)) - ls.begin()) + 1
                         : g.label(v);
  }
  return table;
}

}  // namespace

CanonicalForm canonical_form(const CellGraph& g, bool normalize_labels) {
  CanonicalForm form;
  for (const auto& vs : g.component_vertices()) {
    auto table = vertex_label_table(g, vs, normalize_labels);
    int min_label = INT_MAX;
    for (int v : vs) min_label = std::min(min_label, table[v]);
    std::vector<int> best;
    bool any = false;
    for (int v : vs) {
      if (table[v] != min_label) continue;
      if (g.rotation()[v].empty()) {
        best = {-1, table[v]};
        any = true;
        continue;
      }
      for (int h : g.rotation()[v]) {
        auto code = encode_from(g, h, table);
        if (!any || code < best) {
          best = std::move(code);
          any = true;
        }
      }
    }
    form.push_back(std::move(best));
  }
  std::sort(form.begin(), form.end());
  return form;
}

Integer automorphism_order(const CellGraph& g) {
  Integer total = 1;
  for (const auto& vs : g.component_vertices()) {
    auto table = vertex_label_table(g, vs, false);
    int v0 = vs.front();
    for (int v : vs)
      if (g.label(v) < g.label(v0)) v0 = v;
    if (g.rotation()[v0].empty()) continue;
    int h0 = g.rotation()[v0].front();
    auto reference = encode_from(g, h0, table);
    int count = 0;
    for (int v : vs) {
      if (g.label(v) != g.label(v0)) continue;
      for (int h : g.rotation()[v])
        if (encode_from(g, h, table) == reference) ++count;
    }
    total *= count;
  }
  return total;
}

namespace {

void check_profile(const std::vector<int>& mu, const EnumerationLimits& limits) {
  if (mu.empty()) throw InputError("degree profile must have at least one vertex");
  int sum = 0;
  for (int m : mu) {
    if (m < 0) throw InputError("degrees must be non-negative");
    sum += m;
  }
  if (sum > limits.max_degree_sum) {
    throw GuardError("degree sum " + std::to_string(sum) + " exceeds the brute-force guard " +
                     std::to_string(limits.max_degree_sum) + " (raise it with TQFT_MAX_DEGREE_SUM)");
  }
}

// Calls visit(partner) for every perfect matching of the half-edges 0..H-1, then
// reports (connected, genus) through the callback arguments.
template <typename Visit>
void for_each_matching(const std::vector<int>& mu, Visit visit) {
  const int n = static_cast<int>(mu.size());
  int total = std::accumulate(mu.begin(), mu.end(), 0);
  if (total % 2 != 0) return;
  std::vector<int> vertex(total), next(total);
  int offset = 0;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < mu[v]; ++i) {
      vertex[offset + i] = v;
      next[offset + i] = offset + (i + 1) % mu[v];
    }
    offset += mu[v];
  }
  std::vector<int> partner(total, -1);
  std::vector<char> seen(total);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int h = 0; h < total; ++h)
      if (partner[h] < 0) {
        first = h;
        break;
      }
    if (first < 0) {
      UnionFind uf(n);
      for (int h = 0; h < total; ++h) uf.unite(vertex[h], vertex[partner[h]]);
      int comps = 0;
      for (int v = 0; v < n; ++v) comps += uf.find(v) == v ? 1 : 0;
      int faces = 0;
      std::fill(seen.begin(), seen.end(), 0);
      for (int h = 0; h < total; ++h) {
        if (seen[h]) continue;
        ++faces;
        for (int x = h; !seen[x]; x = next[partner[x]]) seen[x] = 1;
      }
      for (int v = 0; v < n; ++v) faces += mu[v] == 0 ? 1 : 0;
      int twice = 2 - n + total / 2 - faces;
      visit(partner, comps == 1, twice / 2);
      return;
    }
    for (int h = first + 1; h < total; ++h) {
      if (partner[h] >= 0) continue;
      partner[first] = h;
      partner[h] = first;
      rec();
      partner[first] = partner[h] = -1;
    }
  };
  rec();
}

}  // namespace

std::vector<CellGraph> enumerate_arrowed(int genus, const std::vector<int>& mu, EnumerationLimits limits) {
  check_profile(mu, limits);
  std::vector<CellGraph> out;
  for_each_matching(mu, [&](const std::vector<int>& partner, bool connected, int g) {
    if (!connected || g != genus) return;
    std::vector<std::vector<int>> rot;
    std::vector<int> arrows;
    int offset = 0;
    for (int m : mu) {
      std::vector<int> cyc(m);
      std::iota(cyc.begin(), cyc.end(), offset);
      arrows.push_back(m > 0 ? offset : -1);
      rot.push_back(std::move(cyc));
      offset += m;
    }
    std::vector<std::pair<int, int>> es;
    for (int h = 0; h < static_cast<int>(partner.size()); ++h)
      if (h < partner[h]) es.emplace_back(h, partner[h]);
    out.emplace_back(std::move(rot), es, std::vector<int>{}, std::move(arrows));
  });
  return out;
}

std::map<int, Integer> count_brute_by_genus(const std::vector<int>& mu, EnumerationLimits limits) {
  check_profile(mu, limits);
  std::map<int, Integer> counts;
  for_each_matching(mu, [&](const std::vector<int>&, bool connected, int g) {
    if (connected) counts[g] += 1;
  });
  return counts;
}

Integer count_brute(int genus, const std::vector<int>& mu, EnumerationLimits limits) {
  auto counts = count_brute_by_genus(mu, limits);
  auto it = counts.find(genus);
  return it == counts.end() ? Integer(0) : it->second;
}

std::vector<Morphism> hom_set(const CellGraph& source, const CellGraph& target, int max_edges) {
  if (source.num_edges() > max_edges || target.num_edges() > max_edges) {
    throw GuardError("hom_set is limited to graphs with at most " + std::to_string(max_edges) + " edges");
  }
  const auto goal = canonical_form(target, true);
  std::vector<Morphism> out;
  if (canonical_form(source, true) == goal) {
    Integer aut = automorphism_order(source);
    for (int i = 0; i < aut.get_si(); ++i) out.push_back(Morphism{{}, i});
  }

  struct State {
    CellGraph graph;
    std::vector<std::pair<int, int>> sequence;
  };
  std::set<std::vector<std::pair<int, int>>> matched;
  std::set<std::pair<std::vector<std::pair<int, int>>, CanonicalForm>> visited;
  std::deque<State> queue{State{source, {}}};
  while (!queue.empty()) {
    State s = std::move(queue.front());
    queue.pop_front();
    for (auto [a, b] : s.graph.edges()) {
      CellGraph next = s.graph;
      if (s.graph.is_loop(a)) {
        next = eco2(s.graph, a).split;
      } else {
        // The endpoint with the smaller label is the tail, so it keeps its label.
        int tail = s.graph.label(s.graph.vertex_of(a)) <= s.graph.label(s.graph.vertex_of(b)) ? a : b;
        next = eco1(s.graph, tail);
      }
      auto seq = s.sequence;
      seq.emplace_back(a, b);
      auto key = seq;
      std::sort(key.begin(), key.end());
      if (!visited.insert({key, canonical_form(next, false)}).second) continue;
      if (!matched.count(key) && canonical_form(next, true) == goal) {
        matched.insert(key);
        out.push_back(Morphism{seq, 0});
      }
      queue.push_back(State{std::move(next), std::move(seq)});
    }
  }
  return out;
}

}  // namespace tqft
