#include "tqft/eco.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "tqft/errors.hpp"

namespace tqft {

size_t CountTable::KeyHash::operator()(const std::vector<int>& k) const {
  size_t h = 1469598103934665603ull;
  for (int x : k) h = (h ^ static_cast<size_t>(x + 0x9e37)) * 1099511628211ull;
  return h;
}

size_t CountTable::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

Integer CountTable::count(int genus, const std::vector<int>& mu) {
  if (mu.empty()) throw InputError("degree profile must have at least one vertex");
  if (genus < 0) return 0;
  int sum = 0;
  for (int m : mu) {
    if (m < 0) return 0;
    sum += m;
  }
  const int n = static_cast<int>(mu.size());
  if (n == 1 && mu[0] == 0) return genus == 0 ? 1 : 0;
  if (sum % 2 != 0) return 0;
  for (int m : mu)
    if (m == 0) return 0;
  // F >= 1 in n - E + F = 2 - 2g.
  if (2 * genus > sum / 2 - n + 1) return 0;

  std::vector<int> key;
  key.reserve(n + 1);
  key.push_back(genus);
  key.push_back(mu[0]);
  key.insert(key.end(), mu.begin() + 1, mu.end());
  std::sort(key.begin() + 2, key.end());
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  std::vector<int> canonical(key.begin() + 1, key.end());
  Integer value = compute(genus, canonical);
  std::lock_guard lock(mutex_);
  memo_.emplace(std::move(key), value);
  return value;
}

Integer CountTable::compute(int genus, const std::vector<int>& mu) {
  const int n = static_cast<int>(mu.size());
  const int m1 = mu[0];
  Integer total = 0;

  // The arrowed edge joins vertex 1 to vertex j.
  for (int j = 1; j < n; ++j) {
    std::vector<int> sub;
    sub.push_back(m1 + mu[j] - 2);
    for (int i = 1; i < n; ++i)
      if (i != j) sub.push_back(mu[i]);
    Integer c = count(genus, sub);
    if (c != 0) total += mu[j] * c;
  }

  // The arrowed edge is a loop.
  std::vector<int> rest(mu.begin() + 1, mu.end());
  const int r = n - 1;
  for (int alpha = 0; alpha <= m1 - 2; ++alpha) {
    const int beta = m1 - 2 - alpha;
    std::vector<int> handle{alpha, beta};
    handle.insert(handle.end(), rest.begin(), rest.end());
    total += count(genus - 1, handle);
    for (int g1 = 0; g1 <= genus; ++g1) {
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> left{alpha}, right{beta};
        for (int i = 0; i < r; ++i) (mask >> i & 1 ? left : right).push_back(rest[i]);
        Integer a = count(g1, left);
        if (a == 0) continue;
        total += a * count(genus - g1, right);
      }
    }
  }
  return total;
}

Integer count(int genus, const std::vector<int>& mu) {
  static CountTable table;
  return table.count(genus, mu);
}

Scalar weighted_omega(const FrobeniusAlgebra& alg, int genus, const std::vector<int>& mu,
                      std::span<const Vector> vectors) {
  if (vectors.size() != mu.size()) throw InputError("one vector per vertex required");
  return Scalar(count(genus, mu)) * omega(alg, genus, vectors);
}

Scalar counting_formula_rhs(const FrobeniusAlgebra& alg, int genus, const std::vector<int>& mu,
                            std::span<const Vector> vectors) {
  const int n = static_cast<int>(mu.size());
  if (static_cast<int>(vectors.size()) != n) throw InputError("one vector per vertex required");
  const int r = alg.dim();
  const int m1 = mu[0];
  Scalar total;

  for (int j = 1; j < n; ++j) {
    std::vector<int> sub{m1 + mu[j] - 2};
    std::vector<Vector> vs{multiply(alg, vectors[0], vectors[j])};
    for (int i = 1; i < n; ++i)
      if (i != j) {
        sub.push_back(mu[i]);
        vs.push_back(vectors[i]);
      }
    total += mu[j] * weighted_omega(alg, genus, sub, vs);
  }
  if (m1 < 2) return total;

  std::vector<int> rest(mu.begin() + 1, mu.end());
  std::vector<Vector> rest_v(vectors.begin() + 1, vectors.end());
  Tensor split = comultiply(alg, vectors[0]);
  const Matrix& inv = alg.eta_inverse();
  // eta(v_1, e_k e_l) eta^{ka} eta^{lb}
  Matrix sep(r, r);
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) {
      Scalar w = pairing_eta(alg, vectors[0], multiply(alg, alg.basis_vector(k), alg.basis_vector(l)));
      if (w == 0) continue;
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) sep(a, b) += w * inv(k, a) * inv(l, b);
    }

  for (int alpha = 0; alpha <= m1 - 2; ++alpha) {
    const int beta = m1 - 2 - alpha;
    if (genus >= 1) {
      std::vector<int> sub{alpha, beta};
      sub.insert(sub.end(), rest.begin(), rest.end());
      Integer c = count(genus - 1, sub);
      if (c != 0) {
        Scalar acc;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) {
            const Scalar& w = split[static_cast<size_t>(a) * r + b];
            if (w == 0) continue;
            std::vector<Vector> vs{alg.basis_vector(a), alg.basis_vector(b)};
            vs.insert(vs.end(), rest_v.begin(), rest_v.end());
            acc += w * omega(alg, genus - 1, vs);
          }
        total += Scalar(c) * acc;
      }
    }
    const int k = n - 1;
    for (int g1 = 0; g1 <= genus; ++g1) {
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> left{alpha}, right{beta};
        std::vector<Vector> lv, rv;
        for (int i = 0; i < k; ++i) {
          (mask >> i & 1 ? left : right).push_back(rest[i]);
          (mask >> i & 1 ? lv : rv).push_back(rest_v[i]);
        }
        Integer cl = count(g1, left), cr = count(genus - g1, right);
        if (cl == 0 || cr == 0) continue;
        std::vector<Scalar> wl(r), wr(r);
        for (int a = 0; a < r; ++a) {
          std::vector<Vector> x{alg.basis_vector(a)};
          x.insert(x.end(), lv.begin(), lv.end());
          wl[a] = omega(alg, g1, x);
          std::vector<Vector> y{alg.basis_vector(a)};
          y.insert(y.end(), rv.begin(), rv.end());
          wr[a] = omega(alg, genus - g1, y);
        }
        Scalar acc;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b)
            if (sep(a, b) != 0) acc += sep(a, b) * wl[a] * wr[b];
        total += Scalar(cl * cr) * acc;
      }
    }
  }
  return total;
}

namespace {

Scalar evaluate(const FrobeniusAlgebra& alg, const CellGraph& g, const std::vector<Vector>& colors,
                std::mt19937_64* rng) {
  auto edges = g.edges();
  if (edges.empty()) {
    Scalar prod = 1;
    for (const auto& c : colors) prod *= counit(alg, c);
    return prod;
  }
  size_t pick = 0;
  if (rng) pick = std::uniform_int_distribution<size_t>(0, edges.size() - 1)(*rng);
  const int h = edges[pick].first;
  const int p = g.vertex_of(h);
  if (!g.is_loop(h)) {
    const int q = g.vertex_of(g.partner(h));
    CellGraph next = eco1(g, h);
    std::vector<Vector> c;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (v == q) continue;
      c.push_back(v == p ? multiply(alg, colors[p], colors[q]) : colors[v]);
    }
    return evaluate(alg, next, c, rng);
  }
  // delta(v) = sum_a (v e_a) (x) e^a with e^a = sum_b eta^{ab} e_b.
  CellGraph next = eco2(g, h).split;
  const Matrix& inv = alg.eta_inverse();
  Scalar total;
  for (int a = 0; a < alg.dim(); ++a) {
    std::vector<Vector> c = colors;
    c[p] = multiply(alg, colors[p], alg.basis_vector(a));
    Vector dual(alg.dim());
    for (int b = 0; b < alg.dim(); ++b) dual[b] = inv(a, b);
    c.push_back(std::move(dual));
    total += evaluate(alg, next, c, rng);
  }
  return total;
}

}  // namespace

Scalar evaluate_graph(const FrobeniusAlgebra& alg, const CellGraph& graph, const std::vector<Vector>& colors,
                      EdgeOrder order) {
  if (!alg.report().ok()) throw AlgebraError("algebra failed validation: " + alg.report().failures.front());
  if (!alg.commutative_flag()) throw AlgebraError("graph evaluation needs a commutative Frobenius algebra");
  if (static_cast<int>(colors.size()) != graph.num_vertices()) throw InputError("one color per vertex required");
  for (const auto& c : colors)
    if (static_cast<int>(c.size()) != alg.dim()) throw InputError("color has wrong dimension");
  if (order.seed) {
    std::mt19937_64 rng(*order.seed);
    return evaluate(alg, graph, colors, &rng);
  }
  return evaluate(alg, graph, colors, nullptr);
}

std::optional<int> find_removable_edge(const CellGraph& graph, RemovalCase which) {
  for (const auto& face : graph.faces()) {
    if (which == RemovalCase::kDiscLoop) {
      if (face.size() == 1) return face[0];
      continue;
    }
    if (face.size() != 2) continue;
    const int x = face[0], y = face[1];
    if (graph.partner(x) == y) continue;
    const bool loops = graph.is_loop(x) && graph.is_loop(y);
    const bool straight = !graph.is_loop(x) && !graph.is_loop(y);
    if (which == RemovalCase::kParallelEdge && straight) return y;
    if (which == RemovalCase::kHomotopicLoop && loops && graph.vertex_of(x) == graph.vertex_of(y)) return y;
  }
  return std::nullopt;
}

bool edge_removal_equivalent(const FrobeniusAlgebra& alg, const CellGraph& graph, RemovalCase which,
                             const std::vector<Vector>& colors) {
  auto h = find_removable_edge(graph, which);
  if (!h) throw GraphError("the requested edge-removal pattern does not occur in the graph");
  CellGraph smaller = graph.without_edge(*h);
  return evaluate_graph(alg, graph, colors) == evaluate_graph(alg, smaller, colors);
}

namespace {

int fresh_id(const CellGraph& g) {
  auto hs = g.half_edges();
  return hs.empty() ? 0 : hs.back() + 1;
}

}  // namespace

CellGraph add_disc_loop(const CellGraph& graph, int vertex, int position) {
  if (vertex < 0 || vertex >= graph.num_vertices()) throw InputError("no such vertex");
  auto rot = graph.rotation();
  auto& cyc = rot[vertex];
  if (position < 0 || position > static_cast<int>(cyc.size())) throw InputError("bad rotation position");
  const int x = fresh_id(graph), y = x + 1;
  cyc.insert(cyc.begin() + position, {x, y});
  auto edges = graph.edges();
  edges.emplace_back(x, y);
  return CellGraph(std::move(rot), edges, graph.labels(), graph.arrows());
}

CellGraph add_parallel_edge(const CellGraph& graph, int h) {
  const int hp = graph.partner(h);
  const int x = fresh_id(graph), y = x + 1;
  auto rot = graph.rotation();
  auto& at_h = rot[graph.vertex_of(h)];
  at_h.insert(std::find(at_h.begin(), at_h.end(), h) + 1, x);
  auto& at_hp = rot[graph.vertex_of(hp)];
  at_hp.insert(std::find(at_hp.begin(), at_hp.end(), hp), y);
  auto edges = graph.edges();
  edges.emplace_back(x, y);
  return CellGraph(std::move(rot), edges, graph.labels(), graph.arrows());
}

}  // namespace tqft
