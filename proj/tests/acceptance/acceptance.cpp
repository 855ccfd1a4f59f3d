#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles/graphs.hpp"
#include "oracles/intersection_oracle.hpp"
#include "oracles/tensor_oracle.hpp"
#include "tqft/catalan.hpp"
#include "tqft/eco.hpp"
#include "tqft/toprec.hpp"
#include "tqft/zoo.hpp"

using namespace tqft;
using namespace tqft::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome catalan_base() {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int m = 0; m <= 7; ++m)
    if (count(0, {2 * m}) != catalan[m]) return {false, "m = " + std::to_string(m)};
  return {true, "m = 0..7"};
}

Outcome oracle_equivalence() {
  int cases = 0;
  std::vector<std::vector<int>> profiles{{0}};
  std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& mu, int budget) {
    if (!mu.empty()) profiles.push_back(mu);
    for (int d = 1; d <= budget; ++d) {
      mu.push_back(d);
      gen(mu, budget - d);
      mu.pop_back();
    }
  };
  std::vector<int> mu;
  gen(mu, 10);
  for (const auto& p : profiles) {
    auto brute = count_brute_by_genus(p);
    int sum = 0;
    for (int d : p) sum += d;
    for (int g = 0; g <= sum / 4 + 1; ++g) {
      Integer b = brute.count(g) ? brute.at(g) : Integer(0);
      ++cases;
      if (count(g, p) != b) return {false, "mismatch at g = " + std::to_string(g)};
    }
  }
  return {true, std::to_string(profiles.size()) + " profiles, " + std::to_string(cases) + " (g, mu) cases"};
}

std::vector<std::pair<std::string, FrobeniusAlgebra>> axiom_algebras() {
  std::vector<std::pair<std::string, FrobeniusAlgebra>> v;
  for (int n = 1; n <= 4; ++n) v.emplace_back("K^" + std::to_string(n), semisimple(n));
  v.emplace_back("Mat2", matrix_algebra(2));
  v.emplace_back("C[Z/2]", group_algebra(preset_group("Z/2")));
  v.emplace_back("C[Z/3]", group_algebra(preset_group("Z/3")));
  v.emplace_back("ZC[S3]", center_of_group_algebra(preset_group("S3")));
  v.emplace_back("ZC[D4]", center_of_group_algebra(preset_group("dihedral(4)")));
  return v;
}

Outcome frobenius_axioms() {
  for (const auto& [name, alg] : axiom_algebras()) {
    if (!validate(alg).ok() || !oracle::m_delta_diagram(alg) || !oracle::frobenius_associative(alg)) {
      return {false, name};
    }
  }
  return {true, "9 algebras"};
}

Outcome mednykh() {
  for (const char* name : {"Z/2", "Z/3", "S3"}) {
    auto g = preset_group(name);
    auto z = center_of_group_algebra(g);
    for (int genus = 1; genus <= 2; ++genus)
      if (surface_invariant(z, genus) != hom_count_oracle(g, genus)) return {false, std::string(name)};
  }
  return {true, "Z/2, Z/3, S3 at g = 1, 2"};
}

Outcome graph_independence() {
  std::mt19937_64 rng(2024);
  const auto graphs = connected_graphs(4);
  int evaluations = 0, removals = 0;
  for (const auto& alg : {semisimple(3), center_of_group_algebra(preset_group("S3"))}) {
    for (const auto& g : graphs) {
      for (int trial = 0; trial < 20; ++trial) {
        auto colors = random_colors(g.num_vertices(), alg.dim(), rng);
        Vector prod = alg.unit();
        for (const auto& c : colors) prod = multiply(alg, prod, c);
        const Scalar expect = omega(alg, g.genus(), std::vector<Vector>{prod});
        if (evaluate_graph(alg, g, colors) != expect) return {false, "deterministic order"};
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
          if (evaluate_graph(alg, g, colors, {seed * 7919 + trial}) != expect) return {false, "randomized order"};
        }
        ++evaluations;
      }
      if (g.num_edges() > 3) continue;
      auto colors = random_colors(g.num_vertices(), alg.dim(), rng);
      for (int v = 0; v < g.num_vertices(); ++v)
        for (int pos = 0; pos <= static_cast<int>(g.rotation()[v].size()); ++pos) {
          if (!edge_removal_equivalent(alg, add_disc_loop(g, v, pos), RemovalCase::kDiscLoop, colors)) {
            return {false, "case 1"};
          }
          ++removals;
        }
      for (int h : g.half_edges()) {
        auto which = g.is_loop(h) ? RemovalCase::kHomotopicLoop : RemovalCase::kParallelEdge;
        if (!edge_removal_equivalent(alg, add_parallel_edge(g, h), which, colors)) {
          return {false, which == RemovalCase::kParallelEdge ? "case 2" : "case 3"};
        }
        ++removals;
      }
    }
  }
  return {true, std::to_string(graphs.size()) + " graphs, " + std::to_string(evaluations) + " colorings, " +
                    std::to_string(removals) + " edge removals"};
}

Outcome weighted_recursion() {
  std::mt19937_64 rng(99);
  auto alg = semisimple(3);
  int checks = 0;
  std::function<void(std::vector<int>&, int)> gen;
  bool ok = true;
  gen = [&](std::vector<int>& mu, int budget) {
    if (!mu.empty()) {
      int sum = 0;
      for (int d : mu) sum += d;
      for (int g = 0; g <= sum / 4 + 1 && ok; ++g) {
        auto vs = random_colors(static_cast<int>(mu.size()), alg.dim(), rng);
        ok = counting_formula_rhs(alg, g, mu, vs) == weighted_omega(alg, g, mu, vs);
        ++checks;
      }
    }
    for (int d = 1; d <= budget && ok; ++d) {
      mu.push_back(d);
      gen(mu, budget - d);
      mu.pop_back();
    }
  };
  std::vector<int> mu;
  gen(mu, 8);
  return {ok, std::to_string(checks) + " substitutions"};
}

Outcome hom_sets() {
  const size_t got[] = {hom_set(point(), point()).size(),   hom_set(point(), segment()).size(),
                        hom_set(path3(), segment()).size(), hom_set(path3(), point()).size(),
                        hom_set(digon(), planar_loop()).size(), hom_set(digon(), two_points()).size()};
  const size_t want[] = {1, 0, 2, 1, 2, 1};
  std::string sizes;
  for (int i = 0; i < 6; ++i) sizes += (i ? "," : "") + std::to_string(got[i]);
  return {std::equal(got, got + 6, want), "sizes (" + sizes + ")"};
}

Outcome sewing() {
  int checks = 0;
  for (const auto& alg : {semisimple(2), center_of_group_algebra(preset_group("S3"))}) {
    for (int g1 = 0; g1 <= 2; ++g1)
      for (int g2 = 0; g1 + g2 <= 2; ++g2)
        for (int m1 = 1; m1 <= 3; ++m1)
          for (int n1 = 0; n1 <= 3; ++n1)
            for (int m2 = 0; m2 <= 3; ++m2)
              for (int n2 = 1; n2 <= 3; ++n2)
                for (int j = 1; j <= std::min(m1, n2); ++j) {
                  const int g = g1 + g2 + j - 1, m = m1 + m2 - j, n = n1 + n2 - j;
                  if (g > 2 || m + n > 3 || m + n == 0) continue;
                  auto first = cobordism_tensor(alg, g1, m1, n1);
                  auto second = cobordism_tensor(alg, g2, m2, n2);
                  auto glued = sew(first, second, j);
                  if (glued != cobordism_tensor(alg, g, m, n) || glued != oracle::contract(first, second, j)) {
                    return {false, "g1=" + std::to_string(g1) + " g2=" + std::to_string(g2) + " j=" + std::to_string(j)};
                  }
                  ++checks;
                }
  }
  return {true, std::to_string(checks) + " compositions"};
}

bool factorizes(const CorrelatorTable& plain, const CorrelatorTable& twisted, const FrobeniusAlgebra& alg) {
  for (const auto& [gn, corr] : twisted) {
    const int n = gn.second;
    std::vector<int> slots(n, 0);
    const std::vector<int> discs(n, 0);
    while (true) {
      std::vector<Vector> vs;
      for (int s : slots) vs.push_back(alg.basis_vector(s));
      if (corr.entry(discs, slots) != plain.at(gn).entry(discs) * omega(alg, gn.first, vs)) return false;
      int pos = n - 1;
      while (pos >= 0 && ++slots[pos] == alg.dim()) slots[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return true;
}

std::vector<std::pair<std::string, FrobeniusAlgebra>> twist_algebras() {
  return {{"K^2", semisimple(2)}, {"ZC[Z/2]", center_of_group_algebra(preset_group("Z/2"))}};
}

Outcome twisted_factorization() {
  const auto plain = toprec_run(airy_curve(), 3);
  for (const auto& [name, alg] : twist_algebras()) {
    if (!factorizes(plain, twisted_toprec_run(airy_curve(), alg, 3), alg)) return {false, name};
  }
  return {true, "K^2 and ZC[Z/2], 2g-2+n <= 3"};
}

Outcome intersections() {
  oracle::TauOracle tau;
  const auto table = toprec_run(catalan_local_curve(), 2);
  struct Case {
    int g, n;
    std::vector<int> d;
    Scalar expected;
  };
  const Case cases[] = {{0, 3, {0, 0, 0}, 1}, {1, 1, {1}, Scalar(1, 24)}, {0, 4, {0, 0, 0, 1}, 1}};
  std::string detail;
  for (const auto& c : cases) {
    const IntersectionKey key{c.g, c.n, c.d};
    const Scalar counts = intersection_numbers(c.g, c.n).at(key);
    const Scalar rec = intersection_numbers_toprec(table, c.g, c.n).at(key);
    if (counts != c.expected || counts != tau(c.g, c.d) || counts != rec) return {false, "(g,n) = (" + std::to_string(c.g) + "," + std::to_string(c.n) + ")"};
    detail += (detail.empty() ? "" : ", ") + to_string(counts);
  }
  return {true, detail};
}

Outcome wkb() {
  WkbReport r = wkb_residual(3);
  if (!r.unstable_pins_match) return {false, "unstable terms"};
  for (const auto& o : r.orders)
    if (!o.vanishes()) return {false, "order " + std::to_string(o.order)};
  return {true, "orders h^0..h^3 vanish identically"};
}

Outcome doubling() {
  for (const auto& [name, alg] : twist_algebras()) {
    auto a = twisted_toprec_run(airy_curve(24), alg, 3);
    auto b = twisted_toprec_run(airy_curve(48), alg, 3);
    for (const auto& [gn, corr] : a)
      if (corr.entries() != b.at(gn).entries()) return {false, name};
  }
  auto a = toprec_run(airy_curve(24), 3);
  auto b = toprec_run(airy_curve(48), 3);
  for (const auto& [gn, corr] : a)
    if (corr.entries() != b.at(gn).entries()) return {false, "untwisted"};
  return {true, "N = 24 vs 48"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "Catalan base case", 1, catalan_base},
      {2, "recursion equals brute force", 120, oracle_equivalence},
      {3, "Frobenius axioms", 0, frobenius_axioms},
      {4, "group center invariants", 60, mednykh},
      {5, "graph independence", 0, graph_independence},
      {6, "weighted recursion", 0, weighted_recursion},
      {7, "hom sets", 0, hom_sets},
      {8, "sewing", 0, sewing},
      {9, "twisted factorization", 120, twisted_factorization},
      {10, "intersection numbers", 300, intersections},
      {11, "WKB residual", 300, wkb},
      {12, "series soundness", 0, doubling},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the time limit)";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
