#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles/tensor_oracle.hpp"
#include "tqft/errors.hpp"
#include "tqft/frobenius.hpp"
#include "tqft/zoo.hpp"

using namespace tqft;

namespace {

Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

std::vector<FrobeniusAlgebra> commutative_zoo() {
  return {semisimple(1), semisimple(2), semisimple(3), group_algebra(preset_group("Z/3")),
          center_of_group_algebra(preset_group("S3")), center_of_group_algebra(preset_group("D4"))};
}

}  // namespace

TEST_CASE("validate reports each axiom") {
  auto k2 = semisimple(2);
  CHECK(k2.report().ok());
  CHECK(k2.unit() == vec({1, 1}));

  auto mat = matrix_algebra(2);
  CHECK(mat.report().ok());
  CHECK_FALSE(mat.report().commutativity_asserted);
  CHECK_FALSE(mat.report().commutative);

  FrobeniusAlgebra degenerate(k2.basis(), k2.structure_constants(), vec({1, 0}), true);
  CHECK_FALSE(degenerate.report().nondegenerate);
  CHECK_FALSE(degenerate.report().ok());
  CHECK_THROWS_AS(degenerate.eta_inverse(), AlgebraError);

  CHECK_THROWS_AS(FrobeniusAlgebra({"a", "b"}, std::vector<Scalar>(7), vec({1, 1}), true), InputError);
  CHECK_THROWS_AS(FrobeniusAlgebra({"a"}, std::vector<Scalar>(1, 1), vec({1, 1}), true), InputError);

  FrobeniusAlgebra wrong_flag(mat.basis(), mat.structure_constants(), mat.counit_values(), true);
  CHECK_FALSE(wrong_flag.report().ok());
}

TEST_CASE("multiplication and pairing on small algebras") {
  auto k2 = semisimple(2);
  auto e1 = k2.basis_vector(0), e2 = k2.basis_vector(1);
  CHECK(multiply(k2, e1, e2) == vec({0, 0}));
  CHECK(multiply(k2, e1, e1) == e1);
  CHECK(k2.eta() == Matrix::identity(2));

  auto z2 = group_algebra(preset_group("Z/2"));
  CHECK(multiply(z2, z2.basis_vector(1), z2.basis_vector(1)) == z2.basis_vector(0));
  CHECK(z2.eta() == Matrix::identity(2));

  for (const auto& alg : commutative_zoo()) {
    for (int i = 0; i < alg.dim(); ++i) {
      auto u = alg.basis_vector(i);
      CHECK(pairing_eta(alg, alg.unit(), u) == counit(alg, u));
    }
    CHECK(lambda(alg, alg.unit()) == alg.counit_values());
    auto cov = lambda(alg, alg.basis_vector(0));
    CHECK(lambda_inverse(alg, cov) == alg.basis_vector(0));
  }
}

TEST_CASE("restricted center of Z/2 reproduces the hand computations") {
  auto z = center_of_group_algebra(preset_group("Z/2"), CenterCounit::kRestricted);
  CHECK(z.eta() == Matrix::identity(2));
  auto delta = comultiply(z, z.unit());
  CHECK(delta.data() == std::vector<Scalar>{1, 0, 0, 1});
  CHECK(euler_element(z) == vec({2, 0}));
  for (int g = 0; g <= 5; ++g) CHECK(surface_invariant(z, g) == pow(Scalar(2), g));
  std::vector<Vector> one{z.unit()};
  CHECK(omega(z, 1, one) == 2);

  auto grp = group_algebra(preset_group("Z/2"));
  CHECK(z.structure_constants() == grp.structure_constants());
  CHECK(z.counit_values() == grp.counit_values());
}

TEST_CASE("Dijkgraaf-Witten center of Z/2") {
  auto z = center_of_group_algebra(preset_group("Z/2"));
  CHECK(euler_element(z) == vec({4, 0}));
  std::vector<Vector> one{z.unit()};
  CHECK(omega(z, 1, one) == 2);
  CHECK(surface_invariant(z, 2) == 8);
}

TEST_CASE("comultiplication and Euler elements") {
  auto k2 = semisimple(2);
  auto d = comultiply(k2, k2.basis_vector(0));
  CHECK(d.data() == std::vector<Scalar>{1, 0, 0, 0});

  for (int n = 1; n <= 4; ++n) {
    auto alg = semisimple(n);
    CHECK(euler_element(alg) == alg.unit());
    for (int g = 0; g <= 3; ++g) CHECK(surface_invariant(alg, g) == n);
  }
  auto mat = matrix_algebra(2);
  CHECK(euler_element(mat) == vec({2, 0, 0, 2}));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int a = i / 2, b = i % 2, c = j / 2, d2 = j % 2;
      CHECK(mat.eta()(i, j) == ((b == c && a == d2) ? 1 : 0));
    }
  CHECK(euler_element(group_algebra(preset_group("Z/3"))) == vec({3, 0, 0}));

  for (const auto& alg : commutative_zoo()) {
    auto du = comultiply_unit(alg);
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = 0; b < alg.dim(); ++b) CHECK(du[static_cast<size_t>(a) * alg.dim() + b] == alg.eta_inverse()(a, b));
  }
}

TEST_CASE("Frobenius associativity and the m-delta diagram") {
  std::vector<FrobeniusAlgebra> algs = commutative_zoo();
  algs.push_back(matrix_algebra(2));
  algs.push_back(group_algebra(preset_group("S3")));
  for (const auto& alg : algs) {
    CHECK(oracle::frobenius_associative(alg));
    CHECK(oracle::m_delta_diagram(alg));
  }
}

TEST_CASE("omega identities") {
  auto k2 = semisimple(2);
  auto e1 = k2.basis_vector(0), e2 = k2.basis_vector(1);
  std::vector<Vector> vs{e1, e2, e1};
  CHECK(omega(k2, 0, vs) == 0);
  CHECK_THROWS_AS(omega(matrix_algebra(2), 0, vs), AlgebraError);

  for (const auto& alg : commutative_zoo()) {
    const int r = alg.dim();
    std::vector<Vector> base{alg.basis_vector(0), alg.basis_vector(r - 1)};
    for (int g = 0; g <= 2; ++g) {
      auto with_unit = base;
      with_unit.push_back(alg.unit());
      CHECK(omega(alg, g, with_unit) == omega(alg, g, base));
      if (g >= 1) {
        Scalar sum;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) {
            auto ext = base;
            ext.push_back(alg.basis_vector(a));
            ext.push_back(alg.basis_vector(b));
            sum += omega(alg, g - 1, ext) * alg.eta_inverse()(a, b);
          }
        CHECK(sum == omega(alg, g, base));
      }
      // Splitting: omega_{g1+g2}(v1, v2) = sum omega_{g1}(v1, e_a) eta^{ab} omega_{g2}(e_b, v2).
      for (int g1 = 0; g1 <= g; ++g1) {
        Scalar sum;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) {
            std::vector<Vector> l{base[0], alg.basis_vector(a)}, rr{alg.basis_vector(b), base[1]};
            sum += omega(alg, g1, l) * alg.eta_inverse()(a, b) * omega(alg, g - g1, rr);
          }
        CHECK(sum == omega(alg, g, base));
      }
    }
    // Symmetry of eps(e_i e_j e_k).
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
          std::vector<Vector> a{alg.basis_vector(i), alg.basis_vector(j), alg.basis_vector(k)};
          std::vector<Vector> b{alg.basis_vector(k), alg.basis_vector(i), alg.basis_vector(j)};
          CHECK(omega(alg, 0, a) == omega(alg, 0, b));
        }
  }
}

TEST_CASE("cobordism tensors reproduce the generating operations") {
  for (const auto& alg : commutative_zoo()) {
    const int r = alg.dim();
    auto m = cobordism_tensor(alg, 0, 2, 1);
    auto d = cobordism_tensor(alg, 0, 1, 2);
    auto eta = cobordism_tensor(alg, 0, 2, 0);
    auto unit = cobordism_tensor(alg, 0, 0, 1);
    CHECK(unit.apply({}).data() == alg.unit());
    for (int i = 0; i < r; ++i) {
      auto ei = alg.basis_vector(i);
      std::vector<Vector> one{ei};
      CHECK(d.apply(one) == comultiply(alg, ei));
      for (int j = 0; j < r; ++j) {
        auto ej = alg.basis_vector(j);
        std::vector<Vector> two{ei, ej};
        CHECK(m.apply(two).data() == multiply(alg, ei, ej));
        CHECK(eta.apply(two)[0] == pairing_eta(alg, ei, ej));
      }
    }
  }
  CHECK_THROWS_AS(cobordism_tensor(semisimple(2), 0, 0, 0), InputError);
  CHECK_THROWS_AS(cobordism_tensor(matrix_algebra(2), 0, 2, 1), AlgebraError);
}

TEST_CASE("sewing") {
  auto k2 = semisimple(2);
  auto eps = cobordism_tensor(k2, 0, 1, 0);
  auto m = cobordism_tensor(k2, 0, 2, 1);
  CHECK(sew(eps, m, 1) == cobordism_tensor(k2, 0, 2, 0));

  for (const auto& alg : {semisimple(2), center_of_group_algebra(preset_group("S3"))}) {
    for (int g = 0; g <= 1; ++g)
      for (int mm = 1; mm <= 2; ++mm)
        for (int n = 0; n <= 2; ++n) {
          auto t = cobordism_tensor(alg, g, mm, n);
          auto caps = cobordism_tensor(alg, 0, 0, mm);
          auto full = sew(t, caps, mm);
          CHECK(full.inputs() == 0);
          if (n == 0) continue;
          CHECK(full == cobordism_tensor(alg, g + mm - 1, 0, n));
        }
  }

  auto a = cobordism_tensor(k2, 0, 1, 2);
  auto b = cobordism_tensor(k2, 0, 2, 1);
  auto glued = sew(b, a, 2);
  CHECK(glued == cobordism_tensor(k2, 1, 1, 1));
  CHECK(glued == oracle::contract(b, a, 2));

  // Associativity: (T1 o T2) o T3 = T1 o (T2 o T3).
  auto t1 = cobordism_tensor(k2, 0, 2, 1), t2 = cobordism_tensor(k2, 1, 1, 2), t3 = cobordism_tensor(k2, 0, 1, 1);
  CHECK(sew(sew(t1, t2, 1), t3, 1) == sew(t1, sew(t2, t3, 1), 1));
  CHECK_THROWS_AS(sew(t1, t3, 2), InputError);
}

TEST_CASE("direct sums and tensor products") {
  auto sum = direct_sum(semisimple(1), semisimple(1));
  CHECK(sum.structure_constants() == semisimple(2).structure_constants());
  CHECK(sum.counit_values() == semisimple(2).counit_values());
  auto prod = tensor_product(semisimple(2), semisimple(2));
  CHECK(prod.dim() == 4);
  CHECK(prod.report().ok());

  auto a = center_of_group_algebra(preset_group("S3"));
  auto b = group_algebra(preset_group("Z/2"));
  auto ab = direct_sum(a, b);
  CHECK(ab.report().ok());
  Vector expect = euler_element(a);
  auto eb = euler_element(b);
  expect.insert(expect.end(), eb.begin(), eb.end());
  CHECK(euler_element(ab) == expect);
  auto tp = tensor_product(a, b);
  CHECK(tp.report().ok());
  for (int g = 0; g <= 2; ++g) CHECK(surface_invariant(tp, g) == surface_invariant(a, g) * surface_invariant(b, g));
}
