#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tqft/errors.hpp"
#include "tqft/toprec.hpp"
#include "tqft/zoo.hpp"

using namespace tqft;

namespace {

LocalSpectralCurve cubic_curve(int n = 24) {
  CurveDisc d;
  d.x = {{2, 1}, {3, 1}};
  d.y = {{1, 1}, {2, Scalar(1, 3)}};
  return LocalSpectralCurve({d}, n);
}

LocalSpectralCurve two_disc_curve(int n = 24) {
  CurveDisc a, b;
  a.x = {{2, 1}};
  a.y = {{1, 1}};
  b.x = {{2, 1}, {3, 2}};
  b.y = {{1, 1}, {3, -1}};
  return LocalSpectralCurve({a, b}, n);
}

}  // namespace

TEST_CASE("series arithmetic") {
  ScalarSeries one_minus_z = ScalarSeries::monomial(0, 1) - ScalarSeries::monomial(1, 1);
  ScalarSeries geo = inverse(one_minus_z, 10);
  for (int e = 0; e < 10; ++e) CHECK(geo[e] == 1);
  CHECK_THROWS_AS(geo[10], TruncationError);
  ScalarSeries sq = power(one_minus_z, -2, 8);
  for (int e = 0; e < 8; ++e) CHECK(sq[e] == e + 1);
  ScalarSeries c = compose(geo, ScalarSeries::monomial(2, 1));
  CHECK(c[4] == 1);
  CHECK(c[5] == 0);
  CHECK(residue_of_product(ScalarSeries::monomial(-3, 2), geo) == 2);
}

TEST_CASE("curve validation") {
  CurveDisc d;
  d.x = {{2, 1}};
  d.y = {{1, 1}};
  CHECK_NOTHROW(LocalSpectralCurve({d}, 12));
  CurveDisc bad = d;
  bad.x[2] = 2;
  CHECK_THROWS_AS(LocalSpectralCurve({bad}, 12), InputError);
  bad = d;
  bad.y[0] = 1;
  CHECK_THROWS_AS(LocalSpectralCurve({bad}, 12), InputError);
  bad = d;
  bad.x[-1] = 1;
  CHECK_THROWS_AS(LocalSpectralCurve({bad}, 12), InputError);
  CHECK_THROWS_AS(LocalSpectralCurve({}, 12), InputError);
}

TEST_CASE("involution") {
  CurveDisc d;
  d.x = {{2, 1}, {3, 1}};
  d.y = {{1, 1}};
  LocalSpectralCurve curve({d}, 12);
  ScalarSeries s = involution(curve, 0);
  const int expected[] = {0, -1, -1, -1, -2, -4, -9, -21};
  for (int e = 0; e < 8; ++e) CHECK(s[e] == expected[e]);
  CHECK(s.prec() == 11);
  ScalarSeries twice = compose(s, s);
  for (int e = 0; e < twice.prec(); ++e) CHECK(twice[e] == (e == 1 ? 1 : 0));
  ScalarSeries sa = involution(airy_curve(12), 0);
  CHECK(sa.terms().size() == 1);
  CHECK(sa[1] == -1);
}

TEST_CASE("kernel and W02 shape") {
  auto curve = airy_curve(12);
  auto ks = recursion_kernel(curve, 0, 5);
  CHECK(ks[0][-1] == Scalar(1, 2));
  CHECK(ks[1].terms().empty());
  CHECK(ks[2][1] == Scalar(1, 2));
  PolySeries w = w02_series(curve, 0, 0);
  CHECK(w[0] == MPoly::monomial({2}, 1));
  CHECK(w[3] == MPoly::monomial({5}, 4));
  CHECK(w02_series(two_disc_curve(), 0, 1).terms().empty());
}

TEST_CASE("Airy correlators") {
  auto table = toprec_run(airy_curve(), 4);
  CHECK(table.at({0, 3}).entry({0, 0, 0}) == MPoly::monomial({2, 2, 2}, -1));
  CHECK(table.at({1, 1}).entry({0}) == MPoly::monomial({4}, Scalar(-1, 8)));
  MPoly w04 = table.at({0, 4}).entry({0, 0, 0, 0});
  CHECK(w04.coefficient({4, 2, 2, 2}) == 3);
  CHECK(w04.coefficient({2, 4, 2, 2}) == 3);
  MPoly w12 = table.at({1, 2}).entry({0, 0});
  CHECK(w12.coefficient({6, 2}) == Scalar(5, 8));
  CHECK(w12.coefficient({4, 4}) == Scalar(3, 8));
}

TEST_CASE("correlators are symmetric and odd") {
  for (const auto& curve : {cubic_curve(), two_disc_curve()}) {
    auto table = toprec_run(curve, 3);
    for (const auto& [gn, corr] : table) {
      for (const auto& [key, p] : corr.entries()) {
        const auto& discs = key.first;
        for (int i = 0; i + 1 < gn.second; ++i) {
          std::vector<int> perm(gn.second);
          for (int j = 0; j < gn.second; ++j) perm[j] = j;
          std::swap(perm[i], perm[i + 1]);
          std::vector<int> swapped = discs;
          std::swap(swapped[i], swapped[i + 1]);
          CHECK(corr.entry(swapped).permuted(perm, gn.second) == p);
        }
        for (const auto& [e, c] : p.terms())
          for (int x : e) CHECK(x >= 2);
      }
    }
  }
}

TEST_CASE("disjoint discs decouple") {
  auto table = toprec_run(two_disc_curve(), 3);
  auto airy = toprec_run(airy_curve(), 3);
  CHECK(table.at({0, 3}).entry({0, 0, 1}).is_zero());
  CHECK(table.at({1, 1}).entry({0}) == airy.at({1, 1}).entry({0}));
  CHECK(table.at({0, 4}).entry({0, 0, 0, 0}) == airy.at({0, 4}).entry({0, 0, 0, 0}));
  CHECK(table.at({1, 2}).entry({1, 0}).is_zero());
}

TEST_CASE("twisted recursion factorizes over a semisimple algebra") {
  auto curve = cubic_curve();
  auto plain = toprec_run(curve, 3);
  for (const auto& alg : {semisimple(2), center_of_group_algebra(preset_group("S3"))}) {
    auto twisted = twisted_toprec_run(curve, alg, 3);
    for (const auto& [gn, corr] : twisted) {
      const int n = gn.second;
      std::vector<int> discs(n, 0);
      std::vector<int> slots(n, 0);
      while (true) {
        std::vector<Vector> vs;
        for (int s : slots) vs.push_back(alg.basis_vector(s));
        MPoly expected = plain.at(gn).entry(discs) * omega(alg, gn.first, vs);
        CHECK(corr.entry(discs, slots) == expected);
        int pos = n - 1;
        while (pos >= 0 && ++slots[pos] == alg.dim()) slots[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
}

TEST_CASE("results are stable when the truncation doubles") {
  auto a = toprec_run(cubic_curve(16), 3);
  auto b = toprec_run(cubic_curve(32), 3);
  for (const auto& [gn, corr] : a) CHECK(corr.entries() == b.at(gn).entries());
}

TEST_CASE("insufficient truncation is reported") {
  CHECK_THROWS_AS(toprec_run(cubic_curve(6), 5), TruncationError);
}
