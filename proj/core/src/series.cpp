#include "tqft/series.hpp"

namespace tqft {

ScalarSeries inverse(const ScalarSeries& f, int limit) {
  if (f.terms().empty()) throw TruncationError("cannot invert a series with no known non-zero term");
  const int v = f.valuation();
  const Scalar a0 = f.terms().begin()->second;
  int prec = f.exact() ? limit : std::min<long>(limit, static_cast<long>(f.prec()) - 2L * v);
  if (f.exact() && f.terms().size() == 1) prec = kExact;
  ScalarSeries g(prec);
  // g = z^{-v} (b_0 + b_1 z + ...), sum_j a_{v+j} b_{m-j} = [m == 0].
  std::vector<Scalar> b;
  for (int m = 0; -v + m < prec; ++m) {
    Scalar s = m == 0 ? Scalar(1) : Scalar(0);
    for (int j = 1; j <= m; ++j) {
      auto it = f.terms().find(v + j);
      if (it != f.terms().end()) s -= it->second * b[m - j];
    }
    b.push_back(s / a0);
    g.set(-v + m, b.back());
    if (f.terms().size() == 1) break;
  }
  return g;
}

ScalarSeries power(const ScalarSeries& f, int k, int limit) {
  if (k < 0) return power(inverse(f, limit), -k, limit);
  ScalarSeries r = ScalarSeries::monomial(0, Scalar(1));
  ScalarSeries base = f;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

ScalarSeries compose(const ScalarSeries& f, const ScalarSeries& g) {
  if (!f.terms().empty() && f.terms().begin()->first < 0) {
    throw InputError("compose needs a power series on the outside");
  }
  if (g.valuation() < 1) throw InputError("compose needs an inner series without constant term");
  const int vg = g.valuation();
  // Terms of f at and above its precision are unknown: they contribute O(z^{prec * vg}).
  ScalarSeries result(clamp_prec(f.exact() ? static_cast<long>(kExact) : static_cast<long>(f.prec()) * vg));
  ScalarSeries gk = ScalarSeries::monomial(0, Scalar(1));
  int k = 0;
  for (const auto& [e, c] : f.terms()) {
    if (static_cast<long>(e) * vg >= result.prec() && !result.exact()) break;
    while (k < e) {
      gk = gk * g;
      ++k;
    }
    result = result + gk * c;
  }
  return result;
}

}  // namespace tqft
