#include "tqft/catalan.hpp"

#include <algorithm>
#include <mutex>

#include "tqft/eco.hpp"
#include "tqft/errors.hpp"
#include "tqft/linalg.hpp"

namespace tqft {

namespace {

constexpr int kMaxComplexity = 3;
constexpr int kSurplus = 5;

void check_stable(int genus, int n) {
  if (genus < 0 || n < 1 || 2 * genus - 2 + n <= 0) {
    throw InputError("F_{g,n} needs g >= 0, n >= 1 and 2g - 2 + n > 0");
  }
  if (2 * genus - 2 + n > kMaxComplexity) {
    throw GuardError("2g - 2 + n = " + std::to_string(2 * genus - 2 + n) + " exceeds the supported maximum " +
                     std::to_string(kMaxComplexity));
  }
}

// Dense tensor of shape dims, row-major.
struct DenseTensor {
  std::vector<int> dims;
  std::vector<Scalar> v;
};

DenseTensor mode_product(const DenseTensor& t, int axis, const Matrix& a) {
  long outer = 1, inner = 1;
  for (int i = 0; i < axis; ++i) outer *= t.dims[i];
  for (size_t i = axis + 1; i < t.dims.size(); ++i) inner *= t.dims[i];
  const int in = t.dims[axis];
  DenseTensor out{t.dims, {}};
  out.dims[axis] = a.rows();
  out.v.assign(static_cast<size_t>(outer) * a.rows() * inner, Scalar(0));
  for (long o = 0; o < outer; ++o)
    for (int c = 0; c < in; ++c)
      for (long i = 0; i < inner; ++i) {
        const Scalar& x = t.v[(o * in + c) * inner + i];
        if (x == 0) continue;
        for (int r = 0; r < a.rows(); ++r) {
          const Scalar& m = a(r, c);
          if (m != 0) out.v[(o * a.rows() + r) * inner + i] += m * x;
        }
      }
  return out;
}

std::vector<int> unflatten(long index, const std::vector<int>& dims) {
  std::vector<int> idx(dims.size());
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(index % dims[i]);
    index /= dims[i];
  }
  return idx;
}

Scalar two_pow(int e) { return pow(Scalar(2), e); }

}  // namespace

MPoly f_series(int genus, int n, int max_degree) {
  if (genus < 0 || n < 1) throw InputError("f_series needs g >= 0 and n >= 1");
  MPoly f(n);
  std::map<std::vector<int>, Scalar> sorted_cache;
  std::vector<int> mu(n, 1);
  if (max_degree < 1) return f;
  while (true) {
    int sum = 0;
    for (int m : mu) sum += m;
    if (sum % 2 == 0) {
      std::vector<int> key = mu;
      std::sort(key.begin(), key.end());
      auto it = sorted_cache.find(key);
      if (it == sorted_cache.end()) {
        Scalar c(count(genus, key));
        for (int m : key) c /= m;
        it = sorted_cache.emplace(key, c).first;
      }
      f.add_term(mu, it->second);
    }
    int pos = n - 1;
    while (pos >= 0 && ++mu[pos] > max_degree) mu[pos--] = 1;
    if (pos < 0) break;
  }
  return f;
}

RatFunc x_of_t() { return RatFunc(Poly({2, 0, 2}), Poly({-1, 0, 1})); }
RatFunc z_of_t() { return RatFunc(Poly({1, 1}), Poly({-1, 1})); }
RatFunc dt_dx() { return RatFunc(Poly({-1, 0, 2, 0, -1}), Poly({0, 8})); }

ScalarSeries inverse_x_in_s(int prec) {
  // 1/x = s(s - 2) / (2(s^2 - 2s + 2)).
  return (RatFunc(Poly::constant(1)) / x_of_t()).expand_at(Scalar(-1), prec);
}

const LaurentPolynomial& f_polynomial(int genus, int n) {
  check_stable(genus, n);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, LaurentPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({genus, n});
    if (it != cache.end()) return it->second;
  }

  const int top = 6 * genus - 6 + 3 * n;
  const int bound = std::min(top, 2 * (3 * genus - 3 + n) + 1);
  const int width = 2 * bound + 1;
  const int rows = width + kSurplus;

  // Per variable: t^k = (s - 1)^k and x^{-mu} = u(s)^mu as series in s = t + 1.
  const ScalarSeries u = inverse_x_in_s(rows);
  const ScalarSeries s_minus_one = ScalarSeries::monomial(0, Scalar(-1)) + ScalarSeries::monomial(1, Scalar(1));
  Matrix m(rows, width), ufull(rows, rows);
  for (int k = 0; k < width; ++k) {
    ScalarSeries p = power(s_minus_one, k - bound, rows).truncated(rows);
    for (int j = 0; j < rows; ++j) m(j, k) = p[j];
  }
  ScalarSeries up = ScalarSeries::monomial(0, Scalar(1));
  for (int mu = 0; mu < rows; ++mu) {
    for (int j = 0; j < rows; ++j) ufull(j, mu) = up.truncated(rows)[j];
    up = up * u;
  }
  Matrix m0(width, width), u0(width, width);
  for (int j = 0; j < width; ++j)
    for (int k = 0; k < width; ++k) {
      m0(j, k) = m(j, k);
      u0(j, k) = ufull(j, k);
    }
  auto m0inv = inverse(m0);
  if (!m0inv) throw AlgebraError("Laurent fit basis is singular");
  const Matrix fit = *m0inv * u0;

  const MPoly series = f_series(genus, n, rows - 1);
  DenseTensor a{std::vector<int>(n, rows), {}};
  long total = 1;
  for (int i = 0; i < n; ++i) total *= rows;
  a.v.assign(total, Scalar(0));
  for (const auto& [e, c] : series.terms()) {
    long idx = 0;
    for (int x : e) idx = idx * rows + x;
    a.v[idx] = c;
  }
  DenseTensor a0{std::vector<int>(n, width), {}};
  long total0 = 1;
  for (int i = 0; i < n; ++i) total0 *= width;
  a0.v.resize(total0);
  for (long i = 0; i < total0; ++i) {
    auto idx = unflatten(i, a0.dims);
    long j = 0;
    for (int x : idx) j = j * rows + x;
    a0.v[i] = a.v[j];
  }

  DenseTensor c = a0;
  for (int ax = 0; ax < n; ++ax) c = mode_product(c, ax, fit);
  DenseTensor lhs = c, rhs = a;
  for (int ax = 0; ax < n; ++ax) {
    lhs = mode_product(lhs, ax, m);
    rhs = mode_product(rhs, ax, ufull);
  }
  for (long i = 0; i < total; ++i) {
    if (lhs.v[i] != rhs.v[i]) {
      throw PolynomialityError("F_{" + std::to_string(genus) + "," + std::to_string(n) +
                               "} is not a Laurent polynomial of degree " + std::to_string(bound) +
                               " in each t_i: surplus coefficients disagree");
    }
  }

  LaurentPolynomial f(n);
  for (long i = 0; i < total0; ++i) {
    if (c.v[i] == 0) continue;
    auto idx = unflatten(i, c.dims);
    for (int& x : idx) x -= bound;
    f.add_term(idx, c.v[i]);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(genus, n), std::move(f)).first->second;
}

namespace {

Scalar inversion_factor(int genus, const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  Scalar k = two_pow(2 * genus - 2 + n);
  if (n % 2) k = -k;
  for (int di : d) k /= Scalar(double_factorial(std::abs(2 * di - 1))) * two_pow(-(2 * di + 1));
  return k;
}

void all_d_tuples(int genus, int n, IntersectionTable& table) {
  const int total = 3 * genus - 3 + n;
  std::vector<int> d(n, 0);
  while (true) {
    int s = 0;
    for (int x : d) s += x;
    if (s == total) table.emplace(IntersectionKey{genus, n, d}, Scalar(0));
    int pos = n - 1;
    while (pos >= 0 && ++d[pos] > total) d[pos--] = 0;
    if (pos < 0) break;
  }
}

}  // namespace

IntersectionTable intersection_numbers(int genus, int n) {
  const LaurentPolynomial& f = f_polynomial(genus, n);
  const int top = 6 * genus - 6 + 3 * n;
  IntersectionTable table;
  all_d_tuples(genus, n, table);
  for (const auto& [e, c] : f.terms()) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg > top) throw PolynomialityError("F_{g,n} has a term above the expected top degree");
    if (deg < top) continue;
    std::vector<int> d;
    for (int x : e) {
      if (x < 1 || x % 2 == 0) throw PolynomialityError("top-degree part of F_{g,n} has an even or negative exponent");
      d.push_back((x - 1) / 2);
    }
    table[IntersectionKey{genus, n, d}] = c * inversion_factor(genus, d);
  }
  return table;
}

LocalSpectralCurve catalan_local_curve(int truncation) {
  CurveDisc disc;
  for (int k = 2; k < truncation; ++k) disc.x[k] = 1;
  disc.y[1] = 1;
  return LocalSpectralCurve({disc, disc}, truncation);
}

MPoly transported_principal_part(const LaurentPolynomial& f, int genus, int n) {
  // d/dzeta (1 - 2u)^k = 2k u^2 (1 - 2u)^{k-1} with u = 1/zeta.
  std::map<int, std::vector<Scalar>> factor;
  auto get = [&](int k) -> const std::vector<Scalar>& {
    auto it = factor.find(k);
    if (it != factor.end()) return it->second;
    std::vector<Scalar> p(k + 2);
    Scalar binom = 1;
    for (int j = 0; j <= k - 1; ++j) {
      p[j + 2] = Scalar(2 * k) * binom * two_pow(j) * (j % 2 ? -1 : 1);
      binom = binom * (k - 1 - j) / (j + 1);
    }
    return factor.emplace(k, std::move(p)).first->second;
  };
  MPoly out(n);
  const Scalar scale = two_pow(2 * genus - 2 + n);
  for (const auto& [e, c] : f.terms()) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x <= 0; })) continue;
    MPoly term = MPoly::constant(n, c * scale);
    for (int i = 0; i < n; ++i) {
      MPoly fi(n);
      const auto& p = get(e[i]);
      for (size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0) continue;
        std::vector<int> ex(n, 0);
        ex[i] = static_cast<int>(j);
        fi.add_term(ex, p[j]);
      }
      term = term * fi;
    }
    out += term;
  }
  return out;
}

IntersectionTable intersection_numbers_toprec(const CorrelatorTable& table, int genus, int n) {
  auto it = table.find({genus, n});
  if (it == table.end()) throw InputError("correlator table lacks (g, n) = (" + std::to_string(genus) + ", " + std::to_string(n) + ")");
  const MPoly w = it->second.entry(std::vector<int>(n, 0));
  const int top = 6 * genus - 6 + 4 * n;
  IntersectionTable out;
  all_d_tuples(genus, n, out);
  for (const auto& [e, c] : w.terms()) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg > top) throw PolynomialityError("W_{g,n} has a pole above the expected order");
    if (deg < top) continue;
    std::vector<int> d;
    Scalar f = c / two_pow(2 * genus - 2 + n);
    for (int x : e) {
      if (x < 2 || x % 2) throw PolynomialityError("top-degree part of W_{g,n} has an odd pole order");
      const int di = (x - 2) / 2;
      d.push_back(di);
      f /= two_pow(2 * di + 1) * (2 * di + 1);
    }
    out[IntersectionKey{genus, n, d}] = f * inversion_factor(genus, d);
  }
  return out;
}

bool WkbReport::ok() const {
  if (!unstable_pins_match) return false;
  return std::all_of(orders.begin(), orders.end(), [](const WkbOrder& o) { return o.vanishes(); });
}

namespace {

RatFunc diagonal(const MPoly& f) {
  MPoly d(1);
  for (const auto& [e, c] : f.terms()) {
    int s = 0;
    for (int x : e) s += x;
    d.add_term({s}, c);
  }
  return RatFunc::from_laurent(d);
}

bool series_agree(const ScalarSeries& a, const ScalarSeries& b) {
  const int prec = std::min(a.prec(), b.prec());
  for (int e = std::min(a.valuation(), b.valuation()); e < prec; ++e)
    if (a[e] != b[e]) return false;
  return true;
}

// Compares the pinned S_0', S_1' with the counting series of F_{0,1} and F_{0,2}(x, x)/2 in s = t + 1.
bool unstable_pins_match(const RatFunc& s0, const RatFunc& s1) {
  constexpr int kOrder = 14;
  const ScalarSeries u = inverse_x_in_s(kOrder);
  const RatFunc dxdt = x_of_t().derivative();
  const RatFunc inv_x = RatFunc(Poly::constant(1)) / x_of_t();

  ScalarSeries g1(kOrder), g2(kOrder);
  const MPoly f01 = f_series(0, 1, kOrder);
  const MPoly f02 = f_series(0, 2, kOrder);
  std::vector<ScalarSeries> upow{ScalarSeries::monomial(0, Scalar(1))};
  for (int k = 1; k <= 2 * kOrder; ++k) upow.push_back(upow.back() * u);
  for (const auto& [e, c] : f01.terms()) g1 = g1 + upow[e[0]] * c;
  for (const auto& [e, c] : f02.terms()) g2 = g2 + upow[e[0] + e[1]] * (c / 2);

  const ScalarSeries lhs1 = ((s0 + inv_x) * dxdt).expand_at(Scalar(-1), kOrder - 1);
  const ScalarSeries lhs2 = (s1 * dxdt).expand_at(Scalar(-1), kOrder - 1);
  return series_agree(lhs1, g1.derivative()) && series_agree(lhs2, g2.derivative());
}

}  // namespace

WkbReport wkb_residual(int max_order) {
  if (max_order < 0) throw InputError("WKB order must be non-negative");
  if (max_order - 1 > kMaxComplexity) {
    throw GuardError("order h^" + std::to_string(max_order) + " needs F_{g,n} with 2g - 2 + n = " +
                     std::to_string(max_order - 1) + ", above the supported maximum " + std::to_string(kMaxComplexity));
  }
  const RatFunc x = x_of_t(), z = z_of_t(), dtdx = dt_dx();
  auto d = [&](const RatFunc& f) { return f.derivative() * dtdx; };
  const RatFunc one(Poly::constant(1));

  WkbReport report;
  report.s_prime.push_back(z * Scalar(-1));
  report.s_prime.push_back(z * d(z) / (one - z * z));
  for (int m = 2; m <= max_order; ++m) {
    RatFunc s;
    for (int genus = 0; 2 * genus <= m; ++genus) {
      const int n = m + 1 - 2 * genus;
      if (n < 1) continue;
      s = s + diagonal(f_polynomial(genus, n)) * (Scalar(1) / Scalar(factorial(n)));
    }
    report.s_prime.push_back(d(s));
  }
  report.s_prime.resize(max_order + 1);

  for (int k = 0; k <= max_order; ++k) {
    RatFunc r = x * report.s_prime[k];
    if (k == 0) r = r + one;
    if (k >= 1) r = r + d(report.s_prime[k - 1]);
    for (int a = 0; a <= k; ++a) r = r + report.s_prime[a] * report.s_prime[k - a];
    report.orders.push_back({k, r});
  }
  report.unstable_pins_match = unstable_pins_match(report.s_prime[0], report.s_prime[1]);
  return report;
}

}  // namespace tqft
