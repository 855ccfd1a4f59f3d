#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <string>
#include <type_traits>

#include "tqft/errors.hpp"
#include "tqft/mpoly.hpp"
#include "tqft/rational.hpp"

namespace tqft {

// Precision of a series whose terms are all known.
inline constexpr int kExact = INT_MAX / 4;

inline int clamp_prec(long p) { return p >= kExact / 2 ? kExact : static_cast<int>(p); }

// Formal Laurent series sum_e c_e z^e whose coefficients are known for all e < prec().
template <typename C>
class Series {
 public:
  explicit Series(int prec = kExact) : prec_(prec) {}
  static Series monomial(int e, C c, int prec = kExact) {
    Series s(prec);
    if (e < prec) s.set(e, std::move(c));
    return s;
  }

  int prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  // Lowest exponent with a non-zero coefficient; prec() for the zero series.
  int valuation() const { return terms_.empty() ? prec_ : terms_.begin()->first; }
  const std::map<int, C>& terms() const { return terms_; }

  C operator[](int e) const {
    if (e >= prec_) {
      throw TruncationError("coefficient of z^" + std::to_string(e) + " requested but the series is only known below z^" +
                            std::to_string(prec_) + "; raise the truncation order");
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? C() : it->second;
  }

  void set(int e, C c) {
    if (e >= prec_) return;
    if (is_zero(c)) {
      terms_.erase(e);
    } else {
      terms_[e] = std::move(c);
    }
  }
  void add(int e, const C& c) {
    if (e >= prec_ || is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Series truncated(int prec) const {
    Series s(std::min(prec, prec_));
    for (const auto& [e, c] : terms_)
      if (e < s.prec_) s.terms_.emplace(e, c);
    return s;
  }

  Series operator+(const Series& o) const {
    Series s(std::min(prec_, o.prec_));
    for (const auto& [e, c] : terms_) s.add(e, c);
    for (const auto& [e, c] : o.terms_) s.add(e, c);
    return s;
  }
  Series operator-() const {
    Series s(prec_);
    for (const auto& [e, c] : terms_) s.terms_.emplace(e, c * Scalar(-1));
    return s;
  }
  Series operator-(const Series& o) const { return *this + (-o); }
  Series& operator+=(const Series& o) { return *this = *this + o; }

  Series operator*(const Scalar& k) const {
    Series s(prec_);
    if (k == 0) return s;
    for (const auto& [e, c] : terms_) s.terms_.emplace(e, c * k);
    return s;
  }

  template <typename D>
  auto operator*(const Series<D>& o) const {
    using R = std::conditional_t<std::is_same_v<C, MPoly> || std::is_same_v<D, MPoly>, MPoly, Scalar>;
    const long p1 = static_cast<long>(valuation()) + o.prec();
    const long p2 = static_cast<long>(o.valuation()) + prec_;
    Series<R> s(clamp_prec(std::min(p1, p2)));
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms()) {
        if (e1 + e2 >= s.prec()) break;
        s.add(e1 + e2, R(c1 * c2));
      }
    return s;
  }

  Series derivative() const {
    Series s(clamp_prec(static_cast<long>(prec_) - 1));
    for (const auto& [e, c] : terms_)
      if (e != 0) s.add(e - 1, c * Scalar(e));
    return s;
  }

 private:
  int prec_;
  std::map<int, C> terms_;
};

using ScalarSeries = Series<Scalar>;
using PolySeries = Series<MPoly>;

// 1/f. For exact f with more than one term the result is cut at `limit`.
ScalarSeries inverse(const ScalarSeries& f, int limit);
// f^k for k >= 0, or (1/f)^{-k} using `limit` as for inverse.
ScalarSeries power(const ScalarSeries& f, int k, int limit);
// f(g(z)) for f with non-negative exponents and val(g) >= 1.
ScalarSeries compose(const ScalarSeries& f, const ScalarSeries& g);

// Coefficient of z^{-1} in a * b, with precision checks on both factors.
template <typename D>
D residue_of_product(const ScalarSeries& a, const Series<D>& b) {
  if (b.terms().empty() && a.terms().empty()) return D();
  if (-1 - a.valuation() >= b.prec() || -1 - b.valuation() >= a.prec()) {
    throw TruncationError("residue needs more terms than the truncation order provides; raise it");
  }
  D acc{};
  bool first = true;
  for (const auto& [e, c] : b.terms()) {
    Scalar k = a[-1 - e];
    if (k == 0) continue;
    if (first) {
      acc = c * k;
      first = false;
    } else {
      acc += c * k;
    }
  }
  return acc;
}

}  // namespace tqft
