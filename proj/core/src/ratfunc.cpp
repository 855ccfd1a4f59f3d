#include "tqft/ratfunc.hpp"

#include "tqft/errors.hpp"

namespace tqft {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int e, const Scalar& c) {
  std::vector<Scalar> v(e + 1);
  v[e] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Scalar(-1); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Scalar> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Scalar& k) const {
  std::vector<Scalar> v = c_;
  for (auto& x : v) x *= k;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  std::vector<Scalar> v;
  for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::shifted(const Scalar& a) const {
  // Horner with the linear polynomial t + a.
  Poly acc;
  const Poly lin({a, Scalar(1)});
  for (int i = degree(); i >= 0; --i) acc = acc * lin + Poly::constant(c_[i]);
  return acc;
}

Scalar Poly::evaluate(const Scalar& t) const {
  Scalar acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * t + c_[i];
  return acc;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[i];
    if (c == 0) continue;
    Scalar a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) out += tqft::to_string(a);
    if (i > 0) {
      if (a != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw AlgebraError("polynomial division by zero");
  Poly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly t = Poly::monomial(r.degree() - b.degree(), r.lead() / b.lead());
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Scalar(1) / a.lead());
}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw AlgebraError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = gcd(num, den);
  num_ = divmod(num, g).first;
  den_ = divmod(den, g).first;
  Scalar k = Scalar(1) / den_.lead();
  num_ = num_ * k;
  den_ = den_ * k;
}

RatFunc RatFunc::from_laurent(const MPoly& p) {
  if (p.nvars() > 1) throw InputError("expected a univariate Laurent polynomial");
  int low = 0;
  for (const auto& [e, c] : p.terms()) low = std::min(low, e.empty() ? 0 : e[0]);
  Poly num;
  for (const auto& [e, c] : p.terms()) num = num + Poly::monomial((e.empty() ? 0 : e[0]) - low, c);
  return RatFunc(num, Poly::monomial(-low, Scalar(1)));
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + o * Scalar(-1); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw AlgebraError("rational function division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}
RatFunc RatFunc::operator*(const Scalar& k) const { return RatFunc(num_ * k, den_); }

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

namespace {

ScalarSeries poly_series(const Poly& p) {
  ScalarSeries s;
  for (int i = 0; i <= p.degree(); ++i) s.set(i, p[i]);
  return s;
}

}  // namespace

ScalarSeries RatFunc::expand_at(const Scalar& t0, int prec) const {
  if (is_zero()) return ScalarSeries(prec);
  ScalarSeries n = poly_series(num_.shifted(t0));
  ScalarSeries d = poly_series(den_.shifted(t0));
  return (n * inverse(d, prec - n.valuation())).truncated(prec);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_ == Poly::constant(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace tqft
