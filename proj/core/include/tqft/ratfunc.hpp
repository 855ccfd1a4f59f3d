#pragma once

#include <string>
#include <vector>

#include "tqft/mpoly.hpp"
#include "tqft/rational.hpp"
#include "tqft/series.hpp"

namespace tqft {

// Dense univariate polynomial over Q, coefficients from low to high degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c) { return Poly({c}); }
  static Poly monomial(int e, const Scalar& c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar operator[](int e) const { return e >= 0 && e <= degree() ? c_[e] : Scalar(0); }
  Scalar lead() const { return c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& k) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;
  // p(t + a).
  Poly shifted(const Scalar& a) const;
  Scalar evaluate(const Scalar& t) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Quotient and remainder; throws AlgebraError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic greatest common divisor.
Poly gcd(Poly a, Poly b);

// Reduced quotient of polynomials with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(Poly num, Poly den);
  explicit RatFunc(const Poly& p) : RatFunc(p, Poly::constant(1)) {}
  // A univariate Laurent polynomial stored as an MPoly in one variable.
  static RatFunc from_laurent(const MPoly& p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator*(const Scalar& k) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc derivative() const;
  // Laurent expansion in s around t = t0 (t = t0 + s), known below s^prec.
  ScalarSeries expand_at(const Scalar& t0, int prec) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace tqft
