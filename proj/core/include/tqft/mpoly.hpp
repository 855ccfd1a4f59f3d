#pragma once

#include <map>
#include <vector>

#include "tqft/rational.hpp"

namespace tqft {

// Sparse polynomial in a fixed number of variables.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Scalar& c);
  static MPoly monomial(const Exponents& e, const Scalar& c);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Scalar& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Scalar& c) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  // Reorders variables: variable i of this polynomial becomes variable perm[i] of the result.
  MPoly permuted(const std::vector<int>& perm, int new_nvars) const;

 private:
  int nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

inline MPoly operator*(const Scalar& c, const MPoly& p) { return p * c; }

inline bool is_zero(const Scalar& s) { return s == 0; }
inline bool is_zero(const MPoly& p) { return p.is_zero(); }

}  // namespace tqft
