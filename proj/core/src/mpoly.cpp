#include "tqft/mpoly.hpp"

#include "tqft/errors.hpp"

namespace tqft {

MPoly MPoly::constant(int nvars, const Scalar& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::monomial(const Exponents& e, const Scalar& c) {
  MPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Scalar MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != nvars_) {
    if (terms_.empty() && nvars_ == 0) {
      nvars_ = static_cast<int>(e.size());
    } else {
      throw InputError("monomial has the wrong number of variables");
    }
  }
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly MPoly::operator*(const Scalar& c) const {
  MPoly r = *this;
  r *= c;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(std::max(nvars_, o.nvars_));
  Exponents e(r.nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < r.nvars_; ++i) {
        e[i] = (i < static_cast<int>(e1.size()) ? e1[i] : 0) + (i < static_cast<int>(e2.size()) ? e2[i] : 0);
      }
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::permuted(const std::vector<int>& perm, int new_nvars) const {
  MPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f(new_nvars, 0);
    for (int i = 0; i < nvars_; ++i) f[perm[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

}  // namespace tqft
