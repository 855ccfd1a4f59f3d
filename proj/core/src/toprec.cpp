#include "tqft/toprec.hpp"

#include "tqft/zoo.hpp"

namespace tqft {

LocalSpectralCurve::LocalSpectralCurve(std::vector<CurveDisc> discs, int truncation)
    : discs_(std::move(discs)), truncation_(truncation) {
  if (discs_.empty()) throw InputError("a spectral curve needs at least one disc");
  if (truncation_ < 6) throw InputError("truncation order must be at least 6");
  for (size_t a = 0; a < discs_.size(); ++a) {
    const auto& d = discs_[a];
    auto coeff = [](const std::map<int, Scalar>& m, int e) {
      auto it = m.find(e);
      return it == m.end() ? Scalar(0) : it->second;
    };
    for (const auto* m : {&d.x, &d.y})
      for (const auto& [e, c] : *m)
        if (e < 0) throw InputError("disc " + std::to_string(a) + ": x and y must be power series in z");
    if (coeff(d.x, 0) != 0 || coeff(d.x, 1) != 0 || coeff(d.x, 2) != 1) {
      throw InputError("disc " + std::to_string(a) + ": x must start as z^2 + O(z^3)");
    }
    if (coeff(d.y, 0) != 0 || coeff(d.y, 1) != 1) {
      throw InputError("disc " + std::to_string(a) + ": y must start as z + O(z^2)");
    }
  }
}

namespace {

ScalarSeries to_series(const std::map<int, Scalar>& coeffs, int prec) {
  ScalarSeries s(prec);
  for (const auto& [e, c] : coeffs) s.set(e, c);
  return s;
}

}  // namespace

ScalarSeries LocalSpectralCurve::x(int disc) const { return to_series(discs_.at(disc).x, truncation_); }
ScalarSeries LocalSpectralCurve::y(int disc) const { return to_series(discs_.at(disc).y, truncation_); }

LocalSpectralCurve airy_curve(int truncation) {
  CurveDisc d;
  d.x[2] = 1;
  d.y[1] = 1;
  return LocalSpectralCurve({d}, truncation);
}

ScalarSeries involution(const LocalSpectralCurve& curve, int disc) {
  const int n = curve.truncation();
  const ScalarSeries x = curve.x(disc);
  ScalarSeries sigma(n - 1);
  sigma.set(1, Scalar(-1));
  // Adding c z^m to sigma changes x(sigma) by -2c z^{m+1} + higher order.
  for (int m = 2; m <= n - 2; ++m) {
    ScalarSeries partial = sigma.truncated(m + 1);
    ScalarSeries diff = compose(x.truncated(m + 2), partial) - x.truncated(m + 2);
    sigma.set(m, diff[m + 1] / 2);
  }
  ScalarSeries check = compose(x, sigma) - x;
  for (int e = 0; e < check.prec(); ++e) {
    if (check[e] != 0) throw AlgebraError("involution did not converge; x is malformed");
  }
  return sigma;
}

PolySeries w02_series(const LocalSpectralCurve& curve, int disc1, int disc2) {
  const int n = curve.truncation();
  PolySeries s(n);
  if (disc1 != disc2) return s;
  for (int k = 0; k < n; ++k) s.set(k, MPoly::monomial({k + 2}, Scalar(k + 1)));
  return s;
}

namespace {

ScalarSeries denominator_inverse(const LocalSpectralCurve& curve, int disc, const ScalarSeries& sigma) {
  const ScalarSeries y = curve.y(disc);
  ScalarSeries dy = compose(y, sigma) - y;
  if (dy.terms().empty() || dy.valuation() != 1) {
    throw AlgebraError("y(sigma(z)) - y(z) must have a simple zero at z = 0");
  }
  return inverse(dy * curve.x(disc).derivative(), curve.truncation());
}

}  // namespace

std::vector<ScalarSeries> recursion_kernel(const LocalSpectralCurve& curve, int disc, int kmax) {
  ScalarSeries sigma = involution(curve, disc);
  ScalarSeries dinv = denominator_inverse(curve, disc, sigma);
  std::vector<ScalarSeries> ks;
  ScalarSeries sk = ScalarSeries::monomial(0, Scalar(1));
  for (int k = 1; k <= kmax; ++k) {
    sk = sk * sigma;
    ks.push_back((sk - ScalarSeries::monomial(k, Scalar(1))) * dinv);
  }
  return ks;
}

MPoly Correlator::entry(const std::vector<int>& discs, const std::vector<int>& slots) const {
  auto it = entries_.find({discs, slots});
  return it == entries_.end() ? MPoly(n_) : it->second;
}

namespace {

PolySeries tensor(const ScalarSeries& s, const MPoly& q) {
  PolySeries out(s.prec());
  if (q.is_zero()) return out;
  for (const auto& [e, c] : s.terms()) out.set(e, q * c);
  return out;
}

class Engine {
 public:
  Engine(const LocalSpectralCurve& curve, const FrobeniusAlgebra& alg) : curve_(curve), alg_(alg) {
    if (!alg.report().ok()) throw AlgebraError("algebra failed validation: " + alg.report().failures.front());
    if (!alg.commutative_flag()) throw AlgebraError("the twisted recursion needs a commutative algebra");
    r_ = alg.dim();
    const int n = curve.truncation();
    for (int d = 0; d < curve.num_discs(); ++d) {
      Disc data;
      data.sigma = involution(curve, d);
      data.dsigma = data.sigma.derivative();
      data.inv_sigma = inverse(data.sigma, n);
      data.dinv = denominator_inverse(curve, d, data.sigma);
      data.sigma_pow.push_back(ScalarSeries::monomial(0, Scalar(1)));
      data.inv_sigma_pow.push_back(ScalarSeries::monomial(0, Scalar(1)));
      data.z_minus_sigma_sq_inv = power(ScalarSeries::monomial(1, Scalar(1)) - data.sigma, -2, n);
      discs_.push_back(std::move(data));
    }
    const Matrix& inv = alg.eta_inverse();
    split_.assign(r_, Matrix(r_, r_));
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < r_; ++k)
        for (int l = 0; l < r_; ++l) {
          std::vector<Vector> vs{alg.basis_vector(k), alg.basis_vector(l), alg.basis_vector(i)};
          Scalar w = omega(alg, 0, vs);
          if (w == 0) continue;
          for (int a = 0; a < r_; ++a)
            for (int b = 0; b < r_; ++b) split_[i](a, b) += w * inv(k, a) * inv(l, b);
        }
  }

  CorrelatorTable run(int max_complexity) {
    for (int c = 1; c <= max_complexity; ++c)
      for (int g = 0; 2 * g - 2 < c; ++g) {
        const int n = c + 2 - 2 * g;
        if (n >= 1) compute(g, n);
      }
    return table_;
  }

 private:
  struct Disc {
    ScalarSeries sigma, dsigma, inv_sigma, dinv, z_minus_sigma_sq_inv;
    std::vector<ScalarSeries> kernel, sigma_pow, inv_sigma_pow;
  };

  const ScalarSeries& kernel(int d, int k) {
    auto& ks = discs_[d].kernel;
    while (static_cast<int>(ks.size()) < k) {
      const int j = static_cast<int>(ks.size()) + 1;
      ks.push_back((sigma_pow(d, j) - ScalarSeries::monomial(j, Scalar(1))) * discs_[d].dinv);
    }
    return ks[k - 1];
  }
  const ScalarSeries& sigma_pow(int d, int k) {
    auto& ps = discs_[d].sigma_pow;
    while (static_cast<int>(ps.size()) <= k) ps.push_back(ps.back() * discs_[d].sigma);
    return ps[k];
  }
  const ScalarSeries& inv_sigma_pow(int d, int k) {
    auto& ps = discs_[d].inv_sigma_pow;
    while (static_cast<int>(ps.size()) <= k) ps.push_back(ps.back() * discs_[d].inv_sigma);
    return ps[k];
  }

  // W_{0,2}(w, z_j) eta_{a,s} with w = z (at_sigma false) or sigma(z), z_j as output variable `out`.
  PolySeries w02_factor(int d, int other_disc, int a, int s, bool at_sigma, int out, int nvars) {
    const int n = curve_.truncation();
    PolySeries res(n);
    const Scalar& e = alg_.eta()(a, s);
    if (d != other_disc || e == 0) return res;
    for (int k = 0; k < n; ++k) {
      std::vector<int> exps(nvars, 0);
      exps[out] = k + 2;
      MPoly q = MPoly::monomial(exps, Scalar(k + 1) * e);
      res += at_sigma ? tensor(sigma_pow(d, k), q) : tensor(ScalarSeries::monomial(k, Scalar(1), n), q);
    }
    return res;
  }

  // A stable correlator with variable i bound by binding[i]: -1 -> z, -2 -> sigma(z), j >= 0 -> output j.
  PolySeries stable_factor(int d, const MPoly& p, const std::vector<int>& binding, int nvars) {
    std::map<std::pair<int, int>, MPoly> grouped;
    for (const auto& [e, c] : p.terms()) {
      int za = 0, sb = 0;
      std::vector<int> exps(nvars, 0);
      for (size_t i = 0; i < e.size(); ++i) {
        if (binding[i] == -1) {
          za += e[i];
        } else if (binding[i] == -2) {
          sb += e[i];
        } else {
          exps[binding[i]] += e[i];
        }
      }
      auto [it, inserted] = grouped.try_emplace({za, sb}, nvars);
      it->second.add_term(exps, c);
    }
    PolySeries res;
    for (const auto& [ab, q] : grouped) {
      ScalarSeries s = ScalarSeries::monomial(-ab.first, Scalar(1)) * inv_sigma_pow(d, ab.second);
      res += tensor(s, q);
    }
    return res;
  }

  // Factor W_{g,|I|+1}(w, z_I) with first slot a; w = z or sigma(z).
  PolySeries split_factor(int g, int d, int a, bool at_sigma, const std::vector<int>& idx, const std::vector<int>& discs,
                          const std::vector<int>& slots, int nvars) {
    if (g == 0 && idx.size() == 1) {
      return w02_factor(d, discs[idx[0]], a, slots[idx[0]], at_sigma, idx[0] - 1, nvars);
    }
    std::vector<int> sub_discs{d}, sub_slots{a}, binding{at_sigma ? -2 : -1};
    for (int i : idx) {
      sub_discs.push_back(discs[i]);
      sub_slots.push_back(slots[i]);
      binding.push_back(i - 1);
    }
    const auto& corr = table_.at({g, static_cast<int>(idx.size()) + 1});
    return stable_factor(d, corr.entry(sub_discs, sub_slots), binding, nvars);
  }

  void compute(int g, int n) {
    Correlator corr(g, n);
    const int nd = curve_.num_discs();
    std::vector<int> discs(n, 0);
    while (true) {
      std::vector<int> rest(n - 1, 0);
      while (true) {
        compute_entries(g, n, discs, rest, corr);
        int pos = n - 2;
        while (pos >= 0 && ++rest[pos] == r_) rest[pos--] = 0;
        if (pos < 0) break;
      }
      int pos = n - 1;
      while (pos >= 0 && ++discs[pos] == nd) discs[pos--] = 0;
      if (pos < 0) break;
    }
    table_.emplace(std::make_pair(g, n), std::move(corr));
  }

  // Residues against the kernel only see non-positive powers of z in the bracket.
  static constexpr int kNeeded = 1;

  void compute_entries(int g, int n, const std::vector<int>& discs, const std::vector<int>& rest, Correlator& corr) {
    const int d = discs[0];
    const int nvars = n - 1;
    std::vector<int> slots{0};
    slots.insert(slots.end(), rest.begin(), rest.end());

    std::vector<PolySeries> total(r_);
    for (int a = 0; a < r_; ++a)
      for (int b = 0; b < r_; ++b) {
        bool used = false;
        for (int i = 0; i < r_; ++i) used = used || split_[i](a, b) != 0;
        if (!used) continue;
        PolySeries bracket;
        if (g >= 1) {
          if (g == 1 && n == 1) {
            bracket += tensor(discs_[d].z_minus_sigma_sq_inv * alg_.eta()(a, b), MPoly::constant(0, Scalar(1)));
          } else {
            std::vector<int> sub_discs{d, d}, sub_slots{a, b}, binding{-1, -2};
            for (int i = 1; i < n; ++i) {
              sub_discs.push_back(discs[i]);
              sub_slots.push_back(slots[i]);
              binding.push_back(i - 1);
            }
            const auto& c = table_.at({g - 1, n + 1});
            bracket += stable_factor(d, c.entry(sub_discs, sub_slots), binding, nvars);
          }
        }
        for (int g1 = 0; g1 <= g; ++g1)
          for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
            std::vector<int> left, right;
            for (int i = 1; i < n; ++i) (mask >> (i - 1) & 1 ? left : right).push_back(i);
            if ((g1 == 0 && left.empty()) || (g - g1 == 0 && right.empty())) continue;
            PolySeries f1 = split_factor(g1, d, a, false, left, discs, slots, nvars);
            if (f1.terms().empty()) continue;
            PolySeries f2 = split_factor(g - g1, d, b, true, right, discs, slots, nvars);
            if (f2.terms().empty()) continue;
            bracket += f1.truncated(kNeeded - f2.valuation()) * f2.truncated(kNeeded - f1.valuation());
          }
        bracket = bracket.truncated(kNeeded);
        if (bracket.terms().empty()) continue;
        for (int i = 0; i < r_; ++i)
          if (split_[i](a, b) != 0) total[i] += bracket * ScalarSeries::monomial(0, split_[i](a, b));
      }

    for (int i = 0; i < r_; ++i) {
      if (total[i].terms().empty()) continue;
      PolySeries integrand = discs_[d].dsigma * total[i];
      MPoly value(n);
      const int kmax = 1 - integrand.valuation();
      for (int k = 1; k <= kmax; ++k) {
        MPoly res = residue_of_product(kernel(d, k), integrand);
        for (const auto& [e, c] : res.terms()) {
          std::vector<int> exps{k + 1};
          exps.insert(exps.end(), e.begin(), e.end());
          if (static_cast<int>(exps.size()) < n) exps.resize(n, 0);
          value.add_term(exps, c);
        }
      }
      std::vector<int> full_slots = slots;
      full_slots[0] = i;
      if (!value.is_zero()) corr.set({discs, full_slots}, std::move(value));
    }
  }

  const LocalSpectralCurve& curve_;
  const FrobeniusAlgebra& alg_;
  int r_ = 1;
  std::vector<Disc> discs_;
  std::vector<Matrix> split_;
  CorrelatorTable table_;
};

}  // namespace

CorrelatorTable twisted_toprec_run(const LocalSpectralCurve& curve, const FrobeniusAlgebra& alg, int max_complexity) {
  Engine engine(curve, alg);
  return engine.run(max_complexity);
}

CorrelatorTable toprec_run(const LocalSpectralCurve& curve, int max_complexity) {
  auto k = semisimple(1);
  auto twisted = twisted_toprec_run(curve, k, max_complexity);
  CorrelatorTable plain;
  for (const auto& [gn, corr] : twisted) {
    Correlator c(gn.first, gn.second);
    for (const auto& [key, value] : corr.entries()) c.set({key.first, {}}, value);
    plain.emplace(gn, std::move(c));
  }
  return plain;
}

}  // namespace tqft
