#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tqft/frobenius.hpp"
#include "tqft/mpoly.hpp"
#include "tqft/series.hpp"

namespace tqft {

struct CurveDisc {
  std::map<int, Scalar> x;
  std::map<int, Scalar> y;
};

// Disjoint discs with x = z^2 + O(z^3), y = z + O(z^2). Coefficients are known below z^N.
class LocalSpectralCurve {
 public:
  // Throws InputError unless every disc has the normalized shape.
  LocalSpectralCurve(std::vector<CurveDisc> discs, int truncation);

  int num_discs() const { return static_cast<int>(discs_.size()); }
  int truncation() const { return truncation_; }
  const std::vector<CurveDisc>& discs() const { return discs_; }
  ScalarSeries x(int disc) const;
  ScalarSeries y(int disc) const;
  LocalSpectralCurve with_truncation(int truncation) const { return LocalSpectralCurve(discs_, truncation); }

 private:
  std::vector<CurveDisc> discs_;
  int truncation_;
};

LocalSpectralCurve airy_curve(int truncation = 24);

// sigma(z) = -z + O(z^2) with x(sigma(z)) = x(z), known below z^{N-1}.
ScalarSeries involution(const LocalSpectralCurve& curve, int disc);

// W_{0,2}(z_1, z_2)/(dz_1 dz_2) expanded for |z_1| < |z_2|: a series in z_1 whose coefficients
// are polynomials in u_2 = 1/z_2. Zero across different discs.
PolySeries w02_series(const LocalSpectralCurve& curve, int disc1, int disc2);

// K_k(z) for k = 1..kmax, where the recursion kernel is sum_k K_k(z) u_1^{k+1} dz_1/dz:
// (sigma(z)^k - z^k) / ((y(sigma(z)) - y(z)) x'(z)).
std::vector<ScalarSeries> recursion_kernel(const LocalSpectralCurve& curve, int disc, int kmax);

// W_{g,n}/(dz_1...dz_n) as polynomials in u_i = 1/z_i, one per (disc tuple, slot tuple).
// Slot tuples are empty for the plain recursion.
class Correlator {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  Correlator(int genus, int n) : genus_(genus), n_(n) {}
  int genus() const { return genus_; }
  int n() const { return n_; }
  const std::map<Key, MPoly>& entries() const { return entries_; }
  // Zero polynomial when absent.
  MPoly entry(const std::vector<int>& discs, const std::vector<int>& slots = {}) const;
  void set(Key key, MPoly value) { entries_[std::move(key)] = std::move(value); }

 private:
  int genus_;
  int n_;
  std::map<Key, MPoly> entries_;
};

using CorrelatorTable = std::map<std::pair<int, int>, Correlator>;

// All W_{g,n} with 1 <= 2g - 2 + n <= max_complexity.
CorrelatorTable toprec_run(const LocalSpectralCurve& curve, int max_complexity);
// The recursion twisted by a commutative Frobenius algebra, with W_{0,2} replaced by W_{0,2} eta.
CorrelatorTable twisted_toprec_run(const LocalSpectralCurve& curve, const FrobeniusAlgebra& alg,
                                   int max_complexity);

}  // namespace tqft
