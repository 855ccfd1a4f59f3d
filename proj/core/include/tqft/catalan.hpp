#pragma once

#include <compare>
#include <map>
#include <vector>

#include "tqft/mpoly.hpp"
#include "tqft/ratfunc.hpp"
#include "tqft/series.hpp"
#include "tqft/toprec.hpp"

namespace tqft {

// Exponents may be negative.
using LaurentPolynomial = MPoly;

// Coefficients of F_{g,n}: the term with exponent tuple mu holds C_{g,n}(mu)/prod mu_i, the
// coefficient of prod x_i^{-mu_i}, for 1 <= mu_i <= max_degree.
MPoly f_series(int genus, int n, int max_degree);

// The coordinate t with x = (t+1)/(t-1) + (t-1)/(t+1) = 2(t^2+1)/(t^2-1); large x is the branch
// t -> -1, where z = (t+1)/(t-1) -> 0 and x = z + 1/z.
RatFunc x_of_t();
RatFunc z_of_t();
RatFunc dt_dx();
// 1/x as a power series in s = t + 1, known below s^prec.
ScalarSeries inverse_x_in_s(int prec);

// F_{g,n} as a Laurent polynomial in t_1..t_n, fitted exactly to the counts with at least five
// surplus coefficients per variable. Throws PolynomialityError if the fit is inconsistent and
// GuardError above 2g - 2 + n = 3. Results are cached.
const LaurentPolynomial& f_polynomial(int genus, int n);

struct IntersectionKey {
  int genus;
  int n;
  std::vector<int> d;
  auto operator<=>(const IntersectionKey&) const = default;
};
using IntersectionTable = std::map<IntersectionKey, Scalar>;

// <tau_{d_1} ... tau_{d_n}>_{g,n} for every d with sum 3g - 3 + n, read off the top-degree part
// (-1)^n / 2^{2g-2+n} sum <tau_d> prod |2d_i - 1|!! (t_i/2)^{2d_i+1} of F_{g,n}.
IntersectionTable intersection_numbers(int genus, int n);

// Local charts at the branch points z = 1 and z = -1 of x = z + 1/z, y = -z, in coordinates
// zeta = 1 - z and zeta = 1 + z, both with x = zeta^2/(1 - zeta) and y = zeta after an affine change.
LocalSpectralCurve catalan_local_curve(int truncation = 24);

// 2^{2g-2+n} d_1...d_n F_{g,n} near z_i = 1 for all i, as a polynomial in u_i = 1/zeta_i.
// This is what the recursion on catalan_local_curve produces for disc tuple (0, ..., 0).
MPoly transported_principal_part(const LaurentPolynomial& f, int genus, int n);

// The same intersection numbers read off the top-degree part of W_{g,n} on disc tuple (0, ..., 0).
IntersectionTable intersection_numbers_toprec(const CorrelatorTable& table, int genus, int n);

struct WkbOrder {
  int order;
  RatFunc residual;
  bool vanishes() const { return residual.is_zero(); }
};

struct WkbReport {
  // dS_m/dx for m = 0..max_order as functions of t.
  std::vector<RatFunc> s_prime;
  std::vector<WkbOrder> orders;
  // The pinned S_0', S_1' agree with the counting series of F_{0,1}, F_{0,2} near x = infinity.
  bool unstable_pins_match = false;
  bool ok() const;
};

// Expands (h^2 d^2/dx^2 + h x d/dx + 1) psi / psi for psi = exp(sum_m h^{m-1} S_m), with
// S_m = sum_{2g-2+n = m-1} F_{g,n}(x, ..., x)/n! for m >= 2, and returns the coefficients of
// h^0..h^max_order. Throws GuardError when max_order needs 2g - 2 + n > 3.
WkbReport wkb_residual(int max_order);

}  // namespace tqft
