#pragma once

#include <cstdint>
#include <vector>

#include "urnmax/types.hpp"

namespace urnmax::walk {

// Throughout, M_{r,b}(p) = sup_{n>=1} (r + S_n)/(r + b + n) for a Bernoulli(p) walk S_n,
// and for a reduced threshold s/t the integer level is m = s b - (t - s) r:
//   M_{r,b}(p) <= s/t  <=>  t S_n - n s <= m for all n >= 1.
// a_m denotes the probability of the right-hand event.

/// P(M_{r,b}(p) > (t-1)/t) = R_t(p)^(m+1), m = b (t-1) - r >= 0.
ProbResult sup_tail_high(const WalkParams& w, int t);

/// P(M_{r,b}(p) = (t-1)/t): p - R + q R^(t-1) for m = 0, (1 - R) R^m for m >= 1.
ProbResult sup_point_mass_high(const WalkParams& w, int t);

/// a_0 .. a_{m_max} for threshold s/t (gcd(s,t) = 1). For s = 1 the closed form
/// (1 - tp) q^-(m+1) up to m = t-1 followed by q a_k = a_{k-1} - p a_{k-t}; for s > 1
/// the root-product form a_0 / ((1 - z) prod (1 - y_i z)). All zero when p >= s/t.
std::vector<double> a_m_sequence(int s, int t, double p, int m_max);

/// a_0 .. a_{m_max} by the denominator recurrence a_k = (a_{k-s} - p a_{k-t}) / q
/// seeded with the coefficients of g. Unstable for large m when s > 1 (the inside
/// roots of the trinomial become growing modes); kept as an independent route.
std::vector<double> a_m_recurrence(int s, int t, double p, int m_max);

/// a_m for any integer m, including m < 0 where the first step must go down:
/// a_m = q a_{m+s} for -s <= m < 0 and 0 below -s.
double a_level(int s, int t, double p, std::int64_t m);

/// P(M_{r,b}(p) <= x).
ProbResult sup_cdf(const WalkParams& w, const Threshold& x);

/// P(M_{r,b}(p) = x) = a_m - a_{m-1}.
ProbResult sup_point_mass(const WalkParams& w, const Threshold& x);

/// Root-product evaluation for the walk started at the origin, from the trinomial
/// p z^(2 s) - z^(s + r) + q of the +-1 formulation. The threshold these products
/// answer is (r + s)/(2 s) on the {0,1} scale; any common factor of (s + r, 2 s) is
/// left in the polynomial.
struct RootProducts {
  ProbResult cdf;
  ProbResult point_mass;
  Threshold threshold;
};

RootProducts sup_cdf_roots(double p, int s_param, int r_param);

/// P(M(p) in (1/(k+1), 1/k]), requires p <= 1/(k+1); equals p/q.
ProbResult equidist_interval(double p, int k);

/// P(M(p) in (p, 1/t]) = (1 - t p)/(1 - p) for p <= 1/t.
ProbResult equidist_residual(double p, int t);

/// P(L_{r,b}(p) >= x) for the infimum L, through P(M_{b,r}(1-p) <= 1-x).
ProbResult inf_cdf(const WalkParams& w, const Threshold& x);

}  // namespace urnmax::walk
