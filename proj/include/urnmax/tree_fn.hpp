#pragma once

#include <complex>
#include <vector>

namespace urnmax::tree {

using Complex = std::complex<double>;

struct TreeEvalPolicy {
  double rel_tol = 1e-12;
  long max_terms = 1'000'000;
  int newton_iters = 200;

  void validate() const;
};

/// Right end (1/t)(1 - 1/t)^(t-1) of the real convergence interval of T_t.
double tree_boundary(int t);

/// t-ary tree function T_t(z) = sum_n C(nt, n) z^n / (n(t-1) + 1) for
/// 0 <= z <= tree_boundary(t). The branch through T(0) = 1 of T = 1 + z T^t.
double tree_T(int t, double z, const TreeEvalPolicy& policy = {});

/// R_t(p) = p T_t(q p^(t-1)), the probability that the walk ever rises above
/// slope (t-1)/t by one unit; equals 1 for p >= (t-1)/t.
double tree_R(int t, double p, const TreeEvalPolicy& policy = {});

/// Radius (s/t)(1 - s/t)^(t/s - 1) of the generalized tree series T_{t/s}.
double tree_frac_radius(int t, int s);

/// Generalized tree function T_{t/s}(z) = sum_n z^n C((nt+1)/s, n) / (nt + 1).
Complex tree_T_frac(int t, int s, Complex z, const TreeEvalPolicy& policy = {});

/// The reciprocal series 1 - sum_{n>=1} z^n C((nt-1)/s, n) / (nt - 1) of T_{t/s}.
Complex tree_T_frac_reciprocal(int t, int s, Complex z, const TreeEvalPolicy& policy = {});

/// Roots of p z^t - z^s + q from the generalized tree function.
struct TrinomialRoots {
  /// z_1 .. z_s in the closed unit disk; the last one is exactly 1.
  std::vector<Complex> inside;
  /// y_1 .. y_{t-s}, reciprocals of the roots outside the unit disk.
  std::vector<Complex> outside_reciprocals;
};

/// Requires gcd(s,t) = 1 and 0 < p < s/t. Each series value is Newton-polished
/// on the trinomial and validated against the companion-matrix roots.
TrinomialRoots trinomial_roots(int s, int t, double p, const TreeEvalPolicy& policy = {});

struct GPolynomial {
  /// a_0 = prod (1 - y_i) = P(sup of the walk average <= s/t).
  double a0 = 0.0;
  /// Real ascending coefficients of g(z) = a_0 prod_{i<s} (1 - z / z_i); g has length s.
  std::vector<double> g;
  /// The outside-root reciprocals the above were built from.
  std::vector<Complex> outside_reciprocals;
};

GPolynomial a0_and_g(int s, int t, double p, const TreeEvalPolicy& policy = {});

}  // namespace urnmax::tree
